// Copyright 2026 the chaintwin contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "chaintwin/event_queue.hpp"

namespace chaintwin
{

char const* to_string(EventKind k)
{
    switch (k)
    {
    case EventKind::TxArrival:
        return "tx_arrival";
    case EventKind::MsgDelivery:
        return "msg_delivery";
    case EventKind::RoundTimeout:
        return "round_timeout";
    }
    return "unknown";
}

Digest Event::payload_digest() const
{
    DigestBuilder d;
    d.u64(static_cast<std::uint64_t>(payload.index()));
    std::visit(
        [&](auto const& p)
        {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, TxArrivalEvent>)
            {
                d.u64(p.tx_index).u64(p.ingress);
            }
            else if constexpr (std::is_same_v<T, MsgDeliveryEvent>)
            {
                d.u64(p.msg_index).u64(p.sender).u64(p.receiver).f64(
                    p.send_time);
            }
            else
            {
                d.u64(p.node).u64(p.height);
            }
        },
        payload);
    return d.value();
}

} // namespace chaintwin
