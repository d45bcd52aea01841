// Copyright 2026 the chaintwin contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "chaintwin/types.hpp"

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <variant>
#include <vector>

namespace chaintwin
{

enum class EventKind : std::uint8_t
{
    TxArrival,
    MsgDelivery,
    RoundTimeout,
};

char const* to_string(EventKind k);

struct TxArrivalEvent
{
    std::uint32_t tx_index = 0;
    NodeId ingress = 0;
};

struct MsgDeliveryEvent
{
    std::uint32_t msg_index = 0; // gossip registry slot
    NodeId sender = 0;
    NodeId receiver = 0;
    double send_time = 0.0;
};

struct RoundTimeoutEvent
{
    NodeId node = 0;
    std::uint64_t height = 0;
};

using EventPayload =
    std::variant<TxArrivalEvent, MsgDeliveryEvent, RoundTimeoutEvent>;

struct Event
{
    double fire_time = 0.0;
    std::uint64_t seq = 0; // insertion order, breaks fire-time ties
    EventPayload payload;

    EventKind kind() const
    {
        return static_cast<EventKind>(payload.index());
    }
    Digest payload_digest() const;
};

// Deterministic priority queue: events pop in (fire_time, seq) order and the
// clock never runs backwards. Scheduling in the past is a logic error.
class EventQueue
{
  public:
    void schedule(double fire_time, EventPayload payload)
    {
        if (fire_time < now_)
        {
            throw std::logic_error("EventQueue: scheduling in the past");
        }
        heap_.push(Event{fire_time, next_seq_++, std::move(payload)});
    }

    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }
    double now() const { return now_; }
    Event const& top() const { return heap_.top(); }

    Event pop()
    {
        Event ev = heap_.top();
        heap_.pop();
        now_ = ev.fire_time;
        return ev;
    }

  private:
    struct Later
    {
        bool operator()(Event const& x, Event const& y) const
        {
            if (x.fire_time != y.fire_time)
            {
                return x.fire_time > y.fire_time;
            }
            return x.seq > y.seq;
        }
    };

    double now_ = 0.0;
    std::uint64_t next_seq_ = 0;
    std::priority_queue<Event, std::vector<Event>, Later> heap_;
};

// Drains the queue through `handle` until it is empty or the next event fires
// after `limit_time`. Returns the fire time of the last processed event (0 if
// none fired). Throws when more than `max_events` fire, which indicates a
// runaway simulation.
template <typename Handler>
double run_until_quiescent(EventQueue& queue, double limit_time,
                           std::uint64_t max_events, Handler&& handle)
{
    double last = 0.0;
    std::uint64_t count = 0;
    while (!queue.empty() && queue.top().fire_time <= limit_time)
    {
        if (++count > max_events)
        {
            throw std::runtime_error(
                "run_until_quiescent: event budget exhausted (runaway "
                "simulation?)");
        }
        Event ev = queue.pop();
        last = ev.fire_time;
        handle(ev);
    }
    return last;
}

} // namespace chaintwin
