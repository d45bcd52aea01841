// Copyright 2026 the chaintwin contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "chaintwin/types.hpp"

#include <cmath>
#include <cstring>
#include <unordered_set>
#include <utility>

namespace chaintwin
{

DigestBuilder& DigestBuilder::bytes(void const* data, std::size_t len)
{
    auto const* p = static_cast<unsigned char const*>(data);
    for (std::size_t i = 0; i < len; ++i)
    {
        h_ ^= p[i];
        h_ *= 0x100000001b3ull;
    }
    return *this;
}

DigestBuilder& DigestBuilder::u64(std::uint64_t v)
{
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i)
    {
        buf[i] = static_cast<unsigned char>(v >> (8 * i));
    }
    return bytes(buf, sizeof(buf));
}

DigestBuilder& DigestBuilder::f64(double v)
{
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(v));
    std::memcpy(&bits, &v, sizeof(bits));
    return u64(bits);
}

DigestBuilder& DigestBuilder::str(std::string_view s)
{
    return bytes(s.data(), s.size());
}

Digest splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

Link::Link(NodeId x, NodeId y, double lat)
    : a(x < y ? x : y), b(x < y ? y : x), latency(lat)
{
}

Digest compute_block_id(std::uint64_t height, Digest parent_id,
                        NodeId proposer,
                        std::vector<Transaction> const& transactions)
{
    DigestBuilder d;
    d.u64(height).u64(parent_id).u64(proposer);
    for (auto const& tx : transactions)
    {
        d.u64(tx.id);
    }
    return d.value();
}

Block make_block(std::uint64_t height, Digest parent_id, NodeId proposer,
                 std::vector<Transaction> transactions)
{
    Block b;
    b.header.height = height;
    b.header.parent_id = parent_id;
    b.header.proposer = proposer;
    b.header.block_id =
        compute_block_id(height, parent_id, proposer, transactions);
    b.size = 0.0;
    for (auto const& tx : transactions)
    {
        b.size += tx.size;
    }
    b.transactions = std::move(transactions);
    return b;
}

Block genesis_block()
{
    return make_block(0, 0, 0, {});
}

std::uint64_t Chain::total_transactions() const
{
    std::uint64_t n = 0;
    for (auto const& b : blocks)
    {
        n += b.transactions.size();
    }
    return n;
}

bool validate_chain(Chain const& chain)
{
    std::unordered_set<TxId> seen;
    for (std::size_t i = 0; i < chain.blocks.size(); ++i)
    {
        auto const& b = chain.blocks[i];
        if (b.header.height != i)
        {
            return false;
        }
        if (i == 0)
        {
            if (b.header.parent_id != 0)
            {
                return false;
            }
        }
        else
        {
            auto const& prev = chain.blocks[i - 1];
            if (b.header.parent_id != prev.header.block_id)
            {
                return false;
            }
            if (b.header.commit_time < prev.header.commit_time)
            {
                return false;
            }
        }
        double sum = 0.0;
        for (auto const& tx : b.transactions)
        {
            sum += tx.size;
            if (!seen.insert(tx.id).second)
            {
                return false;
            }
        }
        if (std::abs(sum - b.size) > 1e-12)
        {
            return false;
        }
    }
    return true;
}

} // namespace chaintwin
