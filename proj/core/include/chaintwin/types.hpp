// Copyright 2026 the chaintwin contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <set>
#include <string_view>
#include <vector>

namespace chaintwin
{

using NodeId = std::uint32_t;
using TxId = std::uint64_t;
using Digest = std::uint64_t;

// FNV-1a over the little-endian bytes of whatever is appended. Used for block
// ids, message ids and trace digests; stability across platforms matters more
// than collision resistance here.
class DigestBuilder
{
  public:
    DigestBuilder& bytes(void const* data, std::size_t len);
    DigestBuilder& u64(std::uint64_t v);
    DigestBuilder& f64(double v);
    DigestBuilder& str(std::string_view s);
    Digest value() const { return h_; }

  private:
    Digest h_ = 0xcbf29ce484222325ull;
};

Digest splitmix64(std::uint64_t x);

// Per-node bandwidth model: draws are normal(mean, std) truncated below at a
// positive floor so transmission delays stay finite.
struct GaussianSpec
{
    double mean = 0.0; // MB/s
    double std = 0.0;  // MB/s

    static constexpr double kDefaultFloor = 0.1; // MB/s

    bool valid() const { return mean > 0.0 && std >= 0.0; }
    bool operator==(GaussianSpec const&) const = default;
};

struct NodeState
{
    NodeId id = 0;
    GaussianSpec bandwidth;
    std::set<NodeId> peers;

    bool operator==(NodeState const&) const = default;
};

// Undirected link; endpoints kept ordered so a link compares and hashes the
// same regardless of construction order.
struct Link
{
    NodeId a = 0;
    NodeId b = 0;
    double latency = 0.0; // seconds

    Link() = default;
    Link(NodeId x, NodeId y, double lat = 0.0);

    bool operator==(Link const& o) const { return a == o.a && b == o.b; }
    bool operator<(Link const& o) const
    {
        return a != o.a ? a < o.a : b < o.b;
    }
};

struct Transaction
{
    TxId id = 0;
    double arrival_time = 0.0; // seconds
    double size = 0.0;         // MB

    bool operator==(Transaction const&) const = default;
};

struct BlockHeader
{
    std::uint64_t height = 0;
    Digest block_id = 0;
    Digest parent_id = 0; // 0 for genesis
    NodeId proposer = 0;
    double commit_time = 0.0; // seconds, local to the committing node

    bool operator==(BlockHeader const&) const = default;
};

// Lightweight reference to a chain head; the on-the-wire form carried by
// state messages.
struct BlockRef
{
    std::uint64_t height = 0;
    Digest block_id = 0;

    bool operator==(BlockRef const&) const = default;
    bool operator<(BlockRef const& o) const
    {
        return height != o.height ? height < o.height : block_id < o.block_id;
    }
};

struct Block
{
    BlockHeader header;
    std::vector<Transaction> transactions;
    double size = 0.0; // MB, sum of transaction sizes

    BlockRef ref() const { return {header.height, header.block_id}; }
    bool operator==(Block const&) const = default;
};

// Content digest over (height, parent, proposer, tx ids); commit time is a
// local observation and deliberately excluded.
Digest compute_block_id(std::uint64_t height, Digest parent_id,
                        NodeId proposer,
                        std::vector<Transaction> const& transactions);

Block make_block(std::uint64_t height, Digest parent_id, NodeId proposer,
                 std::vector<Transaction> transactions);

Block genesis_block();

struct Chain
{
    std::vector<Block> blocks;

    bool empty() const { return blocks.empty(); }
    std::size_t size() const { return blocks.size(); }
    Block const& head() const { return blocks.back(); }
    std::uint64_t head_height() const
    {
        return blocks.empty() ? 0 : blocks.back().header.height;
    }
    std::uint64_t total_transactions() const;
    void append(Block b) { blocks.push_back(std::move(b)); }

    bool operator==(Chain const&) const = default;
};

// True iff heights increase by exactly 1 from a height-0 genesis, parent ids
// chain correctly, commit times are non-decreasing, per-block sizes match
// their transactions and no transaction id repeats anywhere in the chain.
bool validate_chain(Chain const& chain);

} // namespace chaintwin
