// Copyright 2026 the chaintwin contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "chaintwin/rng.hpp"
#include "chaintwin/types.hpp"

#include <vector>

namespace chaintwin
{

// Connected peer-to-peer overlay. Nodes are dense 0..n-1; peer sets are kept
// symmetric. Links are derivable from the peer sets, so only the latency knob
// is stored explicitly.
struct Topology
{
    std::vector<NodeState> nodes;
    double link_latency = 0.0; // seconds, applies to every link

    std::size_t size() const { return nodes.size(); }
    std::set<NodeId> const& peers(NodeId id) const { return nodes[id].peers; }
    double latency(NodeId, NodeId) const { return link_latency; }

    // All links, ordered; latency filled from the topology knob.
    std::vector<Link> links() const;
};

// Throws std::invalid_argument with a precise message when the topology
// violates an invariant (dense ids, symmetric peer sets, no self-peering,
// valid bandwidth specs, connectivity).
void validate_topology(Topology const& topo);

bool is_connected(Topology const& topo);

// Node ids of the largest connected component, ascending.
std::vector<NodeId> largest_component(Topology const& topo);

double mean_degree(Topology const& topo);

// Random connected overlay: every node is assigned a personal bandwidth
// distribution drawn from `bw` and roughly `k` random peers. Peer budgets are
// respected while wiring, so the mean degree lands near k instead of the ~2k
// a draw-and-symmetrize scheme would produce; connectivity is repaired with
// random cross edges afterwards.
Topology generate_topology(std::uint32_t n, std::uint32_t k, GaussianSpec bw,
                           RngStream& rng,
                           double floor = GaussianSpec::kDefaultFloor);

// One truncated-normal draw from the node's bandwidth distribution.
double sample_bandwidth(GaussianSpec const& spec, RngStream& rng,
                        double floor = GaussianSpec::kDefaultFloor);

// Effective bandwidth of one message between two peers: both endpoints sample
// their own distribution and the link runs at the slower of the two.
double effective_bandwidth(NodeState const& sender, NodeState const& receiver,
                           RngStream& rng,
                           double floor = GaussianSpec::kDefaultFloor);

// latency + size / bandwidth; bandwidth must be positive.
double transmission_delay(double size_mb, double latency_s, double b_eff);

} // namespace chaintwin
