// Copyright 2026 the chaintwin contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "chaintwin/topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chaintwin
{

std::vector<Link> Topology::links() const
{
    std::vector<Link> out;
    for (auto const& node : nodes)
    {
        for (NodeId p : node.peers)
        {
            if (node.id < p)
            {
                out.emplace_back(node.id, p, link_latency);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void validate_topology(Topology const& topo)
{
    auto const n = topo.nodes.size();
    if (n == 0)
    {
        throw std::invalid_argument("topology: no nodes");
    }
    for (std::size_t i = 0; i < n; ++i)
    {
        auto const& node = topo.nodes[i];
        if (node.id != i)
        {
            throw std::invalid_argument(
                "topology: node ids must be dense 0..n-1, found " +
                std::to_string(node.id) + " at position " + std::to_string(i));
        }
        if (!node.bandwidth.valid())
        {
            throw std::invalid_argument("topology: node " +
                                        std::to_string(node.id) +
                                        " has an invalid bandwidth spec");
        }
        if (node.peers.empty())
        {
            throw std::invalid_argument("topology: node " +
                                        std::to_string(node.id) +
                                        " has no peers");
        }
        for (NodeId p : node.peers)
        {
            if (p == node.id)
            {
                throw std::invalid_argument("topology: node " +
                                            std::to_string(node.id) +
                                            " lists itself as a peer");
            }
            if (p >= n)
            {
                throw std::invalid_argument(
                    "topology: node " + std::to_string(node.id) +
                    " lists unknown peer " + std::to_string(p));
            }
            if (!topo.nodes[p].peers.contains(node.id))
            {
                throw std::invalid_argument(
                    "topology: peer relation not symmetric between " +
                    std::to_string(node.id) + " and " + std::to_string(p));
            }
        }
    }
    if (topo.link_latency < 0.0)
    {
        throw std::invalid_argument("topology: negative link latency");
    }
    if (!is_connected(topo))
    {
        throw std::invalid_argument("topology: graph is not connected");
    }
}

namespace
{

std::vector<std::uint32_t> component_labels(Topology const& topo)
{
    auto const n = topo.nodes.size();
    std::vector<std::uint32_t> label(n, 0);
    std::uint32_t next = 0;
    std::vector<NodeId> stack;
    for (NodeId start = 0; start < n; ++start)
    {
        if (label[start] != 0)
        {
            continue;
        }
        ++next;
        stack.push_back(start);
        label[start] = next;
        while (!stack.empty())
        {
            NodeId v = stack.back();
            stack.pop_back();
            for (NodeId p : topo.nodes[v].peers)
            {
                if (label[p] == 0)
                {
                    label[p] = next;
                    stack.push_back(p);
                }
            }
        }
    }
    return label;
}

} // namespace

bool is_connected(Topology const& topo)
{
    auto const labels = component_labels(topo);
    return std::all_of(labels.begin(), labels.end(),
                       [](std::uint32_t l) { return l == 1; });
}

std::vector<NodeId> largest_component(Topology const& topo)
{
    auto const labels = component_labels(topo);
    if (labels.empty())
    {
        return {};
    }
    std::uint32_t const max_label =
        *std::max_element(labels.begin(), labels.end());
    std::vector<std::size_t> count(max_label + 1, 0);
    for (auto l : labels)
    {
        ++count[l];
    }
    std::uint32_t best = 1;
    for (std::uint32_t l = 1; l <= max_label; ++l)
    {
        if (count[l] > count[best])
        {
            best = l;
        }
    }
    std::vector<NodeId> out;
    for (NodeId v = 0; v < labels.size(); ++v)
    {
        if (labels[v] == best)
        {
            out.push_back(v);
        }
    }
    return out;
}

double mean_degree(Topology const& topo)
{
    double sum = 0.0;
    for (auto const& node : topo.nodes)
    {
        sum += static_cast<double>(node.peers.size());
    }
    return topo.nodes.empty() ? 0.0 : sum / static_cast<double>(topo.size());
}

Topology generate_topology(std::uint32_t n, std::uint32_t k, GaussianSpec bw,
                           RngStream& rng, double floor)
{
    if (n < 2)
    {
        throw std::invalid_argument("generate_topology: need at least 2 nodes");
    }
    if (k < 1 || k >= n)
    {
        throw std::invalid_argument(
            "generate_topology: peers per node must satisfy 1 <= k < n (got "
            "k=" +
            std::to_string(k) + ", n=" + std::to_string(n) + ")");
    }
    if (!bw.valid())
    {
        throw std::invalid_argument(
            "generate_topology: invalid bandwidth spec");
    }

    Topology topo;
    topo.nodes.resize(n);
    for (NodeId i = 0; i < n; ++i)
    {
        topo.nodes[i].id = i;
        // Per-node distribution: the mean is a truncated draw from the
        // network-wide spec, the spread a fraction of the network-wide std.
        double const mean = std::max(floor, rng.normal(bw.mean, bw.std));
        double const std_dev = bw.std * rng.uniform();
        topo.nodes[i].bandwidth = GaussianSpec{mean, std_dev};
    }

    // Wire each node up to degree k, counting edges contributed by earlier
    // nodes against the budget. Bounded retries; stragglers that cannot reach
    // k keep whatever they got and the repair pass guarantees degree >= 1.
    for (NodeId i = 0; i < n; ++i)
    {
        std::uint32_t attempts = 0;
        std::uint32_t const max_attempts = 16 * n;
        while (topo.nodes[i].peers.size() < k && attempts++ < max_attempts)
        {
            NodeId const j = static_cast<NodeId>(rng.uniform_int(n));
            if (j == i || topo.nodes[i].peers.contains(j) ||
                topo.nodes[j].peers.size() >= k)
            {
                continue;
            }
            topo.nodes[i].peers.insert(j);
            topo.nodes[j].peers.insert(i);
        }
    }

    // A node can end up isolated when everyone else filled up first; give it
    // one random edge so the repair below has something to attach to.
    for (NodeId i = 0; i < n; ++i)
    {
        while (topo.nodes[i].peers.empty())
        {
            NodeId const j = static_cast<NodeId>(rng.uniform_int(n));
            if (j == i)
            {
                continue;
            }
            topo.nodes[i].peers.insert(j);
            topo.nodes[j].peers.insert(i);
        }
    }

    // Repair connectivity: link each remaining component to the first one
    // through random representatives.
    auto labels = component_labels(topo);
    std::uint32_t max_label = *std::max_element(labels.begin(), labels.end());
    while (max_label > 1)
    {
        std::vector<NodeId> first, other;
        for (NodeId v = 0; v < n; ++v)
        {
            (labels[v] == 1 ? first : other).push_back(v);
        }
        NodeId const a = first[rng.uniform_int(first.size())];
        NodeId const b = other[rng.uniform_int(other.size())];
        topo.nodes[a].peers.insert(b);
        topo.nodes[b].peers.insert(a);
        labels = component_labels(topo);
        max_label = *std::max_element(labels.begin(), labels.end());
    }

    validate_topology(topo);
    return topo;
}

double sample_bandwidth(GaussianSpec const& spec, RngStream& rng, double floor)
{
    return std::max(floor, rng.normal(spec.mean, spec.std));
}

double effective_bandwidth(NodeState const& sender, NodeState const& receiver,
                           RngStream& rng, double floor)
{
    if (sender.id == receiver.id)
    {
        throw std::logic_error("effective_bandwidth: sender == receiver");
    }
    return std::min(sample_bandwidth(sender.bandwidth, rng, floor),
                    sample_bandwidth(receiver.bandwidth, rng, floor));
}

double transmission_delay(double size_mb, double latency_s, double b_eff)
{
    if (b_eff <= 0.0)
    {
        throw std::logic_error("transmission_delay: non-positive bandwidth");
    }
    return latency_s + size_mb / b_eff;
}

} // namespace chaintwin
