#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zzag/zigzag.hpp"

namespace zzag {

using NodeId = std::uint32_t;

struct CurveNode {
    NodeId id = 0;
    Weight weight;
    std::string label; // optional role tag: F, C, E1, F', H1, ...
};

struct BlowUpResult;
struct ContractionResult;

// Weighted intersection graph of a curve configuration with transversal
// single intersections: simple graph, no loops, no multi-edges. Blow-up and
// blow-down return new graphs; a frozen graph is never mutated by them.
class DualGraph {
public:
    DualGraph() = default;

    NodeId add_node(Weight weight, std::string label = {});
    void add_edge(NodeId a, NodeId b);

    // Chain with the given weights, first node first; returns node ids in order.
    static std::pair<DualGraph, std::vector<NodeId>> chain(std::span<const Weight> weights);

    bool has_node(NodeId id) const { return nodes_.contains(id); }
    const CurveNode& node(NodeId id) const;
    std::size_t node_count() const { return nodes_.size(); }
    std::vector<NodeId> node_ids() const;
    std::vector<NodeId> neighbors(NodeId id) const;
    std::size_t degree(NodeId id) const;
    bool adjacent(NodeId a, NodeId b) const;
    const std::set<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
    Weight total_weight() const;
    std::optional<NodeId> find_label(const std::string& label) const;

    // Blow-up of a general point of c: weight(c) -= 1, new (-1)-curve meeting
    // only c.
    BlowUpResult blow_up_free(NodeId c, std::string label = {}) const;

    // Blow-up of the intersection point of c and d: the edge is replaced by a
    // new (-1)-curve meeting both, and each loses 1.
    BlowUpResult blow_up_intersection(NodeId c, NodeId d, std::string label = {}) const;

    // Contraction of a (-1)-curve with at most two neighbors; rejects
    // contractions that would force a multi-edge.
    DualGraph blow_down(NodeId e) const;

    bool is_chain() const;
    // Node ids of the chain read from an endpoint.
    std::vector<NodeId> chain_order(NodeId from) const;
    ZigzagType extract_chain_type(NodeId from) const;

    // Greedily contracts (-1)-curves outside `keep` until none remain.
    // Deterministic order: smallest id first; pass a seed to randomize
    // tie-breaking. Throws NotApplicable when stuck with nodes left over.
    ContractionResult replay_contraction(const std::set<NodeId>& keep,
                                         std::optional<std::uint64_t> seed = std::nullopt) const;

    std::string to_dot() const;

private:
    std::map<NodeId, CurveNode> nodes_;
    std::set<std::pair<NodeId, NodeId>> edges_; // normalized (min,max)
    NodeId next_id_ = 0;

    static std::pair<NodeId, NodeId> key(NodeId a, NodeId b);
};

struct BlowUpResult {
    DualGraph graph;
    NodeId exceptional;
};

struct ContractionResult {
    DualGraph graph;
    std::vector<NodeId> steps;
};

} // namespace zzag
