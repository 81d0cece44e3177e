#include "zzag/dual_graph.hpp"

#include <random>

#include <algorithm>
#include <sstream>

namespace zzag {

std::pair<NodeId, NodeId> DualGraph::key(NodeId a, NodeId b) {
    return {std::min(a, b), std::max(a, b)};
}

NodeId DualGraph::add_node(Weight weight, std::string label) {
    NodeId id = next_id_++;
    nodes_[id] = CurveNode{id, std::move(weight), std::move(label)};
    return id;
}

void DualGraph::add_edge(NodeId a, NodeId b) {
    if (a == b) throw DomainError("loop edge rejected");
    if (!has_node(a) || !has_node(b)) throw DomainError("edge references unknown node");
    edges_.insert(key(a, b));
}

std::pair<DualGraph, std::vector<NodeId>> DualGraph::chain(std::span<const Weight> weights) {
    DualGraph g;
    std::vector<NodeId> ids;
    ids.reserve(weights.size());
    for (const Weight& w : weights) ids.push_back(g.add_node(w));
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) g.add_edge(ids[i], ids[i + 1]);
    return {std::move(g), std::move(ids)};
}

const CurveNode& DualGraph::node(NodeId id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw DomainError("unknown node id " + std::to_string(id));
    return it->second;
}

std::vector<NodeId> DualGraph::node_ids() const {
    std::vector<NodeId> out;
    out.reserve(nodes_.size());
    for (const auto& [id, n] : nodes_) out.push_back(id);
    return out;
}

std::vector<NodeId> DualGraph::neighbors(NodeId id) const {
    node(id);
    std::vector<NodeId> out;
    for (const auto& [a, b] : edges_) {
        if (a == id) out.push_back(b);
        if (b == id) out.push_back(a);
    }
    return out;
}

std::size_t DualGraph::degree(NodeId id) const { return neighbors(id).size(); }

bool DualGraph::adjacent(NodeId a, NodeId b) const { return edges_.contains(key(a, b)); }

Weight DualGraph::total_weight() const {
    Weight sum = 0;
    for (const auto& [id, n] : nodes_) sum += n.weight;
    return sum;
}

std::optional<NodeId> DualGraph::find_label(const std::string& label) const {
    for (const auto& [id, n] : nodes_)
        if (n.label == label) return id;
    return std::nullopt;
}

BlowUpResult DualGraph::blow_up_free(NodeId c, std::string label) const {
    node(c);
    DualGraph g = *this;
    g.nodes_[c].weight -= 1;
    NodeId e = g.add_node(Weight(-1), std::move(label));
    g.add_edge(c, e);
    return {std::move(g), e};
}

BlowUpResult DualGraph::blow_up_intersection(NodeId c, NodeId d, std::string label) const {
    if (!adjacent(c, d)) throw DomainError("no intersection between the given curves");
    DualGraph g = *this;
    g.edges_.erase(key(c, d));
    g.nodes_[c].weight -= 1;
    g.nodes_[d].weight -= 1;
    NodeId e = g.add_node(Weight(-1), std::move(label));
    g.add_edge(c, e);
    g.add_edge(d, e);
    return {std::move(g), e};
}

DualGraph DualGraph::blow_down(NodeId e) const {
    const CurveNode& n = node(e);
    if (n.weight != -1)
        throw NotApplicable("cannot contract a curve of self-intersection " + n.weight.str());
    auto nb = neighbors(e);
    if (nb.size() > 2) throw NotApplicable("contraction would leave a non-transversal triple point");
    if (nb.size() == 2 && adjacent(nb[0], nb[1]))
        throw NotApplicable("contraction would create a tangency (multi-edge)");
    DualGraph g = *this;
    for (NodeId v : nb) {
        g.edges_.erase(key(e, v));
        g.nodes_[v].weight += 1;
    }
    g.nodes_.erase(e);
    if (nb.size() == 2) g.add_edge(nb[0], nb[1]);
    return g;
}

bool DualGraph::is_chain() const {
    if (nodes_.empty()) return false;
    if (nodes_.size() == 1) return edges_.empty();
    std::size_t ends = 0;
    for (const auto& [id, n] : nodes_) {
        std::size_t d = degree(id);
        if (d > 2 || d == 0) return false;
        if (d == 1) ++ends;
    }
    if (ends != 2) return false;
    // connectivity: walk from one endpoint
    NodeId start = 0;
    for (const auto& [id, n] : nodes_)
        if (degree(id) == 1) {
            start = id;
            break;
        }
    return chain_order(start).size() == nodes_.size();
}

std::vector<NodeId> DualGraph::chain_order(NodeId from) const {
    node(from);
    if (nodes_.size() == 1) return {from};
    if (degree(from) != 1) throw DomainError("not an endpoint of the chain");
    std::vector<NodeId> order{from};
    NodeId prev = from, cur = neighbors(from)[0];
    while (true) {
        order.push_back(cur);
        auto nb = neighbors(cur);
        if (nb.size() > 2) throw DomainError("not a chain: branching at node " + std::to_string(cur));
        std::optional<NodeId> next;
        for (NodeId v : nb)
            if (v != prev) next = v;
        if (!next) break;
        prev = cur;
        cur = *next;
    }
    return order;
}

ZigzagType DualGraph::extract_chain_type(NodeId from) const {
    if (!is_chain()) throw DomainError("not a chain");
    auto order = chain_order(from);
    std::vector<Weight> w;
    w.reserve(order.size());
    for (NodeId id : order) w.push_back(node(id).weight);
    return ZigzagType(std::move(w));
}

ContractionResult DualGraph::replay_contraction(const std::set<NodeId>& keep,
                                                     std::optional<std::uint64_t> seed) const {
    for (NodeId id : keep) node(id);
    DualGraph g = *this;
    std::vector<NodeId> steps;
    std::mt19937_64 rng(seed.value_or(0));
    while (true) {
        std::vector<NodeId> candidates;
        bool leftover = false;
        for (const auto& [id, n] : g.nodes_) {
            if (keep.contains(id)) continue;
            leftover = true;
            if (n.weight == -1 && g.degree(id) <= 2) candidates.push_back(id);
        }
        if (!leftover) break;
        if (candidates.empty())
            throw NotApplicable("not contractible: stuck with non-(-1) curves outside keep set");
        NodeId pick = candidates.front();
        if (seed) pick = candidates[rng() % candidates.size()];
        g = g.blow_down(pick);
        steps.push_back(pick);
    }
    return {std::move(g), std::move(steps)};
}

std::string DualGraph::to_dot() const {
    std::ostringstream os;
    os << "graph dual {\n  node [shape=circle];\n";
    for (const auto& [id, n] : nodes_) {
        os << "  n" << id << " [label=\"";
        if (!n.label.empty()) os << n.label << "\\n";
        os << n.weight.str() << "\"];\n";
    }
    for (const auto& [a, b] : edges_) os << "  n" << a << " -- n" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace zzag
