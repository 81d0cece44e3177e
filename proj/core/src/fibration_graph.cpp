#include "zzag/fibration_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace zzag {

void FibrationGraph::add_vertex(std::string label) {
    if (label.empty()) throw DomainError("empty vertex label");
    vertices_[std::move(label)] = true;
}

void FibrationGraph::add_arrow(std::string id, const std::string& origin,
                               const std::string& target, std::string bar_id) {
    if (!has_vertex(origin) || !has_vertex(target)) throw DomainError("arrow endpoint missing");
    if (arrows_.contains(id)) throw DomainError("duplicate arrow id " + id);
    arrows_[id] = Arrow{id, origin, target, std::move(bar_id)};
}

std::vector<std::string> FibrationGraph::vertices() const {
    std::vector<std::string> out;
    out.reserve(vertices_.size());
    for (const auto& [v, _] : vertices_) out.push_back(v);
    return out;
}

const Arrow& FibrationGraph::arrow(const std::string& id) const {
    auto it = arrows_.find(id);
    if (it == arrows_.end()) throw DomainError("unknown arrow " + id);
    return it->second;
}

std::vector<std::string> FibrationGraph::arrow_ids() const {
    std::vector<std::string> out;
    out.reserve(arrows_.size());
    for (const auto& [id, _] : arrows_) out.push_back(id);
    return out;
}

void FibrationGraph::validate() const {
    for (const auto& [id, a] : arrows_) {
        const Arrow& bar = arrow(a.bar);
        if (bar.bar != id) throw OracleInconsistency("bar involution broken at " + id);
        if (bar.origin != a.target || bar.target != a.origin)
            throw OracleInconsistency("inverse arrow endpoints disagree at " + id);
    }
}

bool FibrationGraph::connected() const {
    if (vertices_.empty()) return false;
    std::set<std::string> seen{vertices_.begin()->first};
    std::deque<std::string> queue{vertices_.begin()->first};
    while (!queue.empty()) {
        std::string v = queue.front();
        queue.pop_front();
        for (const auto& [id, a] : arrows_) {
            std::string next;
            if (a.origin == v) next = a.target;
            else if (a.target == v) next = a.origin;
            else continue;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return seen.size() == vertices_.size();
}

std::size_t FibrationGraph::geometric_edge_count() const {
    std::set<std::string> counted;
    std::size_t n = 0;
    for (const auto& [id, a] : arrows_) {
        if (counted.contains(id)) continue;
        counted.insert(id);
        counted.insert(a.bar);
        ++n;
    }
    return n;
}

std::size_t FibrationGraph::cycle_rank() const {
    if (!connected()) throw DomainError("cycle rank needs a connected graph");
    return geometric_edge_count() - vertex_count() + 1;
}

bool FibrationGraph::is_tree() const { return cycle_rank() == 0; }

std::string FibrationGraph::to_dot() const {
    std::ostringstream os;
    os << "graph fibrations {\n";
    for (const auto& [v, _] : vertices_) os << "  \"" << v << "\";\n";
    std::set<std::string> counted;
    for (const auto& [id, a] : arrows_) {
        if (counted.contains(id)) continue;
        counted.insert(id);
        counted.insert(a.bar);
        os << "  \"" << a.origin << "\" -- \"" << a.target << "\"";
        if (a.bar == id) os << " [label=\"self-inverse\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

TreeCriterionReport tree_criterion(const FibrationGraph& g) {
    TreeCriterionReport report;
    report.hypothesis_holds = g.deep_curve_hypothesis();
    if (report.hypothesis_holds) report.generated = g.is_tree();
    return report;
}

FibrationGraph build_graph(const TransitionOracle& oracle, const std::vector<std::string>& seeds,
                           bool deep_curve_hypothesis) {
    FibrationGraph g;
    g.set_deep_curve_hypothesis(deep_curve_hypothesis);
    std::deque<std::string> queue;
    std::set<std::string> visited;
    for (const auto& s : seeds) {
        g.add_vertex(s);
        if (visited.insert(s).second) queue.push_back(s);
    }
    std::set<std::string> arrow_classes;
    while (!queue.empty()) {
        std::string v = queue.front();
        queue.pop_front();
        for (const Transition& t : oracle(v)) {
            if (!g.has_vertex(t.target)) g.add_vertex(t.target);
            if (visited.insert(t.target).second) queue.push_back(t.target);
            if (arrow_classes.insert(t.arrow_class).second)
                g.add_arrow(t.arrow_class, v, t.target, t.inverse_class);
        }
    }
    for (const std::string& id : g.arrow_ids()) {
        const Arrow& a = g.arrow(id);
        if (!arrow_classes.contains(a.bar))
            throw OracleInconsistency("inverse arrow " + a.bar + " never produced");
    }
    g.validate();
    return g;
}

GraphOfGroups::GraphOfGroups(const FibrationGraph& graph, const GroupOracle& oracle)
    : graph_(&graph), oracle_(&oracle) {
    graph.validate();
}

void GraphOfGroups::set_representative(const std::string& arrow_id, std::string token) {
    const Arrow& a = graph_->arrow(arrow_id);
    reps_[arrow_id] = token;
    if (a.bar != arrow_id) reps_[a.bar] = token + "^-1";
}

const std::string& GraphOfGroups::representative(const std::string& arrow_id) const {
    auto it = reps_.find(arrow_id);
    if (it == reps_.end()) throw DomainError("no representative chosen for arrow " + arrow_id);
    return it->second;
}

void GraphOfGroups::set_loop_square(const std::string& arrow_id, GroupElement g) {
    const Arrow& a = graph_->arrow(arrow_id);
    if (a.bar != arrow_id) throw DomainError("loop square only applies to self-inverse arrows");
    if (!oracle_->in_vertex_group(a.origin, g))
        throw DomainError("loop square must lie in the vertex group");
    loop_squares_[arrow_id] = std::move(g);
}

std::optional<GroupElement> GraphOfGroups::loop_square(const std::string& arrow_id) const {
    auto it = loop_squares_.find(arrow_id);
    if (it == loop_squares_.end()) return std::nullopt;
    return it->second;
}

namespace {

void check_path(const GraphOfGroups& gog, const GroupPath& p) {
    if (p.groups.size() != p.arrows.size() + 1) throw DomainError("ill-typed path: shape");
    std::string v = p.start;
    for (std::size_t i = 0; i < p.groups.size(); ++i) {
        if (!gog.oracle().in_vertex_group(v, p.groups[i]))
            throw DomainError("ill-typed path: group element outside vertex group at " + v);
        if (i < p.arrows.size()) {
            const Arrow& a = gog.graph().arrow(p.arrows[i]);
            if (a.origin != v) throw DomainError("ill-typed path: arrow " + a.id + " not at " + v);
            v = a.target;
        }
    }
}

} // namespace

GroupPath reduce_path(const GraphOfGroups& gog, GroupPath path) {
    check_path(gog, path);
    const GroupOracle& oracle = gog.oracle();
    bool changed = true;
    while (changed) {
        changed = false;
        // slide edge-group elements backwards across their arrow
        for (std::size_t i = 0; i < path.arrows.size(); ++i) {
            const Arrow& a = gog.graph().arrow(path.arrows[i]);
            const GroupElement& after = path.groups[i + 1];
            if (oracle.is_identity(a.target, after)) continue;
            if (auto slid = oracle.slide(a, after)) {
                path.groups[i + 1] = GroupElement{};
                path.groups[i] = oracle.multiply(a.origin, path.groups[i], *slid);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        // collapse arrow followed by its inverse with identity in between
        for (std::size_t i = 0; i + 1 < path.arrows.size(); ++i) {
            const Arrow& a = gog.graph().arrow(path.arrows[i]);
            const Arrow& b = gog.graph().arrow(path.arrows[i + 1]);
            if (b.id != a.bar) continue;
            if (!oracle.is_identity(a.target, path.groups[i + 1])) continue;
            GroupElement glue{};
            if (a.bar == a.id)
                if (auto sq = gog.loop_square(a.id)) glue = *sq;
            GroupElement merged = oracle.multiply(a.origin, path.groups[i], glue);
            merged = oracle.multiply(a.origin, merged, path.groups[i + 2]);
            path.groups.erase(path.groups.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                              path.groups.begin() + static_cast<std::ptrdiff_t>(i) + 3);
            path.arrows.erase(path.arrows.begin() + static_cast<std::ptrdiff_t>(i),
                              path.arrows.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            path.groups[i] = merged;
            changed = true;
            break;
        }
    }
    return path;
}

} // namespace zzag
