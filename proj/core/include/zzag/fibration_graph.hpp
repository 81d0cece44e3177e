#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zzag/errors.hpp"

namespace zzag {

struct Arrow {
    std::string id;
    std::string origin;
    std::string target;
    std::string bar; // id of the inverse arrow; may equal id (self-inverse loop)
};

// Oriented graph of fibration classes: one vertex per equivalence class of
// fibrations, one arrow per class of fibration-changing moves, with the bar
// involution pairing each arrow with its inverse.
class FibrationGraph {
public:
    void add_vertex(std::string label);
    void add_arrow(std::string id, const std::string& origin, const std::string& target,
                   std::string bar_id);

    bool has_vertex(const std::string& v) const { return vertices_.contains(v); }
    std::vector<std::string> vertices() const;
    std::size_t vertex_count() const { return vertices_.size(); }
    const Arrow& arrow(const std::string& id) const;
    std::vector<std::string> arrow_ids() const;
    std::size_t arrow_count() const { return arrows_.size(); }

    // Checks bar(bar(a)) = a and o(bar(a)) = t(a) everywhere.
    void validate() const;

    bool connected() const;
    // Arrow pairs {a, bar a} count once; a self-inverse loop counts once.
    std::size_t geometric_edge_count() const;
    // geometric edges - vertices + 1; requires a connected graph.
    std::size_t cycle_rank() const;
    bool is_tree() const;

    // Whether the boundary of the defining pairs carries a curve of
    // self-intersection <= -3; the tree criterion below needs it.
    void set_deep_curve_hypothesis(bool v) { deep_curve_ = v; }
    bool deep_curve_hypothesis() const { return deep_curve_; }

    std::string to_dot() const;

private:
    std::map<std::string, bool> vertices_;
    std::map<std::string, Arrow> arrows_;
    bool deep_curve_ = false;
};

// Verdict of the tree criterion: when the hypothesis holds, the automorphism
// group is generated by fibration automorphisms exactly when the graph is a
// tree; otherwise the criterion refuses to decide.
struct TreeCriterionReport {
    bool hypothesis_holds = false;
    std::optional<bool> generated; // empty when the criterion is inapplicable
};

TreeCriterionReport tree_criterion(const FibrationGraph& g);

struct Transition {
    std::string target;
    std::string arrow_class;   // deduplication key of the arrow
    std::string inverse_class; // key of the inverse arrow
};

using TransitionOracle = std::function<std::vector<Transition>(const std::string& vertex)>;

// Breadth-first closure of the seed vertices under the oracle's transitions,
// with arrows deduplicated by class key. Throws OracleInconsistency when an
// arrow's inverse never shows up or disagrees on endpoints.
FibrationGraph build_graph(const TransitionOracle& oracle, const std::vector<std::string>& seeds,
                           bool deep_curve_hypothesis);

// ---------------------------------------------------------------------------
// Word-level graph-of-groups scaffold.

struct GroupElement {
    std::string token; // opaque; "" is the identity
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Family-supplied oracle for vertex groups and edge groups; the scaffold
// implements no group arithmetic of its own.
class GroupOracle {
public:
    virtual ~GroupOracle() = default;
    virtual bool in_vertex_group(const std::string& vertex, const GroupElement& g) const = 0;
    virtual bool is_identity(const std::string& vertex, const GroupElement& g) const {
        return in_vertex_group(vertex, g) && g.token.empty();
    }
    // Product in application order: a acts first, then b.
    virtual GroupElement multiply(const std::string& vertex, const GroupElement& a,
                                  const GroupElement& b) const = 0;
    // For g in the image of the edge-group injection along `arrow` (landing
    // in the target vertex group), returns the matching element on the origin
    // side; nullopt when g is not certified to lie in the edge group.
    virtual std::optional<GroupElement> slide(const Arrow& arrow, const GroupElement& g) const = 0;
};

class GraphOfGroups {
public:
    GraphOfGroups(const FibrationGraph& graph, const GroupOracle& oracle);

    // Chosen move representative of the arrow class; inverse arrows carry the
    // formal inverse token.
    void set_representative(const std::string& arrow_id, std::string token);
    const std::string& representative(const std::string& arrow_id) const;

    // For a self-inverse loop, the vertex-group element represented by the
    // square of the representative; never assumed trivial.
    void set_loop_square(const std::string& arrow_id, GroupElement g);
    std::optional<GroupElement> loop_square(const std::string& arrow_id) const;

    const FibrationGraph& graph() const { return *graph_; }
    const GroupOracle& oracle() const { return *oracle_; }

private:
    const FibrationGraph* graph_;
    const GroupOracle* oracle_;
    std::map<std::string, std::string> reps_;
    std::map<std::string, GroupElement> loop_squares_;
};

// Alternating path g_1, a_1, g_2, ..., a_{n-1}, g_n in application order:
// g_1 acts first at `start`, a_i leads from vertex_i to vertex_{i+1}.
struct GroupPath {
    std::string start;
    std::vector<GroupElement> groups; // size = arrows.size() + 1
    std::vector<std::string> arrows;  // arrow ids
};

// Applies the two defining relations to a fixpoint: edge-group elements
// slide backwards across their arrow, and an arrow followed by its inverse
// with the identity in between collapses (a self-inverse loop collapses to
// its tracked square). Never lengthens the path.
GroupPath reduce_path(const GraphOfGroups& gog, GroupPath path);

} // namespace zzag
