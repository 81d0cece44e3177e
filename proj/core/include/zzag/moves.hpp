#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "zzag/dual_graph.hpp"
#include "zzag/links.hpp"
#include "zzag/zigzag.hpp"

namespace zzag {

// Canonical token for the base point shared by all fibration-preserving
// modifications (the intersection of the fiber with the (-1)-section).
inline constexpr const char* kFiberBasePoint = "F^C";

// Fibration-changing move; centers are opaque base-point tokens on the
// 0-curve away from the (-1)-curve, compared by equality only.
struct Reversion {
    std::string center_in;
    std::string center_out;
    friend bool operator==(const Reversion&, const Reversion&) = default;
};

// Fibration-preserving move of degree >= 2; both proper base points sit at
// the canonical fiber/section intersection.
struct FiberedModification {
    Weight degree{2};
    std::string payload;          // family-specific data, opaque here
    bool possibly_identity{false}; // set on merged moves the abstract layer
                                   // cannot resolve
    friend bool operator==(const FiberedModification&, const FiberedModification&) = default;
};

struct Isomorphism {
    std::string relabel; // opaque center relabeling; empty = identity
    friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
};

using Move = std::variant<Reversion, FiberedModification, Isomorphism>;

bool is_reversion(const Move& m);
bool is_fibered(const Move& m);
bool is_isomorphism(const Move& m);
std::string center_in(const Move& m);
std::string center_out(const Move& m);

// (0,-1,-n_1,...,-n_r) -> (0,-1,-n_r,...,-n_1). Requires a 1-standard type.
ZigzagType reversion_transform(const ZigzagType& t);

struct ScheduleStep {
    std::string name;          // "theta0", "phi1", ...
    ZigzagType after;          // chain in replay orientation after the composite move
    std::size_t links_emitted; // cumulative link count up to this step
};

struct ReversionLinks {
    MarkedZigzag start; // the input chain reversed, positive curve last
    std::vector<ElementaryLink> links;
    std::vector<ScheduleStep> schedule;
};

// Elementary-link word realizing the reversion of a 1-standard pair, as the
// sweep of composite moves theta_0, phi_1, theta_1, ..., phi_r, theta_r.
// Replaying `links` from `start` ends on a chain whose oriented type is
// reversion_transform(t). The free blow-up of theta_0 carries the given
// center token.
ReversionLinks reversion_links(const ZigzagType& t, std::string center_token = "q");

struct LinkKindCounts {
    std::size_t i = 0, ii = 0, iii = 0, iv = 0;
    friend bool operator==(const LinkKindCounts&, const LinkKindCounts&) = default;
};

LinkKindCounts count_kinds(std::span<const ElementaryLink> links);

// Closed-form counts for the word produced by reversion_links: one
// contraction per sweep step, one II plus n_i-3 IIIs per tail entry with
// n_i >= 3, boundary blow-ups of kind IV at both ends, interior sweep
// blow-ups of kind III.
LinkKindCounts expected_reversion_link_counts(std::span<const Weight> tail);

// Total transform of the boundary in the minimal resolution of the
// reversion: a chain holding both the source boundary (labels E<i>, C, F)
// and the target boundary (F', C', E<i>'), glued along the middle curves
// (labels H<i>). Contracting either designated side with replay_contraction
// recovers the respective boundary chain.
DualGraph reversion_resolution(const ZigzagType& t);

// Resolution tree of a fibration-preserving modification of degree d >= 2:
// E - C(-d) - M(-2), with two chains of d-2 (-2)-curves hanging off M and
// ending in F(-1) and F'(-1).
DualGraph fibered_resolution(const Weight& degree);

struct ComposeResult {
    bool composed = false;
    Move move; // valid when composed
};

// Word-level composition of two adjacent moves over a pair whose boundary
// tail is `tail`:
//  - reversions with equal centers cancel to an isomorphism;
//  - reversions with distinct centers merge to a reversion exactly when the
//    tail consists of (-2)-curves only;
//  - fibration-preserving moves merge to a move flagged possibly-identity
//    (concrete families decide identity);
//  - isomorphisms are absorbed.
// Everything else is irreducible.
ComposeResult compose_adjacent(const Move& a, const Move& b, std::span<const Weight> tail);

// Replays elementary links through dual-graph blow-ups and blow-downs on the
// current surface only. Independent of the index arithmetic in apply_link;
// used to cross-check it.
class GraphLinkReplay {
public:
    explicit GraphLinkReplay(const MarkedZigzag& start);

    void apply(const ElementaryLink& link);
    MarkedZigzag marked() const;
    const DualGraph& graph() const { return g_; }

private:
    DualGraph g_;
    NodeId front_;    // endpoint anchoring the chain orientation
    NodeId positive_; // current positive curve

    std::vector<NodeId> order() const;
};

} // namespace zzag
