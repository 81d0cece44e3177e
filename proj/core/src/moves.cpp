#include "zzag/moves.hpp"

#include <algorithm>

namespace zzag {

bool is_reversion(const Move& m) { return std::holds_alternative<Reversion>(m); }
bool is_fibered(const Move& m) { return std::holds_alternative<FiberedModification>(m); }
bool is_isomorphism(const Move& m) { return std::holds_alternative<Isomorphism>(m); }

std::string center_in(const Move& m) {
    if (auto* r = std::get_if<Reversion>(&m)) return r->center_in;
    if (std::holds_alternative<FiberedModification>(m)) return kFiberBasePoint;
    return {};
}

std::string center_out(const Move& m) {
    if (auto* r = std::get_if<Reversion>(&m)) return r->center_out;
    if (std::holds_alternative<FiberedModification>(m)) return kFiberBasePoint;
    return {};
}

ZigzagType reversion_transform(const ZigzagType& t) {
    auto tail = t.tail(); // throws unless 1-standard
    std::vector<Weight> w{Weight(0), Weight(-1)};
    w.insert(w.end(), tail.rbegin(), tail.rend());
    return ZigzagType(std::move(w));
}

ReversionLinks reversion_links(const ZigzagType& t, std::string center_token) {
    auto tail = t.tail();
    std::size_t r = tail.size();

    MarkedZigzag start = MarkedZigzag::from_type(t.reversed());
    ReversionLinks out{start, {}, {}};
    MarkedZigzag cur = start;

    auto emit = [&](const ElementaryLink& link) {
        out.links.push_back(link);
        cur = apply_link(cur, link).zigzag;
    };
    auto record = [&](std::string name) {
        out.schedule.push_back({std::move(name), cur.type(), out.links.size()});
    };

    emit(ElementaryLink::contract());
    emit(ElementaryLink::blow_boundary_free(std::move(center_token)));
    record("theta0");

    for (std::size_t i = 1; i <= r; ++i) {
        const Weight n = -tail[i - 1];
        if (n >= 3) {
            emit(ElementaryLink::blow_at_minus_one(LinkSide::Right));
            for (Weight k = 0; k < n - 3; ++k) emit(ElementaryLink::blow_interior(LinkSide::Right));
        }
        record("phi" + std::to_string(i));
        emit(ElementaryLink::contract());
        if (i < r)
            emit(ElementaryLink::blow_interior(LinkSide::Right));
        else
            emit(ElementaryLink::blow_boundary_intersection());
        record("theta" + std::to_string(i));
    }

    if (cur.oriented_type() != reversion_transform(t))
        throw DomainError("internal: reversion link word does not realize the tail reversal");
    return out;
}

LinkKindCounts count_kinds(std::span<const ElementaryLink> links) {
    LinkKindCounts c;
    for (const auto& l : links) {
        switch (l.kind) {
            case LinkKind::I: ++c.i; break;
            case LinkKind::II: ++c.ii; break;
            case LinkKind::III: ++c.iii; break;
            case LinkKind::IV: ++c.iv; break;
        }
    }
    return c;
}

LinkKindCounts expected_reversion_link_counts(std::span<const Weight> tail) {
    LinkKindCounts c;
    std::size_t r = tail.size();
    c.i = r + 1;
    c.iv = r >= 1 ? 2 : 1;
    c.iii = r >= 1 ? r - 1 : 0;
    for (const Weight& e : tail) {
        Weight n = -e;
        if (n >= 3) {
            c.ii += 1;
            c.iii += (n - 3).convert_to<std::size_t>();
        }
    }
    return c;
}

namespace {

// Replays a link word while retaining every curve ever created: live curves
// carry their current self-intersections, all curves carry the
// self-intersection they will have on the common resolution (only blow-ups
// change it; contractions near a curve do not). Adjacency on the resolution
// is refined by blow-ups and never re-glued by contractions.
class TowerReplay {
public:
    TowerReplay(std::span<const Weight> weights, std::span<const std::string> labels,
                std::size_t positive)
        : m_(positive) {
        for (std::size_t i = 0; i < weights.size(); ++i) {
            NodeId id = tower_.add_node(weights[i], i < labels.size() ? labels[i] : "");
            live_.push_back(id);
            cw_.push_back(weights[i]);
        }
        for (std::size_t i = 0; i + 1 < live_.size(); ++i) tower_.add_edge(live_[i], live_[i + 1]);
    }

    void apply(const ElementaryLink& link) {
        MarkedZigzag expect = apply_link(marked(), link).zigzag;
        switch (link.kind) {
            case LinkKind::I: {
                std::size_t l;
                if (m_ > 0 && cw_[m_ - 1] == -1)
                    l = m_ - 1;
                else if (m_ + 1 < cw_.size() && cw_[m_ + 1] == -1)
                    l = m_ + 1;
                else
                    throw NotApplicable("link I: no (-1)-curve next to the positive curve");
                contract_current(l);
                break;
            }
            case LinkKind::II:
            case LinkKind::III:
                blow_between(*link.side);
                break;
            case LinkKind::IV:
                if (*link.point == PointMode::Intersection)
                    blow_between(m_ == 0 ? LinkSide::Right : LinkSide::Left);
                else
                    blow_free();
                break;
        }
        if (marked() != expect) throw DomainError("internal: tower replay diverged from apply_link");
    }

    MarkedZigzag marked() const { return MarkedZigzag(cw_, m_); }
    const DualGraph& tower() const { return tower_; }
    const std::vector<NodeId>& live() const { return live_; }
    std::size_t positive() const { return m_; }

private:
    DualGraph tower_;
    std::vector<NodeId> live_;
    std::vector<Weight> cw_;
    std::size_t m_;

    void contract_current(std::size_t idx) {
        if (idx > 0) cw_[idx - 1] += 1;
        if (idx + 1 < cw_.size()) cw_[idx + 1] += 1;
        live_.erase(live_.begin() + static_cast<std::ptrdiff_t>(idx));
        cw_.erase(cw_.begin() + static_cast<std::ptrdiff_t>(idx));
        if (idx < m_) m_ -= 1;
    }

    void blow_between(LinkSide side) {
        if (side == LinkSide::Right ? m_ + 1 >= live_.size() : m_ == 0)
            throw NotApplicable("no neighbor on that side");
        std::size_t j = side == LinkSide::Right ? m_ + 1 : m_ - 1;
        std::size_t a = std::min(m_, j);
        if (!tower_.adjacent(live_[a], live_[a + 1]))
            throw DomainError("internal: blow-up over a contracted curve");
        bool was_zero = cw_[m_] == 0;
        auto bu = tower_.blow_up_intersection(live_[a], live_[a + 1]);
        tower_ = std::move(bu.graph);
        cw_[m_] -= 1;
        cw_[j] -= 1;
        live_.insert(live_.begin() + static_cast<std::ptrdiff_t>(a) + 1, bu.exceptional);
        cw_.insert(cw_.begin() + static_cast<std::ptrdiff_t>(a) + 1, Weight(-1));
        std::size_t old_m = side == LinkSide::Right ? m_ : m_ + 1;
        std::size_t e = a + 1;
        if (was_zero) {
            contract_current(old_m);
            m_ = e < old_m ? e : e - 1;
        } else {
            m_ = old_m;
        }
    }

    void blow_free() {
        if (m_ != 0 && m_ != live_.size() - 1)
            throw NotApplicable("free blow-up would branch the chain");
        bool at_end = m_ == live_.size() - 1;
        bool was_zero = cw_[m_] == 0;
        auto bu = tower_.blow_up_free(live_[m_]);
        tower_ = std::move(bu.graph);
        cw_[m_] -= 1;
        if (at_end) {
            live_.push_back(bu.exceptional);
            cw_.push_back(Weight(-1));
            if (was_zero) {
                contract_current(m_);
                m_ = live_.size() - 1;
            }
        } else {
            live_.insert(live_.begin(), bu.exceptional);
            cw_.insert(cw_.begin(), Weight(-1));
            m_ += 1;
            if (was_zero) {
                contract_current(m_);
                m_ = 0;
            }
        }
    }
};

} // namespace

DualGraph reversion_resolution(const ZigzagType& t) {
    ReversionLinks rl = reversion_links(t);
    std::size_t r = t.size() - 2;

    std::vector<std::string> labels;
    for (std::size_t i = r; i >= 1; --i) labels.push_back("E" + std::to_string(i));
    labels.push_back("C");
    labels.push_back("F");

    TowerReplay replay(rl.start.weights(), labels, rl.start.positive_index());
    NodeId source_end = replay.live().front(); // E_r (C when the tail is empty)
    for (const auto& link : rl.links) replay.apply(link);

    const DualGraph& tower = replay.tower();
    if (!tower.is_chain()) throw DomainError("internal: resolution is not a chain");
    if (replay.positive() != 0) throw DomainError("internal: replay did not end positive-first");

    // Live curves form the target boundary; unnamed middle curves are the
    // glue between the two boundaries.
    const auto& live = replay.live();
    std::vector<std::string> primed{"F'", "C'"};
    for (std::size_t i = 1; i <= r; ++i) primed.push_back("E" + std::to_string(i) + "'");

    std::map<NodeId, std::string> names;
    for (NodeId id : tower.node_ids()) names[id] = tower.node(id).label;
    for (std::size_t i = 0; i < live.size(); ++i)
        if (names[live[i]].empty()) names[live[i]] = primed[i];

    auto order = tower.chain_order(source_end);
    std::size_t next_h = 1;
    for (NodeId id : order)
        if (names[id].empty()) names[id] = "H" + std::to_string(next_h++);

    DualGraph out;
    std::map<NodeId, NodeId> remap;
    for (NodeId id : order) remap[id] = out.add_node(tower.node(id).weight, names[id]);
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        out.add_edge(remap[order[i]], remap[order[i + 1]]);
    return out;
}

DualGraph fibered_resolution(const Weight& degree) {
    if (degree < 2) throw DomainError("fibration-preserving modifications have degree >= 2");
    if (degree > 100000) throw DomainError("degree too large to materialize");
    std::size_t boxes = (degree - 2).convert_to<std::size_t>();

    DualGraph g;
    NodeId e = g.add_node(Weight(-2), "E");
    NodeId c = g.add_node(-degree, "C");
    NodeId m = g.add_node(Weight(-2), "M");
    g.add_edge(e, c);
    g.add_edge(c, m);
    NodeId cur = m;
    for (std::size_t i = 0; i < boxes; ++i) {
        NodeId h = g.add_node(Weight(-2), "H" + std::to_string(i + 1));
        g.add_edge(cur, h);
        cur = h;
    }
    NodeId f = g.add_node(Weight(-1), "F");
    g.add_edge(cur, f);
    cur = m;
    for (std::size_t i = 0; i < boxes; ++i) {
        NodeId h = g.add_node(Weight(-2), "H" + std::to_string(i + 1) + "'");
        g.add_edge(cur, h);
        cur = h;
    }
    NodeId fp = g.add_node(Weight(-1), "F'");
    g.add_edge(cur, fp);
    return g;
}

ComposeResult compose_adjacent(const Move& a, const Move& b, std::span<const Weight> tail) {
    if (auto* ia = std::get_if<Isomorphism>(&a)) {
        if (!ia->relabel.empty()) return {false, Isomorphism{}};
        return {true, b};
    }
    if (auto* ib = std::get_if<Isomorphism>(&b)) {
        if (!ib->relabel.empty()) return {false, Isomorphism{}};
        return {true, a};
    }
    if (is_reversion(a) && is_reversion(b)) {
        const auto& ra = std::get<Reversion>(a);
        const auto& rb = std::get<Reversion>(b);
        if (ra.center_out == rb.center_in) return {true, Isomorphism{}};
        bool all_minus_two =
            std::all_of(tail.begin(), tail.end(), [](const Weight& w) { return w == -2; });
        if (all_minus_two) return {true, Reversion{ra.center_in, rb.center_out}};
        return {false, Isomorphism{}};
    }
    if (is_fibered(a) && is_fibered(b)) {
        const auto& fa = std::get<FiberedModification>(a);
        const auto& fb = std::get<FiberedModification>(b);
        FiberedModification merged;
        merged.degree = std::max(fa.degree, fb.degree);
        merged.payload = fa.payload.empty() || fb.payload.empty()
                             ? fa.payload + fb.payload
                             : "(" + fb.payload + ")*(" + fa.payload + ")";
        merged.possibly_identity = true;
        return {true, Move{merged}};
    }
    return {false, Isomorphism{}}; // reversion against fibration-preserving: centers differ
}

GraphLinkReplay::GraphLinkReplay(const MarkedZigzag& start) {
    auto [g, ids] = DualGraph::chain(start.weights());
    g_ = std::move(g);
    front_ = ids.front();
    positive_ = ids[start.positive_index()];
}

std::vector<NodeId> GraphLinkReplay::order() const { return g_.chain_order(front_); }

void GraphLinkReplay::apply(const ElementaryLink& link) {
    auto ord = order();
    auto idx_of = [&](NodeId id) {
        return static_cast<std::size_t>(std::find(ord.begin(), ord.end(), id) - ord.begin());
    };
    std::size_t m = idx_of(positive_);

    auto contract = [&](NodeId x) {
        if (x == front_) {
            auto nb = g_.neighbors(x);
            if (nb.empty()) throw NotApplicable("cannot contract the last curve");
            front_ = nb.front();
        }
        g_ = g_.blow_down(x);
    };

    switch (link.kind) {
        case LinkKind::I: {
            NodeId target = 0;
            if (m > 0 && g_.node(ord[m - 1]).weight == -1)
                target = ord[m - 1];
            else if (m + 1 < ord.size() && g_.node(ord[m + 1]).weight == -1)
                target = ord[m + 1];
            else
                throw NotApplicable("link I: no (-1)-curve next to the positive curve");
            contract(target);
            return;
        }
        case LinkKind::II:
        case LinkKind::III: {
            bool right = *link.side == LinkSide::Right;
            if (right ? m + 1 >= ord.size() : m == 0)
                throw NotApplicable("no neighbor on that side");
            NodeId j = right ? ord[m + 1] : ord[m - 1];
            if (link.kind == LinkKind::II && g_.node(j).weight != -1)
                throw NotApplicable("link II: neighbor is not a (-1)-curve");
            bool was_zero = g_.node(positive_).weight == 0;
            auto bu = g_.blow_up_intersection(positive_, j);
            g_ = std::move(bu.graph);
            if (was_zero) {
                contract(positive_);
                positive_ = bu.exceptional;
            }
            return;
        }
        case LinkKind::IV: {
            if (m != 0 && m + 1 != ord.size())
                throw NotApplicable("link IV: positive curve is not a boundary");
            bool was_zero = g_.node(positive_).weight == 0;
            if (*link.point == PointMode::Intersection) {
                if (ord.size() < 2) throw NotApplicable("link IV: no neighbor to meet");
                NodeId j = m == 0 ? ord[1] : ord[m - 1];
                auto bu = g_.blow_up_intersection(positive_, j);
                g_ = std::move(bu.graph);
                if (was_zero) {
                    contract(positive_);
                    positive_ = bu.exceptional;
                }
            } else {
                auto bu = g_.blow_up_free(positive_);
                g_ = std::move(bu.graph);
                if (m == 0) front_ = bu.exceptional;
                if (was_zero) {
                    contract(positive_);
                    positive_ = bu.exceptional;
                }
            }
            return;
        }
    }
}

MarkedZigzag GraphLinkReplay::marked() const {
    auto ord = order();
    std::vector<Weight> w;
    w.reserve(ord.size());
    std::size_t m = 0;
    for (std::size_t i = 0; i < ord.size(); ++i) {
        w.push_back(g_.node(ord[i]).weight);
        if (ord[i] == positive_) m = i;
    }
    return MarkedZigzag(std::move(w), m);
}

} // namespace zzag
