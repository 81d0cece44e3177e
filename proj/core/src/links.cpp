#include "zzag/links.hpp"

#include <algorithm>

namespace zzag {

ElementaryLink ElementaryLink::contract() { return {LinkKind::I, {}, {}, {}}; }

ElementaryLink ElementaryLink::blow_at_minus_one(LinkSide s) {
    return {LinkKind::II, s, {}, {}};
}

ElementaryLink ElementaryLink::blow_interior(LinkSide s) { return {LinkKind::III, s, {}, {}}; }

ElementaryLink ElementaryLink::blow_boundary_intersection() {
    return {LinkKind::IV, {}, PointMode::Intersection, {}};
}

ElementaryLink ElementaryLink::blow_boundary_free(std::string center_token) {
    return {LinkKind::IV, {}, PointMode::Free, std::move(center_token)};
}

std::string to_string(LinkKind k) {
    switch (k) {
        case LinkKind::I: return "I";
        case LinkKind::II: return "II";
        case LinkKind::III: return "III";
        case LinkKind::IV: return "IV";
    }
    return "?";
}

std::string to_string(LinkSide s) { return s == LinkSide::Left ? "left" : "right"; }

namespace {

struct Chain {
    std::vector<Weight> w;
    std::size_t m;
};

// Contraction of the (-1)-curve adjacent to the positive curve. With two
// (-1)-curves present the one before the positive curve wins; composite-move
// schedules rely on that convention.
Chain contract_minus_one(Chain c) {
    std::optional<std::size_t> l;
    if (c.m > 0 && c.w[c.m - 1] == -1)
        l = c.m - 1;
    else if (c.m + 1 < c.w.size() && c.w[c.m + 1] == -1)
        l = c.m + 1;
    if (!l) throw NotApplicable("link I: no (-1)-curve next to the positive curve");
    if (*l > 0) c.w[*l - 1] += 1;
    if (*l + 1 < c.w.size()) c.w[*l + 1] += 1;
    c.w.erase(c.w.begin() + static_cast<std::ptrdiff_t>(*l));
    if (*l < c.m) c.m -= 1;
    return c;
}

// Blow-up of the point joining the positive curve to the neighbor on the
// given side, followed by the contraction of the old positive curve exactly
// when it was a 0-curve.
Chain blow_between(Chain c, LinkSide side) {
    std::size_t s = c.w.size();
    if (side == LinkSide::Right && c.m + 1 >= s)
        throw NotApplicable("no neighbor to the right of the positive curve");
    if (side == LinkSide::Left && c.m == 0)
        throw NotApplicable("no neighbor to the left of the positive curve");
    std::size_t j = side == LinkSide::Right ? c.m + 1 : c.m - 1;
    bool was_zero = c.w[c.m] == 0;
    c.w[c.m] -= 1;
    c.w[j] -= 1;
    std::size_t e = std::max(c.m, j); // insertion point between the two
    c.w.insert(c.w.begin() + static_cast<std::ptrdiff_t>(e), Weight(-1));
    std::size_t old_m = side == LinkSide::Right ? c.m : c.m + 1;
    if (!was_zero) {
        c.m = old_m;
        return c;
    }
    if (old_m > 0 && old_m - 1 != e) c.w[old_m - 1] += 1;
    if (old_m + 1 < c.w.size() && old_m + 1 != e) c.w[old_m + 1] += 1;
    c.w[e] += 1; // the exceptional curve becomes the new 0-curve
    c.w.erase(c.w.begin() + static_cast<std::ptrdiff_t>(old_m));
    c.m = e < old_m ? e : e - 1;
    return c;
}

Chain blow_free(Chain c) {
    std::size_t s = c.w.size();
    if (c.m != 0 && c.m != s - 1)
        throw NotApplicable("free blow-up would branch: positive curve is interior");
    bool at_end = c.m == s - 1;
    bool was_zero = c.w[c.m] == 0;
    c.w[c.m] -= 1;
    if (at_end) {
        c.w.push_back(Weight(-1));
        if (was_zero) {
            // contract the old positive curve between its old neighbor and
            // the fresh leaf
            if (c.m > 0) c.w[c.m - 1] += 1;
            c.w[c.m + 1] += 1;
            c.w.erase(c.w.begin() + static_cast<std::ptrdiff_t>(c.m));
        } else {
            // positive curve keeps its position
        }
        c.m = was_zero ? c.w.size() - 1 : c.m;
    } else {
        c.w.insert(c.w.begin(), Weight(-1));
        if (was_zero) {
            c.w[0] += 1;
            if (c.w.size() > 2) c.w[2] += 1;
            c.w.erase(c.w.begin() + 1);
            c.m = 0;
        } else {
            c.m = 1;
        }
    }
    return c;
}

} // namespace

LinkResult apply_link(const MarkedZigzag& z, const ElementaryLink& link) {
    Chain c{z.weights(), z.positive_index()};
    switch (link.kind) {
        case LinkKind::I:
            c = contract_minus_one(std::move(c));
            break;
        case LinkKind::II: {
            if (!link.side) throw DomainError("link II needs a side");
            std::size_t j = *link.side == LinkSide::Right ? c.m + 1 : c.m - 1;
            if ((*link.side == LinkSide::Right && c.m + 1 >= c.w.size()) ||
                (*link.side == LinkSide::Left && c.m == 0) || c.w[j] != -1)
                throw NotApplicable("link II: no adjacent (-1)-curve on that side");
            c = blow_between(std::move(c), *link.side);
            break;
        }
        case LinkKind::III:
            if (!link.side) throw DomainError("link III needs a side");
            c = blow_between(std::move(c), *link.side);
            break;
        case LinkKind::IV: {
            if (!link.point) throw DomainError("link IV needs a point mode");
            if (c.m != 0 && c.m != c.w.size() - 1)
                throw NotApplicable("link IV: positive curve is not a boundary");
            if (*link.point == PointMode::Intersection) {
                if (c.w.size() < 2) throw NotApplicable("link IV: no neighbor to meet");
                c = blow_between(std::move(c), c.m == 0 ? LinkSide::Right : LinkSide::Left);
            } else {
                c = blow_free(std::move(c));
            }
            break;
        }
    }
    MarkedZigzag out(std::move(c.w), c.m);
    bool ok = out.almost_standard();
    return {std::move(out), ok};
}

std::vector<ElementaryLink> applicable_links(const MarkedZigzag& z) {
    if (!z.almost_standard()) throw DomainError("not an almost-standard zigzag");
    std::vector<ElementaryLink> out;
    std::size_t m = z.positive_index();
    if (auto l = z.minus_one_index()) {
        out.push_back(ElementaryLink::contract());
        out.push_back(ElementaryLink::blow_at_minus_one(*l > m ? LinkSide::Right : LinkSide::Left));
        return out;
    }
    if (m > 0 && m + 1 < z.size()) {
        out.push_back(ElementaryLink::blow_interior(LinkSide::Left));
        out.push_back(ElementaryLink::blow_interior(LinkSide::Right));
        return out;
    }
    if (z.size() >= 2) out.push_back(ElementaryLink::blow_boundary_intersection());
    out.push_back(ElementaryLink::blow_boundary_free("p"));
    return out;
}

} // namespace zzag
