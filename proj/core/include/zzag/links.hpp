#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zzag/zigzag.hpp"

namespace zzag {

enum class LinkKind { I, II, III, IV };

// Which neighbor of the positive curve a link works at, in storage order.
enum class LinkSide { Left, Right }; // Left = index m-1, Right = index m+1

enum class PointMode { Intersection, Free };

// One of the four local blow-up/blow-down rewrites of a marked zigzag.
//   I   contraction of the (-1)-curve
//   II  blow-up of the point joining the positive curve to an adjacent
//       (-1)-curve, then contraction of the old positive curve if it was a
//       0-curve
//   III same blow-up at a chosen neighbor when no (-1)-curve is present and
//       the positive curve is interior
//   IV  blow-up of a point of a boundary positive curve: either its single
//       intersection point or a free point (carrying an opaque center token)
struct ElementaryLink {
    LinkKind kind;
    std::optional<LinkSide> side;      // II, III
    std::optional<PointMode> point;    // IV
    std::string center;                // IV free: opaque center token

    static ElementaryLink contract();
    static ElementaryLink blow_at_minus_one(LinkSide s);
    static ElementaryLink blow_interior(LinkSide s);
    static ElementaryLink blow_boundary_intersection();
    static ElementaryLink blow_boundary_free(std::string center_token);

    friend bool operator==(const ElementaryLink&, const ElementaryLink&) = default;
};

std::string to_string(LinkKind k);
std::string to_string(LinkSide s);

struct LinkResult {
    MarkedZigzag zigzag;
    bool almost_standard; // two (-1)-curves may appear transiently
};

// Rewrites the chain by the link's blow-up/blow-down content. Preconditions
// are operational (the named curves must exist); kind labels are not
// re-derived from the configuration, so the rewrite stays usable on the
// transient non-almost-standard chains that arise inside composite moves.
LinkResult apply_link(const MarkedZigzag& z, const ElementaryLink& link);

// Exhaustive list of links applicable to a valid almost-standard zigzag,
// classified strictly: a (-1)-curve forces I/II, otherwise the position of
// the positive curve selects III (interior) or IV (boundary).
std::vector<ElementaryLink> applicable_links(const MarkedZigzag& z);

} // namespace zzag
