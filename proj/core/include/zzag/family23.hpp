#pragma once

#include <optional>
#include <span>

#include "zzag/field.hpp"
#include "zzag/fibration_graph.hpp"
#include "zzag/zigzag.hpp"

namespace zzag {

// The four families of smooth pairs with boundary (0,-1,-2,-3) or
// (0,-1,-3,-2): reduced/non-reduced degenerate fibers, with a parameter
// a outside {0,1} for the two one-parameter families.
enum class Family23 { I, II, III, IV };

struct Pair23 {
    Family23 family;
    std::optional<Scalar> param; // present iff family is II or III

    friend bool operator==(const Pair23&, const Pair23&) = default;
};

Pair23 make_pair23(Family23 f, std::optional<Scalar> param = std::nullopt);

std::string to_string(Family23 f);
std::optional<Family23> parse_family23(std::string_view text);

// Center of a fibration-changing move, coordinatized on the 0-curve away
// from the (-1)-curve.
struct Center23 {
    Scalar lambda;
};

enum class LambdaRange {
    AnyValue,  // all of k
    Nonzero,   // k*
    ZeroOrOne, // {0, 1}
    Fixed,     // a single forced value
};

struct Revert23 {
    Pair23 target;
    LambdaRange out_range;
    std::optional<Scalar> out_value; // set when out_range == Fixed
};

// Transition table of fibration-changing moves between the four families;
// covers every (family, center) combination. The target pair is forced, the
// target center only up to the stated range.
Revert23 revert(const Pair23& p, const Center23& c);

// (0,-1,-2,-3) for families I and III, (0,-1,-3,-2) for II and IV.
ZigzagType boundary_type(Family23 f);

// Canonical label under the parameter equivalence a ~ 1/a; families I and IV
// label themselves.
std::string iso_class_label(const Pair23& p);

// Exhaustive fibration-class graph over a finite field with at least three
// elements; every edge is realized by a revert transition.
FibrationGraph build_graph23(const Field& k);

// Same construction over any field restricted to the given parameter values
// (each must avoid {0,1}); parameters are closed under inversion.
FibrationGraph build_graph23(const Field& k, std::span<const Scalar> params);

} // namespace zzag
