#pragma once

#include <variant>

#include "zzag/fibration_graph.hpp"
#include "zzag/polynomial.hpp"
#include "zzag/word.hpp"

namespace zzag {

// The surface uv = P(w) for an exact polynomial P of degree n >= 2.
class SurfaceUVP {
public:
    explicit SurfaceUVP(Poly1 P);

    const Poly1& P() const { return p_; }
    Field field() const { return p_.field(); }
    int degree() const { return p_.degree(); }

private:
    Poly1 p_;
};

// Generators of the automorphism group, with exact parameters.
struct GenH {
    Scalar a; // (u,v,w) -> (a u, a^-1 v, w), a != 0
};
struct GenI {}; // (u,v,w) -> (v, u, w)
struct GenT {
    Poly1 q; // (u,v,w) -> (u, v + (P(w+u q(u)) - P(w))/u, w + u q(u))
};
struct GenT0 {
    Scalar a; // GenT with constant twist a
};
struct GenSp {
    Scalar a, b, c; // (u,v,w) -> (u, c v, a w + b), requires P(aw+b) = c P(w)
};

using UVPGen = std::variant<GenH, GenI, GenT, GenT0, GenSp>;

// Word of generators in application order (word()[0] acts first).
class UVPAut {
public:
    UVPAut(Field k, std::vector<UVPGen> word);

    Field field() const { return k_; }
    const std::vector<UVPGen>& word() const { return word_; }

private:
    Field k_;
    std::vector<UVPGen> word_;
};

struct CoordinateMap {
    Poly3 u, v, w;
    friend bool operator==(const CoordinateMap&, const CoordinateMap&) = default;
};

// Coordinate images of the composed word; validates every generator against
// the surface (H units, Sp identities, polynomial twists).
CoordinateMap apply(const UVPAut& g, const SurfaceUVP& s);

// The unique nonzero constant k with u'v' - P(w') = k (uv - P(w)); throws
// when the identity fails.
Scalar check_relation(const UVPAut& g, const SurfaceUVP& s);

struct SpElement {
    Scalar a, b, c;
    friend bool operator==(const SpElement&, const SpElement&) = default;
};

struct SpDescription {
    // P = lead (w - mu)^n: the symbolic family (t, mu(1-t), t^n) over all
    // units t; `elements` stays empty over the rationals, and lists every
    // element over a finite field.
    bool one_parameter = false;
    Scalar mu;
    std::vector<SpElement> elements;
};

// All (a, b, c) with P(aw+b) = c P(w), by exact coefficient matching.
SpDescription compute_sp(const SurfaceUVP& s);

// True iff P2(w) = m P1(aw+b) for some a, m != 0: same surface up to an
// affine change of the base line and a unit.
bool equivalent_surfaces(const SurfaceUVP& s1, const SurfaceUVP& s2);

struct UVPNormalForm {
    MoveWord word;              // alternating reduced form
    bool uniqueness_asserted;   // degree >= 3; for degree 2 the reduced form
                                // is reported without a uniqueness claim
    std::string trailing;       // boundary automorphism left at the end, if any
};

// Rewrites a generator word into the alternating amalgam form: twists with a
// genuine polynomial part become fibration-preserving moves, each involution
// a reversion with its center transported along the interleaved boundary
// automorphisms; conjugations that cancel a pair of involutions are carried
// out exactly on the generators.
UVPNormalForm normal_form(const UVPAut& g, const SurfaceUVP& s);

// Exact composer for merged fibration-preserving moves of this family.
FiberedComposer uvp_fibered_composer(Field k);

// Fibration-class graph of the surface: a single class of fibrations carrying
// a single self-inverse class of fibration-changing moves. The tree-criterion
// hypothesis holds exactly when the degree is at least 3.
FibrationGraph uvp_fibration_graph(const SurfaceUVP& s);

// Tree-criterion verdict: false for degree >= 3; empty (refused) for degree 2,
// where the boundary carries no curve of self-intersection <= -3.
std::optional<bool> uvp_generated_by_fibrations(const SurfaceUVP& s);

} // namespace zzag
