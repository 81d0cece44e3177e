#pragma once

#include "zzag/fibration_graph.hpp"
#include "zzag/polynomial.hpp"
#include "zzag/word.hpp"

namespace zzag {

// Polynomial map of the plane given by exact components (f1, f2). Maps built
// from generator words are invertible by construction; raw maps prove
// themselves in jung_factorize.
class PolyAut {
public:
    PolyAut(Poly2 f1, Poly2 f2);

    static PolyAut identity(Field k);
    static PolyAut swap_xy(Field k);
    // (x, y) -> (a1 x + a2 y + a3, b1 x + b2 y + b3), invertible linear part
    static PolyAut affine(Field k, const Scalar& a1, const Scalar& a2, const Scalar& a3,
                          const Scalar& b1, const Scalar& b2, const Scalar& b3);
    // (x, y) -> (x, y + p(x))
    static PolyAut triangular(const Poly1& p);
    // "y+x^2, x"
    static PolyAut parse(Field k, std::string_view text);

    Field field() const { return f1_.field(); }
    const Poly2& f1() const { return f1_; }
    const Poly2& f2() const { return f2_; }
    int degree() const { return std::max(f1_.degree(), f2_.degree()); }

    bool is_affine() const;
    // Fixes the first-coordinate fibration: f1 = a x + b, f2 = c y + p(x).
    bool preserves_fibration() const;
    bool is_identity() const;

    std::pair<Scalar, Scalar> eval(const Scalar& x, const Scalar& y) const;

    std::string str() const;

    friend bool operator==(const PolyAut&, const PolyAut&) = default;

private:
    Poly2 f1_, f2_;
};

// Substitution f(g(.)): g acts first.
PolyAut compose(const PolyAut& f, const PolyAut& g);

enum class FactorKind { Affine, Triangular };

struct JungFactor {
    FactorKind kind;
    PolyAut map;
};

// Factors an automorphism into factors applied left to right (factors[0]
// first), alternating between affine maps outside the fibration-preserving
// group and fibration-preserving maps of degree >= 2 (a single affine factor
// may sit anywhere in the trivial cases). Throws NotAnAutomorphism when the
// Jacobian is not a nonzero constant or the degree reduction stalls.
std::vector<JungFactor> jung_factorize(const PolyAut& f);

// Composition of a factor list in application order.
PolyAut compose_factors(std::span<const JungFactor> factors);

// Word over the base type (0,-1): each fibration-preserving factor of degree
// d >= 2 becomes a degree-d move, every other affine block a reversion whose
// center tokens are the fiber directions moved by the block and its inverse.
MoveWord to_move_word(std::span<const JungFactor> factors);

// Exact composer for merged fibration-preserving moves produced by this
// family: identity detection by polynomial composition.
FiberedComposer plane_fibered_composer(Field k);

// Factor-wise inverse in application order; exact.
std::vector<JungFactor> invert_factors(std::span<const JungFactor> factors);

// Fibration-class graph of the plane: one class of fibrations, one
// self-inverse class of fibration-changing moves. The boundary (0,-1) has no
// curve of self-intersection <= -3, so the tree criterion never applies.
FibrationGraph plane_fibration_graph(Field k);

// The plane's automorphisms are generated by fibration automorphisms: the
// swap preserves the antidiagonal pencil, so this holds even though the
// tree criterion is silent here.
bool plane_generated_by_fibrations();

} // namespace zzag
