#include "zzag/uvp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zzag {

namespace {

Poly1 affine_line(Field k, const Scalar& a, const Scalar& b) { return Poly1(k, {b, a}); }

// q(t x) for a unit t
Poly1 scale_argument(const Poly1& q, const Scalar& t) {
    std::vector<Scalar> c = q.coeffs();
    Scalar p = q.field().one();
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = c[i] * p;
        p = p * t;
    }
    return Poly1(q.field(), std::move(c));
}

void validate_sp(const Poly1& P, const Scalar& a, const Scalar& b, const Scalar& c) {
    if (a.is_zero() || c.is_zero()) throw DomainError("invalid Sp parameters: zero unit");
    if (P.compose(affine_line(P.field(), a, b)) != P * c)
        throw DomainError("invalid Sp parameters: P(aw+b) != c P(w)");
}

} // namespace

SurfaceUVP::SurfaceUVP(Poly1 P) : p_(std::move(P)) {
    if (p_.degree() < 2) throw DomainError("surface polynomial must have degree >= 2");
}

UVPAut::UVPAut(Field k, std::vector<UVPGen> word) : k_(k), word_(std::move(word)) {
    for (const UVPGen& g : word_) {
        if (auto* h = std::get_if<GenH>(&g)) {
            if (h->a.is_zero()) throw DomainError("H needs a unit");
            if (!(h->a.field() == k_)) throw FieldMismatch("generator field mismatch");
        }
    }
}

CoordinateMap apply(const UVPAut& g, const SurfaceUVP& s) {
    if (!(g.field() == s.field())) throw FieldMismatch("word and surface field mismatch");
    Field k = s.field();
    const Poly1& P = s.P();
    Poly3 U = Poly3::variable(k, 0), V = Poly3::variable(k, 1), W = Poly3::variable(k, 2);

    auto twist = [&](const Poly1& q) {
        if (q.is_zero()) return;
        Poly3 u3 = Poly3::variable(k, 0), w3 = Poly3::variable(k, 2);
        Poly3 arg = w3 + u3 * lift_poly1(q, u3);
        Poly3 delta = (lift_poly1(P, arg) - lift_poly1(P, w3)).divide_by_u();
        V = V + delta.substitute(U, V, W);
        W = W + U * lift_poly1(q, U);
    };

    for (const UVPGen& gen : g.word()) {
        if (auto* h = std::get_if<GenH>(&gen)) {
            U = U * h->a;
            V = V * h->a.inverse();
        } else if (std::holds_alternative<GenI>(gen)) {
            std::swap(U, V);
        } else if (auto* sp = std::get_if<GenSp>(&gen)) {
            validate_sp(P, sp->a, sp->b, sp->c);
            V = V * sp->c;
            W = W * sp->a + Poly3::constant(sp->b);
        } else if (auto* t = std::get_if<GenT>(&gen)) {
            twist(t->q);
        } else if (auto* t0 = std::get_if<GenT0>(&gen)) {
            twist(Poly1::constant(t0->a));
        }
    }
    return {U, V, W};
}

Scalar check_relation(const UVPAut& g, const SurfaceUVP& s) {
    Field k = s.field();
    CoordinateMap m = apply(g, s);
    Poly3 relation_in =
        Poly3::variable(k, 0) * Poly3::variable(k, 1) - lift_poly1(s.P(), Poly3::variable(k, 2));
    Poly3 relation_out = m.u * m.v - lift_poly1(s.P(), m.w);
    Scalar kappa = relation_out.coeff({1, 1, 0});
    if (kappa.is_zero() || relation_out != relation_in * kappa)
        throw DomainError("relation check failed: image does not rescale uv - P(w)");
    return kappa;
}

namespace {

std::optional<Scalar> sp_constant(const Poly1& P, const Scalar& a, const Scalar& b) {
    Poly1 comp = P.compose(affine_line(P.field(), a, b));
    if (comp.degree() != P.degree()) return std::nullopt;
    Scalar c = comp.leading() / P.leading();
    if (comp == P * c) return c;
    return std::nullopt;
}

// P = lead (w - mu)^n?
std::optional<Scalar> single_root(const Poly1& P) {
    Field k = P.field();
    int n = P.degree();
    auto check = [&](const Scalar& mu) {
        Poly1 pow = Poly1::constant(P.leading());
        Poly1 lin(k, {-mu, k.one()});
        for (int i = 0; i < n; ++i) pow = pow * lin;
        return pow == P;
    };
    if (k.is_rationals()) {
        Scalar mu = -(P.coeff(static_cast<std::size_t>(n - 1)) /
                      (k.from_int(n) * P.leading()));
        if (check(mu)) return mu;
        return std::nullopt;
    }
    for (const Scalar& mu : k.elements())
        if (check(mu)) return mu;
    return std::nullopt;
}

Int int_nth_root(const Int& x, std::size_t d) {
    if (x < 0) throw DomainError("negative radicand");
    if (x == 0 || x == 1 || d == 1) return x;
    Int lo = 0, hi = x;
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        Int p = 1;
        bool over = false;
        for (std::size_t i = 0; i < d && !over; ++i) {
            p *= mid;
            if (p > x) over = true;
        }
        if (over)
            hi = mid - 1;
        else
            lo = mid;
    }
    return lo;
}

std::vector<Scalar> rational_dth_roots(Field k, const Scalar& rho, std::size_t d) {
    const Rat& r = rho.rational();
    Int num = numerator(r), den = denominator(r);
    bool neg = num < 0;
    if (neg && d % 2 == 0) return {};
    Int anum = neg ? -num : num;
    Int rn = int_nth_root(anum, d), rd = int_nth_root(den, d);
    Int pn = 1, pd = 1;
    for (std::size_t i = 0; i < d; ++i) {
        pn *= rn;
        pd *= rd;
    }
    if (pn != anum || pd != den) return {};
    auto mk = [&](bool negative) {
        return *k.parse_scalar((negative ? "-" : "") + rn.str() + "/" + rd.str());
    };
    if (d % 2 == 1) return {mk(neg)};
    return {mk(false), mk(true)};
}

std::vector<std::size_t> support(const Poly1& p) {
    std::vector<std::size_t> out;
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(static_cast<std::size_t>(i)).is_zero())
            out.push_back(static_cast<std::size_t>(i));
    return out;
}

} // namespace

SpDescription compute_sp(const SurfaceUVP& s) {
    const Poly1& P = s.P();
    Field k = s.field();
    int n = P.degree();
    SpDescription out;
    out.mu = k.zero();

    if (auto mu = single_root(P)) {
        out.one_parameter = true;
        out.mu = *mu;
    }

    if (!k.is_rationals()) {
        for (const Scalar& a : k.elements()) {
            if (a.is_zero()) continue;
            for (const Scalar& b : k.elements())
                if (auto c = sp_constant(P, a, b)) out.elements.push_back({a, b, *c});
        }
        return out;
    }
    if (out.one_parameter) return out; // symbolic family (t, mu(1-t), t^n)

    // center so that any root-permuting rescaling fixes the origin
    Scalar m = -(P.coeff(static_cast<std::size_t>(n - 1)) / (k.from_int(n) * P.leading()));
    Poly1 centered = P.compose(affine_line(k, k.one(), m));
    auto sup = support(centered);
    std::size_t g = 0;
    for (std::size_t j : sup) g = std::gcd(g, static_cast<std::size_t>(n) - j);
    std::vector<Scalar> candidates{k.one()};
    if (g % 2 == 0 && g > 0) candidates.push_back(-k.one());
    for (const Scalar& a : candidates) {
        Scalar b = m * (k.one() - a);
        if (auto c = sp_constant(P, a, b)) out.elements.push_back({a, b, *c});
    }
    return out;
}

bool equivalent_surfaces(const SurfaceUVP& s1, const SurfaceUVP& s2) {
    if (!(s1.field() == s2.field())) throw FieldMismatch("surfaces over different fields");
    if (s1.degree() != s2.degree()) return false;
    Field k = s1.field();
    const Poly1 &P1 = s1.P(), &P2 = s2.P();
    int n = s1.degree();

    if (!k.is_rationals()) {
        for (const Scalar& a : k.elements()) {
            if (a.is_zero()) continue;
            for (const Scalar& b : k.elements()) {
                Poly1 comp = P1.compose(affine_line(k, a, b));
                Scalar m = P2.leading() / comp.leading();
                if (P2 == comp * m) return true;
            }
        }
        return false;
    }

    auto mean = [&](const Poly1& P) {
        return -(P.coeff(static_cast<std::size_t>(n - 1)) / (k.from_int(n) * P.leading()));
    };
    Poly1 c1 = P1.compose(affine_line(k, k.one(), mean(P1)));
    Poly1 c2 = P2.compose(affine_line(k, k.one(), mean(P2)));
    auto sup1 = support(c1), sup2 = support(c2);
    if (sup1 != sup2) return false;
    if (sup1.size() == 1) return true; // both lead (w - mu)^n
    std::size_t j = sup1[sup1.size() - 2];
    Scalar rn = c2.coeff(static_cast<std::size_t>(n)) / c1.coeff(static_cast<std::size_t>(n));
    Scalar rj = c2.coeff(j) / c1.coeff(j);
    std::size_t d = static_cast<std::size_t>(n) - j;
    for (const Scalar& alpha : rational_dth_roots(k, rn / rj, d)) {
        Scalar mu = rn / alpha.pow(Int(static_cast<long long>(n)));
        if (c2 == scale_argument(c1, alpha) * mu) return true;
    }
    return false;
}

// --------------------------------------------------------------- normal form

namespace {

// Net effect of a run of fibration-compatible generators:
//   (u, v, w) -> (u_scale u, v_scale v + ..., w_a w + w_b + u s(u)).
// The neglected additive part of v is forced by the surface relation.
struct JState {
    Scalar u_scale, v_scale, w_a, w_b;
    Poly1 s;

    static JState identity(Field k) { return {k.one(), k.one(), k.one(), k.zero(), Poly1(k)}; }

    bool is_identity() const {
        return u_scale.is_one() && v_scale.is_one() && w_a.is_one() && w_b.is_zero() &&
               s.is_zero();
    }
    bool fibered() const { return s.degree() >= 1; }

    // Induced map on center coordinates of the 0-curve: lambda -> p l + q.
    std::pair<Scalar, Scalar> action() const {
        return {w_a / u_scale, (s.is_zero() ? u_scale.field().zero() : s.coeff(0)) / u_scale};
    }

    JState then(const JState& b) const {
        JState out{u_scale * b.u_scale, v_scale * b.v_scale, w_a * b.w_a,
                   b.w_a * w_b + b.w_b, s * b.w_a + scale_argument(b.s, u_scale) * u_scale};
        return out;
    }

    void absorb(const UVPGen& gen, const Poly1& P) {
        Field k = P.field();
        if (auto* h = std::get_if<GenH>(&gen)) {
            if (h->a.is_zero()) throw DomainError("H needs a unit");
            u_scale = u_scale * h->a;
            v_scale = v_scale * h->a.inverse();
        } else if (auto* sp = std::get_if<GenSp>(&gen)) {
            validate_sp(P, sp->a, sp->b, sp->c);
            v_scale = v_scale * sp->c;
            w_a = w_a * sp->a;
            w_b = w_b * sp->a + sp->b;
            s = s * sp->a;
        } else if (auto* t = std::get_if<GenT>(&gen)) {
            s = s + scale_argument(t->q, u_scale) * u_scale;
        } else if (auto* t0 = std::get_if<GenT0>(&gen)) {
            s = s + Poly1::constant(t0->a * u_scale);
        } else {
            throw DomainError("involution inside a fibration-compatible run");
        }
    }

    std::string serialize() const {
        std::ostringstream os;
        os << "uvp;" << u_scale.str() << ";" << v_scale.str() << ";" << w_a.str() << ";"
           << w_b.str() << ";";
        for (int i = 0; i <= s.degree(); ++i) {
            if (i) os << ",";
            os << s.coeff(static_cast<std::size_t>(i)).str();
        }
        return os.str();
    }

    static JState parse(Field k, const std::string& text) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ';')) parts.push_back(item);
        if (parts.size() < 5 || parts[0] != "uvp") throw DomainError("bad twist payload");
        auto scalar = [&](const std::string& t) {
            auto v = k.parse_scalar(t);
            if (!v) throw DomainError("bad twist payload scalar '" + t + "'");
            return *v;
        };
        JState st = identity(k);
        st.u_scale = scalar(parts[1]);
        st.v_scale = scalar(parts[2]);
        st.w_a = scalar(parts[3]);
        st.w_b = scalar(parts[4]);
        std::vector<Scalar> coeffs;
        if (parts.size() > 5 && !parts[5].empty()) {
            std::stringstream cs(parts[5]);
            while (std::getline(cs, item, ',')) coeffs.push_back(scalar(item));
        }
        st.s = Poly1(k, std::move(coeffs));
        return st;
    }

    std::string printable() const {
        return "u -> " + u_scale.str() + " u, v -> " + v_scale.str() + " v + ..., w -> " +
               w_a.str() + " w + " + w_b.str() +
               (s.is_zero() ? "" : " + u (" + s.str('u') + ")");
    }
};

bool is_involution(const UVPGen& g) { return std::holds_alternative<GenI>(g); }

} // namespace

FiberedComposer uvp_fibered_composer(Field k) {
    return [k](const FiberedModification& a,
               const FiberedModification& b) -> std::optional<Move> {
        if (a.payload.rfind("uvp;", 0) != 0 || b.payload.rfind("uvp;", 0) != 0)
            return std::nullopt;
        JState merged = JState::parse(k, a.payload).then(JState::parse(k, b.payload));
        if (merged.is_identity()) return Move{Isomorphism{}};
        if (merged.fibered()) {
            FiberedModification out;
            out.degree = Weight(merged.s.degree() + 1);
            out.payload = merged.serialize();
            return Move{out};
        }
        return Move{Isomorphism{merged.serialize()}};
    };
}

FibrationGraph uvp_fibration_graph(const SurfaceUVP& s) {
    // one fibration class; the involution realizes the one class of
    // fibration-changing moves, inverse to itself
    std::string vertex = "uv=P(w), P=" + s.P().str('w');
    TransitionOracle oracle = [vertex](const std::string&) -> std::vector<Transition> {
        return {{vertex, "swap", "swap"}};
    };
    return build_graph(oracle, {vertex}, s.degree() >= 3);
}

std::optional<bool> uvp_generated_by_fibrations(const SurfaceUVP& s) {
    auto report = tree_criterion(uvp_fibration_graph(s));
    return report.generated;
}

UVPNormalForm normal_form(const UVPAut& g, const SurfaceUVP& s) {
    if (!(g.field() == s.field())) throw FieldMismatch("word and surface field mismatch");
    Field k = s.field();
    const Poly1& P = s.P();
    int n = s.degree();

    std::vector<UVPGen> gens = g.word();

    // Cancel involution pairs conjugating a pure boundary rescaling: for a
    // run delta = (l u, n v, a w + b) between two involutions, the segment
    // equals Sp(a, b, l n) followed by H(n), exactly.
    bool rewritten = true;
    while (rewritten) {
        rewritten = false;
        std::optional<std::size_t> last_i;
        for (std::size_t i = 0; i <= gens.size(); ++i) {
            bool at_involution = i < gens.size() && is_involution(gens[i]);
            if (!at_involution) continue;
            if (last_i) {
                JState delta = JState::identity(k);
                for (std::size_t j = *last_i + 1; j < i; ++j) delta.absorb(gens[j], P);
                if (delta.s.is_zero()) {
                    std::vector<UVPGen> replacement;
                    if (!(delta.w_a.is_one() && delta.w_b.is_zero() &&
                          (delta.u_scale * delta.v_scale).is_one()))
                        replacement.push_back(
                            GenSp{delta.w_a, delta.w_b, delta.u_scale * delta.v_scale});
                    if (!delta.v_scale.is_one()) replacement.push_back(GenH{delta.v_scale});
                    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(*last_i),
                               gens.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                    gens.insert(gens.begin() + static_cast<std::ptrdiff_t>(*last_i),
                                replacement.begin(), replacement.end());
                    rewritten = true;
                    break;
                }
            }
            last_i = i;
        }
    }

    // Assemble the alternating word, transporting each involution's center
    // along the preceding boundary automorphism.
    ZigzagType base({Weight(0), Weight(-1), Weight(-n)});
    std::vector<Move> moves;
    std::optional<JState> pending_iso;
    JState run = JState::identity(k);
    bool run_dirty = false;

    auto flush_run = [&]() {
        if (!run_dirty) return;
        if (run.fibered()) {
            FiberedModification fm;
            fm.degree = Weight(run.s.degree() + 1);
            fm.payload = run.serialize();
            moves.push_back(fm);
            pending_iso.reset();
        } else if (!run.is_identity()) {
            pending_iso = run;
        }
        run = JState::identity(k);
        run_dirty = false;
    };

    for (const UVPGen& gen : gens) {
        if (!is_involution(gen)) {
            run.absorb(gen, P);
            run_dirty = true;
            continue;
        }
        flush_run();
        Scalar lambda_in = k.zero();
        if (pending_iso) {
            auto [p, q] = pending_iso->action();
            lambda_in = (k.zero() - q) / p; // action^-1(0)
            pending_iso.reset();
        }
        moves.push_back(Reversion{"l:" + lambda_in.str(), "l:0"});
    }
    flush_run();

    std::string trailing;
    if (pending_iso) trailing = pending_iso->printable();

    MoveWord word(base, std::move(moves));
    MoveWord reduced = reduce(word, uvp_fibered_composer(k));
    return {std::move(reduced), n >= 3, std::move(trailing)};
}

} // namespace zzag
