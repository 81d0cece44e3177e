#include "zzag/plane.hpp"

#include <algorithm>
#include <cctype>

namespace zzag {

namespace {

// Sums of terms c x^i y^j, e.g. "y + 2x^3 - 1/2xy".
Poly2 parse_poly2(Field k, std::string_view text) {
    Poly2 out(k);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    bool first = true;
    while (true) {
        skip();
        if (pos >= text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw DomainError("expected '+' or '-' in '" + std::string(text) + "'");
        }
        first = false;
        skip();
        std::string num;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            num += text[pos++];
        Scalar c = k.one();
        if (!num.empty()) {
            auto parsed = k.parse_scalar(num);
            if (!parsed) throw DomainError("bad coefficient '" + num + "'");
            c = *parsed;
        }
        if (sign < 0) c = -c;
        int ex = 0, ey = 0;
        bool saw_var = false;
        while (pos < text.size()) {
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            if (pos >= text.size()) break;
            char v = static_cast<char>(std::tolower(text[pos]));
            if (v != 'x' && v != 'y') break;
            ++pos;
            int e = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                std::string es;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    es += text[pos++];
                if (es.empty()) throw DomainError("missing exponent in '" + std::string(text) + "'");
                e = std::stoi(es);
            }
            (v == 'x' ? ex : ey) += e;
            saw_var = true;
        }
        if (num.empty() && !saw_var)
            throw DomainError("expected a term in '" + std::string(text) + "'");
        out = out + Poly2::monomial(c, ex, ey);
    }
    return out;
}

} // namespace

PolyAut::PolyAut(Poly2 f1, Poly2 f2) : f1_(std::move(f1)), f2_(std::move(f2)) {
    if (!(f1_.field() == f2_.field())) throw FieldMismatch("component field mismatch");
}

PolyAut PolyAut::identity(Field k) {
    return PolyAut(Poly2::variable_x(k), Poly2::variable_y(k));
}

PolyAut PolyAut::swap_xy(Field k) {
    return PolyAut(Poly2::variable_y(k), Poly2::variable_x(k));
}

PolyAut PolyAut::affine(Field k, const Scalar& a1, const Scalar& a2, const Scalar& a3,
                        const Scalar& b1, const Scalar& b2, const Scalar& b3) {
    if ((a1 * b2 - a2 * b1).is_zero()) throw DomainError("degenerate linear part");
    Poly2 f1 = Poly2::monomial(a1, 1, 0) + Poly2::monomial(a2, 0, 1) + Poly2::constant(a3);
    Poly2 f2 = Poly2::monomial(b1, 1, 0) + Poly2::monomial(b2, 0, 1) + Poly2::constant(b3);
    return PolyAut(std::move(f1), std::move(f2));
}

PolyAut PolyAut::triangular(const Poly1& p) {
    Field k = p.field();
    Poly2 shift(k);
    for (int i = 0; i <= p.degree(); ++i)
        shift = shift + Poly2::monomial(p.coeff(static_cast<std::size_t>(i)), i, 0);
    return PolyAut(Poly2::variable_x(k), Poly2::variable_y(k) + shift);
}

PolyAut PolyAut::parse(Field k, std::string_view text) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw DomainError("expected 'f1, f2' but got '" + std::string(text) + "'");
    return PolyAut(parse_poly2(k, text.substr(0, comma)), parse_poly2(k, text.substr(comma + 1)));
}

bool PolyAut::is_affine() const { return f1_.degree() <= 1 && f2_.degree() <= 1; }

bool PolyAut::preserves_fibration() const {
    // f1 = a x + b with a != 0
    if (f1_.degree_y() > 0 || f1_.degree_x() != 1) return false;
    // f2 = c y + p(x) with c != 0
    if (f2_.degree_y() != 1) return false;
    for (const auto& [i, j, c] : f2_.terms())
        if (j == 1 && i > 0) return false;
    return true;
}

bool PolyAut::is_identity() const {
    Field k = field();
    return f1_ == Poly2::variable_x(k) && f2_ == Poly2::variable_y(k);
}

std::pair<Scalar, Scalar> PolyAut::eval(const Scalar& x, const Scalar& y) const {
    return {f1_.eval(x, y), f2_.eval(x, y)};
}

std::string PolyAut::str() const { return f1_.str() + ", " + f2_.str(); }

PolyAut compose(const PolyAut& f, const PolyAut& g) {
    if (!(f.field() == g.field())) throw FieldMismatch("field mismatch");
    return PolyAut(f.f1().compose(g.f1(), g.f2()), f.f2().compose(g.f1(), g.f2()));
}

namespace {

// Constant c with hi = c * lo, both homogeneous of the same degree; nullopt
// when not proportional.
std::optional<Scalar> proportionality(const Poly2& hi, const Poly2& lo) {
    auto lo_terms = lo.terms();
    if (lo_terms.empty()) return std::nullopt;
    auto [i, j, c] = lo_terms.front();
    Scalar ratio = hi.coeff(i, j) / c;
    if ((hi - lo * ratio).is_zero()) return ratio;
    return std::nullopt;
}

struct Peel {
    bool on_f2;  // which component was reduced
    Scalar c;
    std::size_t k;
};

PolyAut invert_affine(const PolyAut& a) {
    Field kf = a.field();
    Scalar a1 = a.f1().coeff(1, 0), a2 = a.f1().coeff(0, 1), a3 = a.f1().coeff(0, 0);
    Scalar b1 = a.f2().coeff(1, 0), b2 = a.f2().coeff(0, 1), b3 = a.f2().coeff(0, 0);
    Scalar det = a1 * b2 - a2 * b1;
    if (det.is_zero()) throw NotAnAutomorphism("affine part is singular");
    Scalar i1 = b2 / det, i2 = -a2 / det, j1 = -b1 / det, j2 = a1 / det;
    return PolyAut::affine(kf, i1, i2, -(i1 * a3 + i2 * b3), j1, j2, -(j1 * a3 + j2 * b3));
}

// Inverse of (a x + b, c y + p(x)).
PolyAut invert_jon(const PolyAut& f) {
    Field kf = f.field();
    Scalar a = f.f1().coeff(1, 0), b = f.f1().coeff(0, 0);
    Scalar c = f.f2().coeff(0, 1);
    if (a.is_zero() || c.is_zero()) throw NotAnAutomorphism("degenerate fibration-preserving map");
    Poly1 p(kf);
    for (const auto& [i, j, coef] : f.f2().terms())
        if (j == 0) p = p + Poly1::monomial(coef, static_cast<std::size_t>(i));
    Poly1 xi = Poly1(kf, {-(b / a), a.inverse()}); // a^-1 (x - b)
    Poly1 comp = p.compose(xi);
    Poly2 px(kf);
    for (int i = 0; i <= comp.degree(); ++i)
        px = px + Poly2::monomial(comp.coeff(static_cast<std::size_t>(i)), i, 0);
    Poly2 g1 = Poly2::variable_x(kf) * a.inverse() + Poly2::constant(-(b / a));
    Poly2 g2 = (Poly2::variable_y(kf) - px) * c.inverse();
    return PolyAut(std::move(g1), std::move(g2));
}

} // namespace

std::vector<JungFactor> jung_factorize(const PolyAut& f) {
    Field k = f.field();
    Poly2 jac = f.f1().derivative_x() * f.f2().derivative_y() -
                f.f1().derivative_y() * f.f2().derivative_x();
    if (jac.is_zero() || jac.degree() != 0)
        throw NotAnAutomorphism("not an automorphism: Jacobian is not a nonzero constant");

    PolyAut cur = f;
    std::vector<Peel> peels; // outermost first
    while (cur.degree() > 1) {
        int d1 = cur.f1().degree(), d2 = cur.f2().degree();
        auto try_reduce = [&](bool on_f2) -> bool {
            const Poly2& hi = on_f2 ? cur.f2() : cur.f1();
            const Poly2& lo = on_f2 ? cur.f1() : cur.f2();
            int dh = hi.degree(), dl = lo.degree();
            if (dl <= 0 || dh < dl || dh % dl != 0) return false;
            std::size_t kk = static_cast<std::size_t>(dh / dl);
            auto c = proportionality(hi.leading_form(), lo.leading_form().pow(kk));
            if (!c) return false;
            Poly2 reduced = hi - lo.pow(kk) * *c;
            if (reduced.degree() >= dh) return false;
            peels.push_back({on_f2, *c, kk});
            cur = on_f2 ? PolyAut(cur.f1(), std::move(reduced))
                        : PolyAut(std::move(reduced), cur.f2());
            return true;
        };
        bool ok = d1 >= d2 ? (try_reduce(false) || try_reduce(true))
                           : (try_reduce(true) || try_reduce(false));
        if (!ok)
            throw NotAnAutomorphism("not an automorphism: degree reduction stalls at degree " +
                                    std::to_string(cur.degree()));
    }
    // affine core, must be invertible
    invert_affine(cur);

    // application order: core first, then the peels from the inside out
    std::vector<PolyAut> maps{cur};
    for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
        Poly1 mono = Poly1::monomial(it->c, it->k);
        if (it->on_f2) {
            maps.push_back(PolyAut::triangular(mono));
        } else if (it->k <= 1) {
            maps.push_back(PolyAut::affine(k, k.one(), it->c, k.zero(), k.zero(), k.one(),
                                           k.zero())); // x + c y
        } else {
            maps.push_back(PolyAut::swap_xy(k));
            maps.push_back(PolyAut::triangular(mono));
            maps.push_back(PolyAut::swap_xy(k));
        }
    }

    // merge neighbours that live on the same side of the amalgam
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
            bool both_affine = maps[i].is_affine() && maps[i + 1].is_affine();
            bool both_fib = maps[i].preserves_fibration() && maps[i + 1].preserves_fibration();
            if (both_affine || both_fib) {
                maps[i] = compose(maps[i + 1], maps[i]);
                maps.erase(maps.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
                break;
            }
        }
        for (std::size_t i = 0; i < maps.size() && maps.size() > 1;) {
            if (maps[i].is_identity()) {
                maps.erase(maps.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
            } else {
                ++i;
            }
        }
    }

    std::vector<JungFactor> out;
    out.reserve(maps.size());
    for (PolyAut& m : maps) {
        FactorKind kind =
            m.preserves_fibration() && m.degree() >= 2 ? FactorKind::Triangular : FactorKind::Affine;
        out.push_back({kind, std::move(m)});
    }
    return out;
}

PolyAut compose_factors(std::span<const JungFactor> factors) {
    if (factors.empty()) throw DomainError("empty factor list");
    PolyAut acc = factors.front().map;
    for (std::size_t i = 1; i < factors.size(); ++i) acc = compose(factors[i].map, acc);
    return acc;
}

MoveWord to_move_word(std::span<const JungFactor> factors) {
    if (factors.empty()) throw DomainError("empty factor list");
    Field k = factors.front().map.field();
    ZigzagType base({Weight(0), Weight(-1)});
    std::vector<Move> moves;
    for (const JungFactor& fac : factors) {
        const PolyAut& m = fac.map;
        if (fac.kind == FactorKind::Triangular) {
            FiberedModification fm;
            fm.degree = Weight(m.degree());
            fm.payload = m.str();
            moves.push_back(fm);
            continue;
        }
        if (m.preserves_fibration()) continue; // boundary isomorphism, no move
        // reversion: center tokens are the fiber directions moved by the
        // block and its inverse
        Scalar a1 = m.f1().coeff(1, 0), a2 = m.f1().coeff(0, 1), b2 = m.f2().coeff(0, 1);
        if (a2.is_zero()) throw DomainError("internal: affine block unexpectedly fibration-preserving");
        moves.push_back(Reversion{"dir:" + (-(a1 / a2)).str(), "dir:" + (b2 / a2).str()});
    }
    return MoveWord(std::move(base), std::move(moves));
}

FiberedComposer plane_fibered_composer(Field k) {
    return [k](const FiberedModification& a,
               const FiberedModification& b) -> std::optional<Move> {
        if (a.payload.empty() || b.payload.empty()) return std::nullopt;
        PolyAut ma = PolyAut::parse(k, a.payload);
        PolyAut mb = PolyAut::parse(k, b.payload);
        PolyAut composed = compose(mb, ma); // a acts first
        if (composed.is_identity()) return Move{Isomorphism{}};
        FiberedModification out;
        out.degree = Weight(std::max(composed.degree(), 2));
        out.payload = composed.str();
        out.possibly_identity = composed.degree() < 2;
        return Move{out};
    };
}

FibrationGraph plane_fibration_graph(Field k) {
    std::string vertex = "plane/" + k.name();
    TransitionOracle oracle = [vertex](const std::string&) -> std::vector<Transition> {
        return {{vertex, "swap", "swap"}};
    };
    return build_graph(oracle, {vertex}, false);
}

bool plane_generated_by_fibrations() { return true; }

std::vector<JungFactor> invert_factors(std::span<const JungFactor> factors) {
    std::vector<JungFactor> out;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        PolyAut inv = it->kind == FactorKind::Affine ? invert_affine(it->map)
                                                     : invert_jon(it->map);
        out.push_back({it->kind, std::move(inv)});
    }
    return out;
}

} // namespace zzag
