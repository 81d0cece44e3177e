#include "zzag/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zzag {

// --------------------------------------------------------------------- Poly1

Poly1::Poly1(Field k, std::vector<Scalar> coeffs) : k_(k), c_(std::move(coeffs)) {
    for (const Scalar& s : c_)
        if (!(s.field() == k_)) throw FieldMismatch("coefficient outside the base field");
    trim();
}

void Poly1::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly1 Poly1::constant(const Scalar& c) { return Poly1(c.field(), {c}); }

Poly1 Poly1::variable(Field k) { return Poly1(k, {k.zero(), k.one()}); }

Poly1 Poly1::monomial(const Scalar& c, std::size_t e) {
    std::vector<Scalar> v(e + 1, c.field().zero());
    v[e] = c;
    return Poly1(c.field(), std::move(v));
}

Scalar Poly1::coeff(std::size_t e) const { return e < c_.size() ? c_[e] : k_.zero(); }

Scalar Poly1::leading() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
}

Poly1 Poly1::operator+(const Poly1& o) const {
    if (!(k_ == o.k_)) throw FieldMismatch("polynomial field mismatch");
    std::vector<Scalar> v(std::max(c_.size(), o.c_.size()), k_.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return Poly1(k_, std::move(v));
}

Poly1 Poly1::operator-() const {
    std::vector<Scalar> v = c_;
    for (Scalar& s : v) s = -s;
    return Poly1(k_, std::move(v));
}

Poly1 Poly1::operator-(const Poly1& o) const { return *this + (-o); }

Poly1 Poly1::operator*(const Poly1& o) const {
    if (!(k_ == o.k_)) throw FieldMismatch("polynomial field mismatch");
    if (is_zero() || o.is_zero()) return Poly1(k_);
    std::vector<Scalar> v(c_.size() + o.c_.size() - 1, k_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Poly1(k_, std::move(v));
}

Poly1 Poly1::operator*(const Scalar& s) const {
    std::vector<Scalar> v = c_;
    for (Scalar& x : v) x *= s;
    return Poly1(k_, std::move(v));
}

Scalar Poly1::eval(const Scalar& x) const {
    Scalar acc = k_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly1 Poly1::compose(const Poly1& inner) const {
    Poly1 acc(k_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

Poly1 Poly1::derivative() const {
    if (c_.size() <= 1) return Poly1(k_);
    std::vector<Scalar> v(c_.size() - 1, k_.zero());
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * k_.from_int(static_cast<long long>(i));
    return Poly1(k_, std::move(v));
}

namespace {

// Minimal expression reader for sums of terms c*<var>^e.
struct TermReader {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
};

} // namespace

Poly1 Poly1::parse(Field k, std::string_view text, char var) {
    TermReader r{text};
    Poly1 out(k);
    bool first = true;
    while (!r.done()) {
        int sign = 1;
        if (r.peek() == '+' || r.peek() == '-') {
            sign = r.peek() == '-' ? -1 : 1;
            ++r.pos;
        } else if (!first) {
            throw DomainError("expected '+' or '-' in polynomial: " + std::string(text));
        }
        first = false;
        r.skip_ws();
        std::string num;
        while (r.pos < r.s.size() &&
               (std::isdigit(static_cast<unsigned char>(r.s[r.pos])) || r.s[r.pos] == '/'))
            num += r.s[r.pos++];
        Scalar c = k.one();
        if (!num.empty()) {
            auto parsed = k.parse_scalar(num);
            if (!parsed) throw DomainError("bad coefficient '" + num + "'");
            c = *parsed;
        }
        if (sign < 0) c = -c;
        std::size_t e = 0;
        if (!r.done() && r.peek() == '*') ++r.pos;
        if (!r.done() && (r.peek() == var || std::tolower(r.peek()) == std::tolower(var))) {
            ++r.pos;
            e = 1;
            if (!r.done() && r.peek() == '^') {
                ++r.pos;
                r.skip_ws();
                std::string exp;
                while (r.pos < r.s.size() && std::isdigit(static_cast<unsigned char>(r.s[r.pos])))
                    exp += r.s[r.pos++];
                if (exp.empty()) throw DomainError("missing exponent in " + std::string(text));
                e = std::stoul(exp);
            }
        } else if (num.empty()) {
            throw DomainError("expected a term in polynomial: " + std::string(text));
        }
        out = out + monomial(c, e);
    }
    return out;
}

std::string Poly1::str(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (neg) cs = cs.substr(1);
        bool unit = cs == "1" && i > 0;
        if (!unit) out += cs;
        if (i > 0) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// --------------------------------------------------------------------- Poly2

Poly2::Poly2(Field k, int nx, int ny) : k_(k), nx_(nx), ny_(ny) {
    c_.assign(static_cast<std::size_t>(nx + 1) * (ny + 1), k.zero());
}

void Poly2::trim() {
    if (nx_ < 0) return;
    int mx = -1, my = -1;
    for (int i = 0; i <= nx_; ++i)
        for (int j = 0; j <= ny_; ++j)
            if (!at(i, j).is_zero()) {
                mx = std::max(mx, i);
                my = std::max(my, j);
            }
    if (mx < 0) {
        nx_ = ny_ = -1;
        c_.clear();
        return;
    }
    if (mx == nx_ && my == ny_) return;
    Poly2 smaller(k_, mx, my);
    for (int i = 0; i <= mx; ++i)
        for (int j = 0; j <= my; ++j) smaller.at(i, j) = at(i, j);
    *this = std::move(smaller);
}

Poly2 Poly2::constant(const Scalar& c) {
    Poly2 p(c.field(), 0, 0);
    p.at(0, 0) = c;
    p.trim();
    return p;
}

Poly2 Poly2::variable_x(Field k) { return monomial(k.one(), 1, 0); }
Poly2 Poly2::variable_y(Field k) { return monomial(k.one(), 0, 1); }

Poly2 Poly2::monomial(const Scalar& c, int i, int j) {
    if (i < 0 || j < 0) throw DomainError("negative exponent");
    Poly2 p(c.field(), i, j);
    p.at(i, j) = c;
    p.trim();
    return p;
}

int Poly2::degree() const {
    int d = -1;
    for (int i = 0; i <= nx_; ++i)
        for (int j = 0; j <= ny_; ++j)
            if (!at(i, j).is_zero()) d = std::max(d, i + j);
    return d;
}

Scalar Poly2::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i > nx_ || j > ny_) return k_.zero();
    return at(i, j);
}

Poly2 Poly2::operator+(const Poly2& o) const {
    if (!(k_ == o.k_)) throw FieldMismatch("polynomial field mismatch");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Poly2 out(k_, std::max(nx_, o.nx_), std::max(ny_, o.ny_));
    for (int i = 0; i <= out.nx_; ++i)
        for (int j = 0; j <= out.ny_; ++j) out.at(i, j) = coeff(i, j) + o.coeff(i, j);
    out.trim();
    return out;
}

Poly2 Poly2::operator-() const {
    Poly2 out = *this;
    for (Scalar& s : out.c_) s = -s;
    return out;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator*(const Poly2& o) const {
    if (!(k_ == o.k_)) throw FieldMismatch("polynomial field mismatch");
    if (is_zero() || o.is_zero()) return Poly2(k_);
    Poly2 out(k_, nx_ + o.nx_, ny_ + o.ny_);
    for (int i = 0; i <= nx_; ++i)
        for (int j = 0; j <= ny_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (int a = 0; a <= o.nx_; ++a)
                for (int b = 0; b <= o.ny_; ++b) {
                    if (o.at(a, b).is_zero()) continue;
                    out.at(i + a, j + b) += at(i, j) * o.at(a, b);
                }
        }
    out.trim();
    return out;
}

Poly2 Poly2::operator*(const Scalar& s) const {
    Poly2 out = *this;
    for (Scalar& x : out.c_) x *= s;
    out.trim();
    return out;
}

Poly2 Poly2::pow(std::size_t e) const {
    Poly2 acc = constant(k_.one());
    Poly2 base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return acc;
}

Scalar Poly2::eval(const Scalar& x, const Scalar& y) const {
    Scalar acc = k_.zero();
    for (int i = 0; i <= nx_; ++i) {
        Scalar row = k_.zero();
        for (int j = ny_; j >= 0; --j) row = row * y + at(i, j);
        acc = acc + row * x.pow(Int(i));
    }
    return acc;
}

Poly2 Poly2::compose(const Poly2& fx, const Poly2& fy) const {
    if (is_zero()) return Poly2(k_);
    std::vector<Poly2> xp{constant(k_.one())}, yp{constant(k_.one())};
    for (int i = 1; i <= nx_; ++i) xp.push_back(xp.back() * fx);
    for (int j = 1; j <= ny_; ++j) yp.push_back(yp.back() * fy);
    Poly2 out(k_);
    for (int i = 0; i <= nx_; ++i)
        for (int j = 0; j <= ny_; ++j) {
            if (at(i, j).is_zero()) continue;
            out = out + xp[static_cast<std::size_t>(i)] * yp[static_cast<std::size_t>(j)] * at(i, j);
        }
    return out;
}

Poly2 Poly2::derivative_x() const {
    if (nx_ < 1) return Poly2(k_);
    Poly2 out(k_, nx_ - 1, ny_);
    for (int i = 1; i <= nx_; ++i)
        for (int j = 0; j <= ny_; ++j) out.at(i - 1, j) = at(i, j) * k_.from_int(i);
    out.trim();
    return out;
}

Poly2 Poly2::derivative_y() const {
    if (ny_ < 1) return Poly2(k_);
    Poly2 out(k_, nx_, ny_ - 1);
    for (int i = 0; i <= nx_; ++i)
        for (int j = 1; j <= ny_; ++j) out.at(i, j - 1) = at(i, j) * k_.from_int(j);
    out.trim();
    return out;
}

Poly2 Poly2::leading_form() const {
    int d = degree();
    if (d < 0) return Poly2(k_);
    Poly2 out(k_, nx_, ny_);
    for (int i = 0; i <= nx_; ++i)
        for (int j = 0; j <= ny_; ++j)
            if (i + j == d) out.at(i, j) = at(i, j);
    out.trim();
    return out;
}

std::vector<std::tuple<int, int, Scalar>> Poly2::terms() const {
    std::vector<std::tuple<int, int, Scalar>> out;
    for (int i = 0; i <= nx_; ++i)
        for (int j = 0; j <= ny_; ++j)
            if (!at(i, j).is_zero()) out.emplace_back(i, j, at(i, j));
    return out;
}

bool Poly2::operator==(const Poly2& o) const {
    if (!(k_ == o.k_)) return false;
    return (*this - o).is_zero();
}

std::string Poly2::str() const {
    if (is_zero()) return "0";
    std::string out;
    auto ts = terms();
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        auto da = std::get<0>(a) + std::get<1>(a), db = std::get<0>(b) + std::get<1>(b);
        if (da != db) return da > db;
        return std::get<0>(a) > std::get<0>(b);
    });
    for (const auto& [i, j, c] : ts) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (neg) cs = cs.substr(1);
        bool unit = cs == "1" && (i > 0 || j > 0);
        if (!unit) out += cs;
        if (i > 0) out += "x" + (i > 1 ? "^" + std::to_string(i) : "");
        if (j > 0) out += "y" + (j > 1 ? "^" + std::to_string(j) : "");
    }
    return out;
}

// --------------------------------------------------------------------- Poly3

void Poly3::add_term(Exponents e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Poly3 Poly3::constant(const Scalar& c) {
    Poly3 p(c.field());
    p.add_term({0, 0, 0}, c);
    return p;
}

Poly3 Poly3::variable(Field k, std::size_t which) {
    Exponents e{0, 0, 0};
    e[which] = 1;
    return monomial(k.one(), e);
}

Poly3 Poly3::monomial(const Scalar& c, Exponents e) {
    Poly3 p(c.field());
    p.add_term(e, c);
    return p;
}

Scalar Poly3::coeff(Exponents e) const {
    auto it = t_.find(e);
    return it == t_.end() ? k_.zero() : it->second;
}

unsigned Poly3::degree(std::size_t which) const {
    unsigned d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, e[which]);
    return d;
}

Poly3 Poly3::operator+(const Poly3& o) const {
    if (!(k_ == o.k_)) throw FieldMismatch("polynomial field mismatch");
    Poly3 out = *this;
    for (const auto& [e, c] : o.t_) out.add_term(e, c);
    return out;
}

Poly3 Poly3::operator-() const {
    Poly3 out = *this;
    for (auto& [e, c] : out.t_) c = -c;
    return out;
}

Poly3 Poly3::operator-(const Poly3& o) const { return *this + (-o); }

Poly3 Poly3::operator*(const Poly3& o) const {
    if (!(k_ == o.k_)) throw FieldMismatch("polynomial field mismatch");
    Poly3 out(k_);
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_)
            out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return out;
}

Poly3 Poly3::operator*(const Scalar& s) const {
    Poly3 out(k_);
    for (const auto& [e, c] : t_) out.add_term(e, c * s);
    return out;
}

Poly3 Poly3::pow(std::size_t e) const {
    Poly3 acc = constant(k_.one());
    Poly3 base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return acc;
}

Poly3 Poly3::substitute(const Poly3& u, const Poly3& v, const Poly3& w) const {
    // power caches per variable
    auto powers = [this](const Poly3& p, unsigned up_to) {
        std::vector<Poly3> out{constant(k_.one())};
        for (unsigned i = 1; i <= up_to; ++i) out.push_back(out.back() * p);
        return out;
    };
    std::vector<Poly3> up = powers(u, degree(0)), vp = powers(v, degree(1)),
                       wp = powers(w, degree(2));
    Poly3 out(k_);
    for (const auto& [e, c] : t_) out = out + up[e[0]] * vp[e[1]] * wp[e[2]] * c;
    return out;
}

Poly3 Poly3::divide_by_u() const {
    Poly3 out(k_);
    for (const auto& [e, c] : t_) {
        if (e[0] == 0) throw DomainError("not divisible by u");
        out.add_term({e[0] - 1, e[1], e[2]}, c);
    }
    return out;
}

std::string Poly3::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const char* names = "uvw";
    for (const auto& [e, c] : t_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (neg) cs = cs.substr(1);
        bool any_var = e[0] + e[1] + e[2] > 0;
        if (!(cs == "1" && any_var)) os << cs;
        for (std::size_t i = 0; i < 3; ++i)
            if (e[i] > 0) {
                os << names[i];
                if (e[i] > 1) os << "^" << e[i];
            }
    }
    return os.str();
}

Poly3 lift_poly1(const Poly1& p, const Poly3& arg) {
    Poly3 acc(p.field());
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * arg + Poly3::constant(p.coeff(static_cast<std::size_t>(i)));
    return acc;
}

} // namespace zzag
