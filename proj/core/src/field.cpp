#include "zzag/field.hpp"

#include <charconv>

namespace zzag {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

// Inverse of a modulo p via extended Euclid; a must be a unit.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw DomainError("division by zero in F_" + std::to_string(p));
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw DomainError("noninvertible residue");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("field characteristic must be prime, got " + std::to_string(p));
    if (p > (1ull << 31)) throw DomainError("prime field modulus too large");
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::name() const {
    return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

std::optional<Field> Field::parse(std::string_view text) {
    if (text == "Q" || text == "q") return rationals();
    if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
        std::uint64_t p = 0;
        auto rest = text.substr(1);
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
        if (ec != std::errc{} || ptr != rest.data() + rest.size()) return std::nullopt;
        if (!is_prime(p) || p > (1ull << 31)) return std::nullopt;
        return prime(p);
    }
    return std::nullopt;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const { return from_int(Int(v)); }

Scalar Field::from_int(const Int& v) const {
    Scalar s;
    s.f_ = *this;
    if (is_rationals()) {
        s.q_ = Rat(v);
    } else {
        Int m = v % Int(p_);
        if (m < 0) m += Int(p_);
        s.r_ = m.convert_to<std::uint64_t>();
    }
    return s;
}

std::optional<Scalar> Field::parse_scalar(std::string_view text) const {
    if (text.empty()) return std::nullopt;
    try {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            Int v{std::string(text)};
            return from_int(v);
        }
        Int num{std::string(text.substr(0, slash))};
        Int den{std::string(text.substr(slash + 1))};
        if (den == 0) return std::nullopt;
        if (is_rationals()) {
            Scalar s;
            s.f_ = *this;
            s.q_ = Rat(num, den);
            return s;
        }
        return from_int(num) / from_int(den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::vector<Scalar> Field::elements() const {
    if (is_rationals()) throw DomainError("cannot enumerate the rationals");
    std::vector<Scalar> out;
    out.reserve(p_);
    for (std::uint64_t v = 0; v < p_; ++v) out.push_back(from_int(static_cast<long long>(v)));
    return out;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(f_ == o.f_))
        throw FieldMismatch("field mismatch: " + f_.name() + " vs " + o.f_.name());
}

bool Scalar::is_zero() const {
    return f_.is_rationals() ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
    return f_.is_rationals() ? q_ == 1 : r_ == 1;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (f_.is_rationals())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : f_.characteristic() - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (f_.is_rationals()) {
        s.q_ = q_ + o.q_;
    } else {
        std::uint64_t p = f_.characteristic();
        s.r_ = (r_ + o.r_) % p;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (f_.is_rationals())
        s.q_ = q_ * o.q_;
    else
        s.r_ = mul_mod(r_, o.r_, f_.characteristic());
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    Scalar s = *this;
    if (f_.is_rationals())
        s.q_ = Rat(1) / q_;
    else
        s.r_ = inv_mod(r_, f_.characteristic());
    return s;
}

Scalar Scalar::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this;
    Scalar acc = f_.one();
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(f_ == o.f_)) return false;
    return f_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same(o);
    return f_.is_rationals() ? q_ < o.q_ : r_ < o.r_;
}

std::string Scalar::str() const {
    if (f_.is_rationals()) {
        if (denominator(q_) == 1) return numerator(q_).str();
        return numerator(q_).str() + "/" + denominator(q_).str();
    }
    return std::to_string(r_);
}

const Rat& Scalar::rational() const {
    if (!f_.is_rationals()) throw DomainError("not a rational value");
    return q_;
}

std::uint64_t Scalar::residue() const {
    if (f_.is_rationals()) throw DomainError("not a prime-field value");
    return r_;
}

} // namespace zzag
