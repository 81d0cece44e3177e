#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zzag/errors.hpp"

namespace zzag {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class Scalar;

// Coefficient field: the rationals or a prime field F_p. Value type, cheap to
// copy; characteristic 0 encodes the rationals.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);

    bool is_rationals() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    std::string name() const;

    // "Q" or "F<p>", e.g. "F5".
    static std::optional<Field> parse(std::string_view text);

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_int(const Int& v) const;
    // Accepts "7", "-3", "2/5" (rationals), "3" (prime fields, any residue).
    std::optional<Scalar> parse_scalar(std::string_view text) const;

    // Enumerates F_p; throws DomainError over the rationals.
    std::vector<Scalar> elements() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    std::uint64_t p_ = 0; // 0 = rationals
};

// Exact field element. Arithmetic between elements of different fields throws
// FieldMismatch.
class Scalar {
public:
    Scalar() = default; // rational zero

    Field field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    Scalar pow(const Int& e) const; // negative e inverts first

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Canonical per-field order (numeric); used for stable labels only.
    bool operator<(const Scalar& o) const;

    std::string str() const;

    const Rat& rational() const;   // requires rationals
    std::uint64_t residue() const; // requires prime field

private:
    friend class Field;
    Field f_;
    Rat q_;
    std::uint64_t r_ = 0;

    void check_same(const Scalar& o) const;
};

} // namespace zzag
