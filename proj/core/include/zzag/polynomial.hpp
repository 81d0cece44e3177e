#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zzag/field.hpp"

namespace zzag {

// Dense univariate polynomial with exact coefficients. Zero is the empty
// coefficient vector; representations are always trimmed.
class Poly1 {
public:
    explicit Poly1(Field k) : k_(k) {}
    Poly1(Field k, std::vector<Scalar> coeffs);

    static Poly1 constant(const Scalar& c);
    static Poly1 variable(Field k); // x
    static Poly1 monomial(const Scalar& c, std::size_t e);
    // "w^2-1", "3w^2 + 1/2w - 4"; the variable letter is checked.
    static Poly1 parse(Field k, std::string_view text, char var);

    Field field() const { return k_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Scalar coeff(std::size_t e) const;
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar leading() const;

    Poly1 operator+(const Poly1& o) const;
    Poly1 operator-(const Poly1& o) const;
    Poly1 operator*(const Poly1& o) const;
    Poly1 operator*(const Scalar& s) const;
    Poly1 operator-() const;

    Scalar eval(const Scalar& x) const;
    Poly1 compose(const Poly1& inner) const; // this(inner(x))
    Poly1 derivative() const;

    bool operator==(const Poly1& o) const { return k_ == o.k_ && c_ == o.c_; }
    bool operator!=(const Poly1& o) const { return !(*this == o); }

    std::string str(char var) const;

private:
    Field k_;
    std::vector<Scalar> c_;
    void trim();
};

// Dense bivariate polynomial, coefficient of x^i y^j at index i*(ny+1)+j.
// Sized generously on construction and trimmed; used where products of
// moderately large dense polynomials dominate.
class Poly2 {
public:
    explicit Poly2(Field k) : k_(k), nx_(-1), ny_(-1) {}

    static Poly2 constant(const Scalar& c);
    static Poly2 variable_x(Field k);
    static Poly2 variable_y(Field k);
    static Poly2 monomial(const Scalar& c, int i, int j);

    Field field() const { return k_; }
    bool is_zero() const { return nx_ < 0; }
    int degree() const; // total degree, -1 for zero
    int degree_x() const { return nx_; }
    int degree_y() const { return ny_; }
    Scalar coeff(int i, int j) const;

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator*(const Scalar& s) const;
    Poly2 operator-() const;
    Poly2 pow(std::size_t e) const;

    Scalar eval(const Scalar& x, const Scalar& y) const;
    Poly2 compose(const Poly2& fx, const Poly2& fy) const; // this(fx, fy)
    Poly2 derivative_x() const;
    Poly2 derivative_y() const;

    // Homogeneous part of top total degree.
    Poly2 leading_form() const;
    // All (i, j, coeff) with nonzero coeff, lexicographic in (i, j).
    std::vector<std::tuple<int, int, Scalar>> terms() const;

    bool operator==(const Poly2& o) const;
    bool operator!=(const Poly2& o) const { return !(*this == o); }

    std::string str() const; // in x, y

private:
    Field k_;
    int nx_, ny_; // -1,-1 for zero
    std::vector<Scalar> c_;

    Poly2(Field k, int nx, int ny);
    Scalar& at(int i, int j) { return c_[static_cast<std::size_t>(i) * (ny_ + 1) + j]; }
    const Scalar& at(int i, int j) const {
        return c_[static_cast<std::size_t>(i) * (ny_ + 1) + j];
    }
    void trim();
};

// Sparse polynomial in u, v, w.
class Poly3 {
public:
    using Exponents = std::array<unsigned, 3>;

    explicit Poly3(Field k) : k_(k) {}

    static Poly3 constant(const Scalar& c);
    static Poly3 variable(Field k, std::size_t which); // 0:u 1:v 2:w
    static Poly3 monomial(const Scalar& c, Exponents e);

    Field field() const { return k_; }
    bool is_zero() const { return t_.empty(); }
    Scalar coeff(Exponents e) const;
    const std::map<Exponents, Scalar>& terms() const { return t_; }
    unsigned degree(std::size_t which) const;

    Poly3 operator+(const Poly3& o) const;
    Poly3 operator-(const Poly3& o) const;
    Poly3 operator*(const Poly3& o) const;
    Poly3 operator*(const Scalar& s) const;
    Poly3 operator-() const;
    Poly3 pow(std::size_t e) const;

    // this with u,v,w replaced by the given polynomials
    Poly3 substitute(const Poly3& u, const Poly3& v, const Poly3& w) const;
    // division by u; throws when some term misses the variable
    Poly3 divide_by_u() const;

    bool operator==(const Poly3& o) const { return k_ == o.k_ && t_ == o.t_; }
    bool operator!=(const Poly3& o) const { return !(*this == o); }

    std::string str() const;

private:
    Field k_;
    std::map<Exponents, Scalar> t_;
    void add_term(Exponents e, const Scalar& c);
};

// Lift of a univariate polynomial: P evaluated on a trivariate argument.
Poly3 lift_poly1(const Poly1& p, const Poly3& arg);

} // namespace zzag
