#pragma once

#include "wsys/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wsys {

/// Exact univariate polynomial in the size parameter N over the rationals.
/// Stored in the monomial basis; the binomial-basis view C(N,0), C(N,1), ...
/// is derived on demand and round-trips exactly.
class PolynomialQ {
public:
    PolynomialQ() = default;
    explicit PolynomialQ(std::vector<Rational> monomial_coeffs);

    static PolynomialQ constant(const Rational& c);
    static PolynomialQ variable();  // the polynomial N
    /// C(N,k) as a polynomial.
    static PolynomialQ binomial_term(unsigned k);
    /// Polynomial with binomial-basis coefficients e_0, e_1, ...
    static PolynomialQ from_binomial(const std::vector<Rational>& e);

    /// Unique interpolating polynomial of degree <= degree_bound through the
    /// given points. Requires >= degree_bound+1 distinct sample abscissae;
    /// surplus points must be consistent or an std::invalid_argument is
    /// thrown (a wrong degree bound or a buggy sampler).
    static PolynomialQ interpolate(const std::vector<std::pair<BigInt, Rational>>& points,
                                   unsigned degree_bound);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(unsigned k) const { return k < c_.size() ? c_[k] : Rational(0); }

    /// Coefficients in the basis C(N,0), C(N,1), ...; empty for zero.
    std::vector<Rational> binomial_coeffs() const;

    Rational operator()(const BigInt& n) const;

    /// LaTeX rendering in the binomial basis, e.g. "2{N\choose 3}+\frac{N}{4}".
    std::string latex() const;

    PolynomialQ operator+(const PolynomialQ& o) const;
    PolynomialQ operator-(const PolynomialQ& o) const;
    PolynomialQ operator-() const;
    PolynomialQ operator*(const PolynomialQ& o) const;
    PolynomialQ operator*(const Rational& s) const;
    PolynomialQ& operator+=(const PolynomialQ& o) { return *this = *this + o; }
    PolynomialQ& operator-=(const PolynomialQ& o) { return *this = *this - o; }
    bool operator==(const PolynomialQ& o) const { return c_ == o.c_; }

private:
    std::vector<Rational> c_;  // no trailing zeros
    void trim();
};

}  // namespace wsys
