#include "wsys/polynomial.hpp"

#include <stdexcept>

namespace wsys {

PolynomialQ::PolynomialQ(std::vector<Rational> monomial_coeffs) : c_(std::move(monomial_coeffs)) {
    trim();
}

void PolynomialQ::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

PolynomialQ PolynomialQ::constant(const Rational& c) {
    return PolynomialQ(std::vector<Rational>{c});
}

PolynomialQ PolynomialQ::variable() {
    return PolynomialQ(std::vector<Rational>{0, 1});
}

PolynomialQ PolynomialQ::binomial_term(unsigned k) {
    // C(N,k) = N(N-1)...(N-k+1)/k!
    PolynomialQ p = constant(1);
    for (unsigned i = 0; i < k; ++i) {
        PolynomialQ lin(std::vector<Rational>{Rational(-static_cast<int>(i)), 1});
        p = p * lin * Rational(1, static_cast<int>(i) + 1);
    }
    return p;
}

PolynomialQ PolynomialQ::from_binomial(const std::vector<Rational>& e) {
    PolynomialQ p;
    for (unsigned k = 0; k < e.size(); ++k)
        if (e[k] != 0)
            p += binomial_term(k) * e[k];
    return p;
}

std::vector<Rational> PolynomialQ::binomial_coeffs() const {
    // e_k = Delta^k p(0): finite differences of the values p(0), p(1), ...
    if (is_zero())
        return {};
    unsigned d = static_cast<unsigned>(degree());
    std::vector<Rational> diff(d + 1);
    for (unsigned j = 0; j <= d; ++j)
        diff[j] = (*this)(BigInt(j));
    std::vector<Rational> e(d + 1);
    for (unsigned k = 0; k <= d; ++k) {
        e[k] = diff[0];
        for (unsigned j = 0; j + 1 < diff.size(); ++j)
            diff[j] = diff[j + 1] - diff[j];
        diff.pop_back();
    }
    while (!e.empty() && e.back() == 0)
        e.pop_back();
    return e;
}

Rational PolynomialQ::operator()(const BigInt& n) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * Rational(n) + *it;
    return acc;
}

PolynomialQ PolynomialQ::operator+(const PolynomialQ& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i)
        r[i] += o.c_[i];
    return PolynomialQ(std::move(r));
}

PolynomialQ PolynomialQ::operator-() const {
    std::vector<Rational> r = c_;
    for (auto& x : r)
        x = -x;
    return PolynomialQ(std::move(r));
}

PolynomialQ PolynomialQ::operator-(const PolynomialQ& o) const {
    return *this + (-o);
}

PolynomialQ PolynomialQ::operator*(const PolynomialQ& o) const {
    if (is_zero() || o.is_zero())
        return {};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return PolynomialQ(std::move(r));
}

PolynomialQ PolynomialQ::operator*(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& x : r)
        x *= s;
    return PolynomialQ(std::move(r));
}

PolynomialQ PolynomialQ::interpolate(const std::vector<std::pair<BigInt, Rational>>& points,
                                     unsigned degree_bound) {
    if (points.size() < degree_bound + 1)
        throw std::invalid_argument("interpolate: not enough sample points");
    // Lagrange interpolation through the first degree_bound+1 points.
    PolynomialQ p;
    unsigned m = degree_bound + 1;
    for (unsigned i = 0; i < m; ++i) {
        PolynomialQ li = constant(1);
        Rational denom = 1;
        for (unsigned j = 0; j < m; ++j) {
            if (j == i)
                continue;
            if (points[j].first == points[i].first)
                throw std::invalid_argument("interpolate: duplicate abscissa");
            li = li * PolynomialQ(std::vector<Rational>{Rational(-points[j].first), 1});
            denom *= Rational(points[i].first - points[j].first);
        }
        p += li * (points[i].second / denom);
    }
    for (const auto& [x, y] : points)
        if (p(x) != y)
            throw std::invalid_argument("interpolate: inconsistent surplus point at N=" + x.str());
    return p;
}

std::string PolynomialQ::latex() const {
    auto e = binomial_coeffs();
    if (e.empty())
        return "0";
    auto frac = [](const Rational& r) -> std::string {
        std::string num = numerator(r).str();
        bool neg = num[0] == '-';
        if (neg)
            num = num.substr(1);
        std::string body = denominator(r) == 1
                               ? num
                               : "\\frac{" + num + "}{" + denominator(r).str() + "}";
        return (neg ? "-" : "") + body;
    };
    std::string out;
    for (int k = static_cast<int>(e.size()) - 1; k >= 0; --k) {
        const Rational& c = e[k];
        if (c == 0)
            continue;
        std::string term;
        if (k == 0) {
            term = frac(c);
        } else {
            std::string basis = k == 1 ? "N" : "{N\\choose " + std::to_string(k) + "}";
            if (c == 1)
                term = basis;
            else if (c == -1)
                term = "-" + basis;
            else if (denominator(c) == 1)
                term = frac(c) + basis;
            else if (k == 1)
                term = (c < 0 ? "-" : "") +
                       ("\\frac{N}{" + denominator(c).str() + "}");
            else
                term = frac(c) + basis;
        }
        // N/4 style needs the numerator folded in when it is not 1.
        if (k == 1 && denominator(c) != 1 && abs(numerator(c)) != 1)
            term = (c < 0 ? std::string("-") : std::string()) + "\\frac{" +
                   BigInt(abs(numerator(c))).str() + "N}{" + denominator(c).str() + "}";
        if (!out.empty() && term[0] != '-')
            out += "+";
        out += term;
    }
    return out;
}

}  // namespace wsys
