#include "wsys/rational.hpp"

#include <stdexcept>

namespace wsys {

std::string rational_to_string(const Rational& r) {
    if (r == 0)
        return "0";
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

Rational rational_from_string(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("bad rational: '" + s + "'"); };
    if (s.empty())
        throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        if (q == 0)
            throw bad();
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

Rational binom(const BigInt& n, unsigned k) {
    Rational acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= Rational(n - i);
        acc /= Rational(i + 1);
    }
    return acc;
}

}  // namespace wsys
