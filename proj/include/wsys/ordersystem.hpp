#pragma once

#include "wsys/polynomial.hpp"

#include <utility>
#include <vector>

namespace wsys {

/// A system of value classes with strict order constraints. Counting maps
/// from the classes into {1..N} that satisfy every edge gives a polynomial
/// in N; the accumulated weight multiplies the result.
struct OrderSystem {
    int classes = 0;
    std::vector<std::pair<int, int>> strict;  // (a, b) meaning value(a) < value(b)
    Rational weight = 1;
    bool dead = false;  // forced count zero
};

/// The polynomial P with P(N) = weight * #{maps classes -> {1..N} satisfying
/// all strict edges}. Cyclic (unsatisfiable) systems and dead systems give
/// the zero polynomial. Results are memoized; the cache is thread-safe.
PolynomialQ count_strict_maps(const OrderSystem& s);

/// Direct enumeration of all maps into {1..N}; the independent oracle used
/// by tests. No memoization, exponential in classes.
BigInt brute_force_strict_maps(const OrderSystem& s, int N);

}  // namespace wsys
