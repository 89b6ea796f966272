#include "wsys/ordersystem.hpp"

#include <doctest.h>

#include <random>

using namespace wsys;

TEST_CASE("chain counts are binomial coefficients") {
    for (int len = 1; len <= 4; ++len) {
        OrderSystem s;
        s.classes = len;
        for (int i = 0; i + 1 < len; ++i)
            s.strict.push_back({i, i + 1});
        PolynomialQ p = count_strict_maps(s);
        CHECK(p == PolynomialQ::binomial_term(static_cast<unsigned>(len)));
    }
}

TEST_CASE("antichain counts are powers") {
    OrderSystem s;
    s.classes = 2;
    CHECK(count_strict_maps(s) == PolynomialQ::variable() * PolynomialQ::variable());
}

TEST_CASE("cyclic and dead systems count zero") {
    OrderSystem cyc;
    cyc.classes = 2;
    cyc.strict = {{0, 1}, {1, 0}};
    CHECK(count_strict_maps(cyc).is_zero());

    OrderSystem dead;
    dead.classes = 1;
    dead.dead = true;
    CHECK(count_strict_maps(dead).is_zero());
}

TEST_CASE("weight scales the count") {
    OrderSystem s;
    s.classes = 2;
    s.strict = {{0, 1}};
    s.weight = Rational(-3, 4);
    CHECK(count_strict_maps(s) == PolynomialQ::binomial_term(2) * Rational(-3, 4));
}

TEST_CASE("count_strict_maps agrees with brute force on random systems") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        OrderSystem s;
        s.classes = 1 + static_cast<int>(rng() % 4);
        int edges = static_cast<int>(rng() % 5);
        for (int e = 0; e < edges; ++e) {
            int a = static_cast<int>(rng() % s.classes);
            int b = static_cast<int>(rng() % s.classes);
            if (a != b)
                s.strict.push_back({a, b});
        }
        PolynomialQ p = count_strict_maps(s);
        for (int N = 0; N <= 4; ++N)
            CHECK(p(BigInt(N)) == Rational(brute_force_strict_maps(s, N)));
    }
}

TEST_CASE("memoization returns consistent results") {
    OrderSystem s;
    s.classes = 3;
    s.strict = {{0, 1}, {1, 2}};
    CHECK(count_strict_maps(s) == count_strict_maps(s));
}
