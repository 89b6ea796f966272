#include "wsys/families.hpp"

#include <doctest.h>

using namespace wsys;

namespace {

PolynomialQ binom_combo(std::vector<Rational> e) {
    return PolynomialQ::from_binomial(e);
}

}  // namespace

TEST_CASE("rule table sizes") {
    CHECK(pattern_rules(Family::GL).size() == 1);
    CHECK(pattern_rules(Family::SO_EVEN).size() == 8);
    CHECK(pattern_rules(Family::SO_ODD).size() == 12);
    CHECK(pattern_rules(Family::SP).size() == 8);
}

TEST_CASE("every rule pairs the slots into two classes of two") {
    for (Family f : kAllFamilies)
        for (const auto& r : pattern_rules(f)) {
            int c0 = 0, c1 = 0;
            for (int s = 0; s < 4; ++s)
                (r.cls[s] == 0 ? c0 : c1)++;
            CHECK(c0 == 2);
            CHECK(c1 == 2);
            CHECK((r.sign == 1 || r.sign == -1));
        }
}

TEST_CASE("bare circle evaluates to the representation dimension") {
    for (Family f : kAllFamilies)
        CHECK(evaluate_weight(parse_oriented(""), f) == rep_dimension_poly(f));
}

TEST_CASE("single arrow evaluates to half the ambient dimension") {
    for (Family f : kAllFamilies)
        CHECK(evaluate_weight(parse_oriented("t1 h1"), f) ==
              ambient_dimension_poly(f) * Rational(1, 2));
}

TEST_CASE("gl values of the two 2-arrow sample diagrams") {
    PolynomialQ nested = evaluate_weight(parse_oriented("t1 t2 h2 h1"), Family::GL);
    PolynomialQ sequential = evaluate_weight(parse_oriented("t1 h1 t2 h2"), Family::GL);
    CHECK(nested == binom_combo({0, Rational(1, 4), 1, 1}));
    CHECK(sequential == binom_combo({0, Rational(1, 4), 2, 2}));
    CHECK(nested != sequential);
}

TEST_CASE("so(2N) value of the 2-arrow crossing") {
    CHECK(evaluate_weight(parse_oriented("t1 t2 h1 h2"), Family::SO_EVEN) ==
          binom_combo({0, Rational(1, 8), Rational(1, 2)}));
}

TEST_CASE("evaluate_weight is rotation invariant") {
    OrientedChordDiagram d = parse_oriented("t1 t2 h1 t3 h3 h2");
    for (Family f : kAllFamilies) {
        PolynomialQ base = evaluate_weight(d, f);
        for (int k = 1; k < 2 * d.n; ++k)
            CHECK(evaluate_weight(rotate(d, k), f) == base);
    }
}

TEST_CASE("degree bound n+1") {
    for (int n = 0; n <= 3; ++n)
        for (const auto& d : enumerate_oriented(n))
            for (Family f : kAllFamilies)
                CHECK(evaluate_weight(d, f).degree() <= n + 1);
}

TEST_CASE("family tags round trip") {
    for (Family f : kAllFamilies)
        CHECK(family_from_tag(family_tag(f)) == f);
    CHECK_THROWS_AS(family_from_tag("su"), std::invalid_argument);
}

TEST_CASE("sector_index maps blocks disjointly") {
    for (Family f : kAllFamilies) {
        int N = 3, d = rep_dimension(f, N);
        std::vector<int> seen(d + 1, 0);
        if (f == Family::SO_ODD)
            seen[sector_index(f, N, Sector::U, 1)]++;
        for (int v = 1; v <= N; ++v) {
            seen[sector_index(f, N, Sector::A, v)]++;
            if (f != Family::GL)
                seen[sector_index(f, N, Sector::B, v)]++;
        }
        for (int i = 1; i <= (f == Family::GL ? N : d); ++i)
            CHECK(seen[i] == 1);
    }
}
