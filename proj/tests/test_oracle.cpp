#include "wsys/oracle.hpp"

#include <doctest.h>

using namespace wsys;

TEST_CASE("family_basis sizes and duality normalization") {
    CHECK(family_basis(Family::GL, 2).pairs.size() == 3);
    CHECK(family_basis(Family::SO_EVEN, 1).pairs.size() == 1);  // k=2 vanishes at N=1
    for (Family f : kAllFamilies)
        for (int N = 1; N <= 4; ++N) {
            const FamilyBasis b = family_basis(f, N);
            Rational s = 0;
            for (const auto& [x, xi] : b.pairs) {
                CHECK_FALSE(x.is_zero());
                CHECK_FALSE(xi.is_zero());
                s += trace_product(x, xi);
            }
            CHECK(Rational(2) * s == ambient_dimension_poly(f)(BigInt(N)));
            CHECK(Rational(2) * Rational(b.pairs.size()) >=
                  ambient_dimension_poly(f)(BigInt(N)));
        }
}

TEST_CASE("oracle_eval concrete values") {
    CHECK(oracle_eval(parse_oriented(""), Family::SP, 3) == 6);  // bare circle = dim
    CHECK(oracle_eval(parse_oriented("t1 h1"), Family::GL, 3) == Rational(9, 2));
    CHECK(oracle_eval(parse_oriented("t1 h1"), Family::SO_EVEN, 2) == 3);
}

TEST_CASE("oracle_poly single arrow gl is N^2/2") {
    CHECK(oracle_poly(parse_oriented("t1 h1"), Family::GL) ==
          PolynomialQ(std::vector<Rational>{0, 0, Rational(1, 2)}));
}

TEST_CASE("oracle_eval is rotation invariant") {
    OrientedChordDiagram d = parse_oriented("t1 t2 h1 h2");
    for (Family f : kAllFamilies)
        for (int k = 1; k < 2 * d.n; ++k)
            CHECK(oracle_eval(rotate(d, k), f, 3) == oracle_eval(d, f, 3));
}

TEST_CASE("pattern rules match the one-arrow oracle tensor entrywise") {
    for (Family f : kAllFamilies)
        for (int N = 1; N <= 3; ++N) {
            const FamilyBasis b = family_basis(f, N);
            int d = b.dim;
            for (int al = 1; al <= d; ++al)
                for (int be = 1; be <= d; ++be)
                    for (int mu = 1; mu <= d; ++mu)
                        for (int nu = 1; nu <= d; ++nu) {
                            Rational t = 0;
                            for (const auto& [x, xi] : b.pairs)
                                t += xi.at(be, al) * x.at(nu, mu);
                            CHECK(rules_tensor_entry(f, N, al, be, mu, nu) == t);
                        }
        }
}

TEST_CASE("evaluate_weight equals oracle_poly on all diagrams with n <= 2") {
    for (int n = 0; n <= 2; ++n)
        for (const auto& d : enumerate_oriented(n))
            for (Family f : kAllFamilies)
                CHECK(evaluate_weight(d, f) == oracle_poly(d, f));
}

TEST_CASE("structure constants of gl at N = 2") {
    // basis order: x_{11}=e11, x_{12}=e12, x_{22}=e22
    StructureConstants sc = structure_constants(Family::GL, 2);
    CHECK(sc.basis_size == 3);
    CHECK(sc.c_at(0, 1, 1) == 1);       // [e11, e12] = e12
    CHECK(sc.c_at(1, 0, 1) == -1);      // antisymmetry
    CHECK(sc.c_at(1, 2, 1) == 1);       // [e12, e22] = e12
    CHECK(sc.gamma_at(0, 1, 1) == Rational(-1, 2));  // [e11/2, e21] = -e21/2
    for (const auto& [i, j, k, v] : sc.c)
        CHECK(sc.c_at(j, i, k) == -v);
    for (const auto& [i, j, k, v] : sc.gamma)
        CHECK(sc.gamma_at(j, i, k) == -v);
}

TEST_CASE("both spans close under the bracket for every family") {
    for (Family f : kAllFamilies)
        for (int N = 2; N <= 3; ++N)
            CHECK_NOTHROW(structure_constants(f, N));
}

TEST_CASE("reversing the vertex cyclic order negates vertex_eval") {
    VertexDiagram vd{0, VertexType::Bracket,
                     {{VertexToken::Leg, 0}, {VertexToken::Leg, 1}, {VertexToken::Leg, 2}}};
    VertexDiagram rev = vd;
    std::swap(rev.word[0], rev.word[1]);  // swap the two in-legs
    for (Family f : {Family::GL, Family::SO_EVEN})
        CHECK(vertex_eval(vd, f, 2) == -vertex_eval(rev, f, 2));
}

TEST_CASE("ambient basis spans the expected dimension") {
    for (Family f : kAllFamilies)
        for (int N = 1; N <= 3; ++N)
            CHECK(Rational(ambient_basis(f, N).size()) ==
                  ambient_dimension_poly(f)(BigInt(N)));
}
