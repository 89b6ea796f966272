#include "wsys/diagrams.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace wsys;

TEST_CASE("parse renumbers ids by first occurrence") {
    CHECK(format(parse_oriented("t3 h3 t1 h1")) == "t1 h1 t2 h2");
    CHECK(format(parse_unoriented("c9 c2 c9 c2")) == "c1 c2 c1 c2");
}

TEST_CASE("empty string is the oriented bare circle") {
    OrientedChordDiagram d = parse_oriented("");
    CHECK(d.n == 0);
    CHECK(format(d) == "");
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_diagram("t1 c1"), ParseError);     // mixed kinds
    CHECK_THROWS_AS(parse_diagram("x1 h1"), ParseError);     // unknown token
    CHECK_THROWS_AS(parse_diagram("t1 h1 t1"), ParseError);  // reused endpoint
    CHECK_THROWS_AS(parse_diagram("t1 h2"), ParseError);     // unbalanced arrows
    CHECK_THROWS_AS(parse_diagram("c1 c1 c2"), ParseError);  // odd occurrence
    try {
        parse_diagram("t1 h1 q2 h2");
    } catch (const ParseError& e) {
        CHECK(e.token_index == 2);
    }
}

TEST_CASE("canonical form is the least rotation and rotation-invariant") {
    OrientedChordDiagram d = parse_oriented("h1 t2 h2 t1");
    OrientedChordDiagram c = canonicalize(d);
    for (int k = 0; k < 2 * d.n; ++k)
        CHECK(canonicalize(rotate(d, k)) == c);
    // the canonical word is minimal over renumbered rotations in endpoint
    // order (tails sort before heads)
    for (int k = 0; k < 2 * d.n; ++k) {
        OrientedChordDiagram r = parse_oriented(format(rotate(d, k)));
        CHECK(c.word <= r.word);
    }
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_oriented(0).size() == 1);
    CHECK(enumerate_oriented(1).size() == 1);
    CHECK(enumerate_oriented(2).size() == 4);
    CHECK(enumerate_oriented(3).size() == 22);
    CHECK(enumerate_unoriented(1).size() == 1);
    CHECK(enumerate_unoriented(2).size() == 2);
    CHECK(enumerate_unoriented(3).size() == 5);
}

TEST_CASE("enumerated diagrams are canonical and distinct") {
    std::set<std::string> seen;
    for (const auto& d : enumerate_oriented(3)) {
        CHECK(d == canonicalize(d));
        CHECK(seen.insert(format(d)).second);
    }
}

TEST_CASE("unorient forgets directions") {
    CHECK(unorient(parse_oriented("t1 t2 h1 h2")) == parse_unoriented("c1 c2 c1 c2"));
    CHECK(unorient(parse_oriented("t1 h2 t2 h1")) == parse_unoriented("c1 c2 c2 c1"));
}

TEST_CASE("resolve_arcs on the single arrow") {
    auto arcs = resolve_arcs(parse_oriented("t1 h1"));
    REQUIRE(arcs.size() == 1);
    CHECK(arcs[0].alpha == 1);  // arc entering the tail
    CHECK(arcs[0].beta == 0);   // arc leaving the tail
    CHECK(arcs[0].mu == 0);     // arc entering the head
    CHECK(arcs[0].nu == 1);     // arc leaving the head
}

TEST_CASE("parse/format round trip on random words") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        std::vector<Endpoint> word;
        for (int id = 1; id <= n; ++id) {
            word.push_back({Role::Tail, id});
            word.push_back({Role::Head, id});
        }
        std::shuffle(word.begin(), word.end(), rng);
        // parse renumbers ids by first occurrence, after which the format
        // representation is a fixpoint
        std::string s = format(parse_oriented(format(OrientedChordDiagram{n, word})));
        CHECK(format(parse_oriented(s)) == s);
    }
}

TEST_CASE("vertex diagram validation") {
    // bracket: legs 0,1 run into the vertex, leg 2 runs out
    VertexDiagram ok{1, VertexType::Bracket,
                     {{VertexToken::Leg, 0},
                      {VertexToken::Leg, 1},
                      {VertexToken::Leg, 2},
                      {VertexToken::ArrowTail, 1},
                      {VertexToken::ArrowHead, 1}}};
    CHECK_NOTHROW(validate(ok));
    VertexDiagram dup = ok;
    dup.word[1] = {VertexToken::Leg, 0};
    CHECK_THROWS_AS(validate(dup), std::invalid_argument);
}
