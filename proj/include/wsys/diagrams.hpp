#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wsys {

enum class Role { Tail, Head };

struct Endpoint {
    Role role;
    int id;  // arrow id, 1..n
    bool operator==(const Endpoint&) const = default;
    auto operator<=>(const Endpoint&) const = default;  // Tail < Head, then id
};

/// n arrows with 2n endpoints on a counterclockwise-oriented circle.
struct OrientedChordDiagram {
    int n = 0;
    std::vector<Endpoint> word;  // circle order, length 2n
    bool operator==(const OrientedChordDiagram&) const = default;
};

/// Unoriented chord diagram: each chord id appears exactly twice.
struct ChordDiagram {
    int n = 0;
    std::vector<int> word;  // circle order, length 2n
    bool operator==(const ChordDiagram&) const = default;
};

/// Arc indices around one arrow: alpha = tail-incoming, beta = tail-outgoing,
/// mu = head-incoming, nu = head-outgoing. Arc k runs from endpoint k to
/// endpoint k+1 mod 2n.
struct ArrowArcs {
    int alpha, beta, mu, nu;
};

struct ParseError : std::runtime_error {
    int token_index;  // 0-based index of the offending token
    ParseError(const std::string& what, int idx) : std::runtime_error(what), token_index(idx) {}
};

using AnyDiagram = std::variant<OrientedChordDiagram, ChordDiagram>;

/// Parses the space-separated token format: 't<k>'/'h<k>' for oriented words,
/// 'c<k>' for unoriented ones (kinds cannot be mixed). Ids are renumbered
/// 1..n by first occurrence. The empty string is the bare circle (oriented).
AnyDiagram parse_diagram(const std::string& text);
OrientedChordDiagram parse_oriented(const std::string& text);
ChordDiagram parse_unoriented(const std::string& text);

std::string format(const OrientedChordDiagram& d);
std::string format(const ChordDiagram& d);

OrientedChordDiagram rotate(const OrientedChordDiagram& d, int k);
ChordDiagram rotate(const ChordDiagram& d, int k);

/// Lexicographically least rotation after renumbering by first occurrence.
OrientedChordDiagram canonicalize(const OrientedChordDiagram& d);
ChordDiagram canonicalize(const ChordDiagram& d);

/// All canonical diagrams with exactly n chords/arrows, deduplicated and
/// sorted. Requires 0 <= n <= 6.
std::vector<OrientedChordDiagram> enumerate_oriented(int n);
std::vector<ChordDiagram> enumerate_unoriented(int n);

/// Per-arrow incident arc indices; requires n >= 1.
std::vector<ArrowArcs> resolve_arcs(const OrientedChordDiagram& d);

/// Forgets orientations.
ChordDiagram unorient(const OrientedChordDiagram& d);

// --- diagrams with one internal trivalent vertex (STU checks) ---

enum class VertexType {
    Bracket,    // two in-legs (slots 0,1), one out-leg (slot 2)
    Cobracket,  // one in-leg (slot 0), two out-legs (slots 1,2)
};

struct VertexToken {
    enum Kind { ArrowTail, ArrowHead, Leg } kind;
    int id;  // arrow id, or leg slot 0..2
    bool operator==(const VertexToken&) const = default;
};

/// An oriented chord diagram extended with exactly one internal trivalent
/// vertex. Leg slots are listed in the vertex's cyclic order; in-legs run
/// from the skeleton into the vertex, out-legs from the vertex to the
/// skeleton (so there is never a sink or a source).
struct VertexDiagram {
    int n_arrows = 0;
    VertexType vtype;
    std::vector<VertexToken> word;  // circle order
};

/// Throws std::invalid_argument when leg slots or arrow endpoints are
/// missing, duplicated, or inconsistent with the vertex type.
void validate(const VertexDiagram& vd);

/// Swaps the two same-direction leg slots (vertex orientation reversal).
VertexDiagram reverse_vertex(const VertexDiagram& vd);

}  // namespace wsys
