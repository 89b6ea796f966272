#pragma once

#include "wsys/diagrams.hpp"
#include "wsys/families.hpp"
#include "wsys/matrix.hpp"
#include "wsys/oracle.hpp"
#include "wsys/polynomial.hpp"

#include <string>
#include <vector>

namespace wsys {

/// A formal rational combination of diagrams that every weight system must
/// annihilate. Terms are all oriented or all unoriented.
struct RelationInstance {
    std::string name;
    std::vector<std::pair<Rational, OrientedChordDiagram>> oriented_terms;
    std::vector<std::pair<Rational, ChordDiagram>> unoriented_terms;
    std::string provenance;
};

/// All 2^n ways to direct the chords of c, canonicalized, deterministic
/// order (duplicates kept: the averaging map is a sum, not a set).
std::vector<OrientedChordDiagram> average(const ChordDiagram& c);

/// Unoriented weight system of the full ambient classical algebra with
/// metric tr(AB): each chord carries the Gram-inverse Casimir tensor.
/// basis_override substitutes any other basis of the same algebra (used to
/// test basis independence).
Rational casimir_eval(const ChordDiagram& c, Family f, int N,
                      const std::vector<SparseMatrixQ>* basis_override = nullptr);

/// Six-term instances from three disjoint marked arcs (and each placement
/// of one spectator arrow when spectators = 1).
std::vector<RelationInstance> six_t_instances(int spectators);

/// Four-term unoriented instances.
std::vector<RelationInstance> four_t_instances();

/// A one-vertex diagram paired with the signed two-arrow difference it must
/// equal: vertex_eval(vd) == oracle_eval(first) - oracle_eval(second).
struct StuInstance {
    VertexDiagram vd;
    OrientedChordDiagram first, second;
    std::string provenance;
};

/// Bracket-type and cobracket-type configurations.
std::vector<StuInstance> stu_instances();

struct CheckEntry {
    std::string check;
    std::string family;
    std::string n;  // decimal N or "poly"
    bool pass = false;
    std::string residual;
};

/// AS, Jacobi, coJacobi and the cocycle condition on the structure
/// constants. Failures are report entries, not errors.
std::vector<CheckEntry> check_bialgebra_identities(Family f, int N);
std::vector<CheckEntry> check_bialgebra_identities(const StructureConstants& sc);

/// Polynomial mode: oriented terms under evaluate_weight; pass iff the sum
/// is the zero polynomial.
CheckEntry check_relation(const RelationInstance& r, Family f);
/// Numeric mode at concrete N: oriented terms under oracle_eval, unoriented
/// terms under casimir_eval.
CheckEntry check_relation(const RelationInstance& r, Family f, int N);

}  // namespace wsys
