#pragma once

#include "wsys/diagrams.hpp"
#include "wsys/families.hpp"
#include "wsys/matrix.hpp"
#include "wsys/polynomial.hpp"

#include <tuple>
#include <vector>

namespace wsys {

/// The explicit matrix bases at a concrete N: ordered pairs (x_a, xi^a) of
/// d x d sparse rational matrices, k-major then i then j, with identically
/// zero elements dropped.
struct FamilyBasis {
    Family family;
    int N = 0;
    int dim = 0;  // rep dimension d
    std::vector<std::pair<SparseMatrixQ, SparseMatrixQ>> pairs;
};

FamilyBasis family_basis(Family f, int N);

/// Brute-force trace evaluation: sum over basis assignments per arrow of the
/// trace of the circle-ordered product with xi^a at tails and x_a at heads.
/// Requires n <= 5.
Rational oracle_eval(const OrientedChordDiagram& d, Family f, int N);

/// Interpolates oracle_eval at N = 1..n+2 with degree bound n+1 and verifies
/// the result at N = n+3. Requires n <= 4.
PolynomialQ oracle_poly(const OrientedChordDiagram& d, Family f);

/// Structure constants read off matrix commutators:
///   [x_i, x_j] = sum_k c(i,j,k) x_k      [xi^i, xi^j] = sum_k gamma(i,j,k) xi^k
/// Entries are stored sparsely as (i, j, k, value), 0-based basis indices.
struct StructureConstants {
    Family family;
    int N = 0;
    int basis_size = 0;
    std::vector<std::tuple<int, int, int, Rational>> c;
    std::vector<std::tuple<int, int, int, Rational>> gamma;

    Rational c_at(int i, int j, int k) const;
    Rational gamma_at(int i, int j, int k) const;
};

/// Requires N >= 2; throws std::runtime_error when a commutator leaves the
/// span (a bad basis).
StructureConstants structure_constants(Family f, int N);

/// Contraction value of a diagram with one internal trivalent vertex: the
/// vertex contributes c^k_{ij} or gamma^{jk}_i with legs read in the stored
/// slot order, skeleton endpoints contribute the basis matrices.
Rational vertex_eval(const VertexDiagram& vd, Family f, int N);

/// Basis of the full ambient classical algebra (split form) at concrete N;
/// raw material for the unoriented Casimir weight system.
std::vector<SparseMatrixQ> ambient_basis(Family f, int N);

}  // namespace wsys
