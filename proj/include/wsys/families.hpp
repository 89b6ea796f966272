#pragma once

#include "wsys/diagrams.hpp"
#include "wsys/polynomial.hpp"

#include <array>
#include <string>
#include <vector>

namespace wsys {

enum class Family { GL, SO_EVEN, SO_ODD, SP };

inline constexpr std::array<Family, 4> kAllFamilies{Family::GL, Family::SO_EVEN, Family::SO_ODD,
                                                    Family::SP};

std::string family_tag(Family f);            // "gl", "so-even", "so-odd", "sp"
Family family_from_tag(const std::string&);  // throws std::invalid_argument

/// Dimension of the defining representation: N, 2N, 2N+1, 2N.
int rep_dimension(Family f, int N);
PolynomialQ rep_dimension_poly(Family f);

/// Dimension of the ambient classical algebra: N^2, 2N^2-N, 2N^2+N, 2N^2+N.
PolynomialQ ambient_dimension_poly(Family f);

/// Index-block membership of a skeleton arc label. A and B carry a free
/// value v in 1..N (concrete index v resp. v+N, shifted by one for
/// so(2N+1)); U is the fixed index 1 of so(2N+1).
enum class Sector { A, B, U };

enum class OrderKind { None, Less, Greater, LeqHalf, GeqHalf };

/// One case of a family's one-arrow tensor: sector requirements for the
/// four arc slots (alpha, beta, mu, nu), a pairing of the slots into two
/// value classes, an order constraint between the class values, a sign and
/// a scalar. "Half" order kinds weigh the equality case by 1/2.
struct PatternRule {
    std::array<Sector, 4> sector;  // indexed alpha=0, beta=1, mu=2, nu=3
    std::array<int, 4> cls;        // class 0 or 1 per slot; each class has 2 slots
    OrderKind order;               // class 0 OP class 1
    int sign;                      // +1 or -1
    Rational scalar;
};

/// The fixed rule table: 1 rule for gl, 8 for so(2N) and sp, 12 for so(2N+1).
const std::vector<PatternRule>& pattern_rules(Family f);

/// Concrete matrix index of an arc with sector s and free value v in 1..N
/// (v ignored for U).
int sector_index(Family f, int N, Sector s, int v);

/// The weight-system value of d under family f as an exact polynomial in N.
/// Requires n <= 6. Degree <= n+1.
PolynomialQ evaluate_weight(const OrientedChordDiagram& d, Family f);

/// Single-arrow tensor entry T_{alpha mu}^{beta nu} computed from the
/// pattern rules at concrete indices in 1..rep_dimension(f,N); pinned
/// against the matrix-basis oracle by tests.
Rational rules_tensor_entry(Family f, int N, int alpha, int beta, int mu, int nu);

}  // namespace wsys
