#pragma once

#include "wsys/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace wsys {

/// Sparse square matrix with exact rational entries, 1-based indices.
class SparseMatrixQ {
public:
    SparseMatrixQ() = default;
    explicit SparseMatrixQ(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    bool is_zero() const { return a_.empty(); }

    void add(int row, int col, const Rational& v);
    Rational at(int row, int col) const;
    const std::map<std::pair<int, int>, Rational>& entries() const { return a_; }

    /// Entries of one column as (row, value) pairs.
    std::vector<std::pair<int, Rational>> column(int col) const;

    SparseMatrixQ operator+(const SparseMatrixQ& o) const;
    SparseMatrixQ operator-(const SparseMatrixQ& o) const;
    SparseMatrixQ operator*(const SparseMatrixQ& o) const;
    SparseMatrixQ operator*(const Rational& s) const;
    bool operator==(const SparseMatrixQ& o) const { return dim_ == o.dim_ && a_ == o.a_; }

    Rational trace() const;

    static SparseMatrixQ elementary(int dim, int row, int col);  // e_{row,col}
    static SparseMatrixQ commutator(const SparseMatrixQ& x, const SparseMatrixQ& y);

private:
    int dim_ = 0;
    std::map<std::pair<int, int>, Rational> a_;  // (row, col) -> nonzero value
};

inline Rational trace_product(const SparseMatrixQ& x, const SparseMatrixQ& y) {
    return (x * y).trace();
}

/// Exact coefficients with target = sum c_i * basis_i, or nullopt when the
/// target lies outside the span or the expansion is not unique.
std::optional<std::vector<Rational>> expand_in_basis(const SparseMatrixQ& target,
                                                     const std::vector<SparseMatrixQ>& basis);

/// Solves A x = b over the rationals (A given in row-major dense form).
/// Returns nullopt for singular or inconsistent systems.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b);

}  // namespace wsys
