#include "wsys/matrix.hpp"

#include <set>

namespace wsys {

void SparseMatrixQ::add(int row, int col, const Rational& v) {
    if (v == 0)
        return;
    auto key = std::make_pair(row, col);
    auto it = a_.find(key);
    if (it == a_.end()) {
        a_.emplace(key, v);
    } else {
        it->second += v;
        if (it->second == 0)
            a_.erase(it);
    }
}

Rational SparseMatrixQ::at(int row, int col) const {
    auto it = a_.find({row, col});
    return it == a_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<int, Rational>> SparseMatrixQ::column(int col) const {
    std::vector<std::pair<int, Rational>> out;
    for (const auto& [rc, v] : a_)
        if (rc.second == col)
            out.push_back({rc.first, v});
    return out;
}

SparseMatrixQ SparseMatrixQ::operator+(const SparseMatrixQ& o) const {
    SparseMatrixQ r = *this;
    for (const auto& [rc, v] : o.a_)
        r.add(rc.first, rc.second, v);
    return r;
}

SparseMatrixQ SparseMatrixQ::operator-(const SparseMatrixQ& o) const {
    SparseMatrixQ r = *this;
    for (const auto& [rc, v] : o.a_)
        r.add(rc.first, rc.second, -v);
    return r;
}

SparseMatrixQ SparseMatrixQ::operator*(const SparseMatrixQ& o) const {
    SparseMatrixQ r(dim_);
    for (const auto& [rc1, v1] : a_)
        for (const auto& [rc2, v2] : o.a_)
            if (rc1.second == rc2.first)
                r.add(rc1.first, rc2.second, v1 * v2);
    return r;
}

SparseMatrixQ SparseMatrixQ::operator*(const Rational& s) const {
    SparseMatrixQ r(dim_);
    if (s == 0)
        return r;
    for (const auto& [rc, v] : a_)
        r.add(rc.first, rc.second, v * s);
    return r;
}

Rational SparseMatrixQ::trace() const {
    Rational t = 0;
    for (const auto& [rc, v] : a_)
        if (rc.first == rc.second)
            t += v;
    return t;
}

SparseMatrixQ SparseMatrixQ::elementary(int dim, int row, int col) {
    SparseMatrixQ m(dim);
    m.add(row, col, 1);
    return m;
}

SparseMatrixQ SparseMatrixQ::commutator(const SparseMatrixQ& x, const SparseMatrixQ& y) {
    return x * y - y * x;
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        Rational inv = 1 / a[r][c];
        for (size_t j = c; j < cols; ++j)
            a[r][j] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() != cols)
        return std::nullopt;  // not full column rank: no unique solution
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0)
            return std::nullopt;  // inconsistent
    std::vector<Rational> x(cols, Rational(0));
    for (size_t i = 0; i < pivot_col.size(); ++i)
        x[pivot_col[i]] = b[i];
    return x;
}

std::optional<std::vector<Rational>> expand_in_basis(const SparseMatrixQ& target,
                                                     const std::vector<SparseMatrixQ>& basis) {
    std::set<std::pair<int, int>> positions;
    for (const auto& [rc, v] : target.entries())
        positions.insert(rc);
    for (const auto& m : basis)
        for (const auto& [rc, v] : m.entries())
            positions.insert(rc);
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (const auto& pos : positions) {
        std::vector<Rational> row;
        row.reserve(basis.size());
        for (const auto& m : basis)
            row.push_back(m.at(pos.first, pos.second));
        a.push_back(std::move(row));
        b.push_back(target.at(pos.first, pos.second));
    }
    if (positions.empty())
        return std::vector<Rational>(basis.size(), Rational(0));
    return solve_linear(std::move(a), std::move(b));
}

}  // namespace wsys
