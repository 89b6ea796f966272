#include "wsys/oracle.hpp"

#include <map>
#include <stdexcept>

namespace wsys {

namespace {

using Mat = SparseMatrixQ;

Mat elem(int d, int r, int c) {
    return Mat::elementary(d, r, c);
}

}  // namespace

FamilyBasis family_basis(Family f, int N) {
    if (N < 1)
        throw std::invalid_argument("family_basis: N must be >= 1");
    int d = rep_dimension(f, N);
    FamilyBasis b{f, N, d, {}};
    Rational half(1, 2);
    auto xi_scale = [&](int i, int j) { return i == j ? Rational(1, 4) : half; };
    switch (f) {
        case Family::GL:
            for (int i = 1; i <= N; ++i)
                for (int j = i; j <= N; ++j)
                    b.pairs.push_back(
                        {elem(d, i, j), elem(d, j, i) * (i == j ? half : Rational(1))});
            break;
        case Family::SO_EVEN:
            for (int i = 1; i <= N; ++i)
                for (int j = i; j <= N; ++j)
                    b.pairs.push_back({elem(d, i, j) - elem(d, j + N, i + N),
                                       (elem(d, j, i) - elem(d, i + N, j + N)) * xi_scale(i, j)});
            for (int i = 1; i <= N; ++i)
                for (int j = i + 1; j <= N; ++j)  // i = j vanishes identically
                    b.pairs.push_back({elem(d, i, j + N) - elem(d, j, i + N),
                                       (elem(d, j + N, i) - elem(d, i + N, j)) * half});
            break;
        case Family::SP:
            for (int i = 1; i <= N; ++i)
                for (int j = i; j <= N; ++j)
                    b.pairs.push_back({elem(d, i, j) - elem(d, j + N, i + N),
                                       (elem(d, j, i) - elem(d, i + N, j + N)) * xi_scale(i, j)});
            for (int i = 1; i <= N; ++i)
                for (int j = i; j <= N; ++j)
                    b.pairs.push_back({elem(d, i, j + N) + elem(d, j, i + N),
                                       (elem(d, j + N, i) + elem(d, i + N, j)) * xi_scale(i, j)});
            break;
        case Family::SO_ODD:
            // k = 0 row, one free index. x carries e_{i+1,1} - e_{1,i+N+1}:
            // with this assignment both the x span and the xi span are closed
            // under the bracket and 6T holds; the transposed choice fails both.
            for (int i = 1; i <= N; ++i)
                b.pairs.push_back({elem(d, i + 1, 1) - elem(d, 1, i + N + 1),
                                   (elem(d, 1, i + 1) - elem(d, i + N + 1, 1)) * half});
            for (int i = 1; i <= N; ++i)
                for (int j = i; j <= N; ++j)
                    b.pairs.push_back(
                        {elem(d, i + 1, j + 1) - elem(d, j + N + 1, i + N + 1),
                         (elem(d, j + 1, i + 1) - elem(d, i + N + 1, j + N + 1)) * xi_scale(i, j)});
            for (int i = 1; i <= N; ++i)
                for (int j = i + 1; j <= N; ++j)
                    b.pairs.push_back({elem(d, i + 1, j + N + 1) - elem(d, j + 1, i + N + 1),
                                       (elem(d, j + N + 1, i + 1) - elem(d, i + N + 1, j + 1)) *
                                           half});
            break;
    }
    return b;
}

namespace {

// Column-indexed view of a matrix list: per column, the (basis, row, value)
// triples. Drives the circle sweep.
struct ColumnIndex {
    // cols[c] -> list of (basis index, row, value)
    std::vector<std::vector<std::tuple<int, int, Rational>>> cols;
    explicit ColumnIndex(int d) : cols(d + 1) {}
    void insert(const Mat& m, int basis_idx) {
        for (const auto& [rc, v] : m.entries())
            cols[rc.second].push_back({basis_idx, rc.first, v});
    }
};

}  // namespace

Rational oracle_eval(const OrientedChordDiagram& d, Family f, int N) {
    if (d.n > 5)
        throw std::invalid_argument("oracle_eval: more than 5 arrows");
    FamilyBasis basis = family_basis(f, N);
    int dim = basis.dim;
    if (d.n == 0)
        return dim;

    ColumnIndex tail_cols(dim), head_cols(dim);
    for (size_t a = 0; a < basis.pairs.size(); ++a) {
        tail_cols.insert(basis.pairs[a].second, static_cast<int>(a));  // xi^a at tails
        head_cols.insert(basis.pairs[a].first, static_cast<int>(a));   // x_a at heads
    }

    // Sweep the circle once, keeping the basis index of every open arrow.
    // Key: [start index, current index, open basis indices in arrow order].
    std::vector<bool> opened(d.n + 1, false);
    std::map<std::vector<int>, Rational> state;
    for (int s0 = 1; s0 <= dim; ++s0)
        state[{s0, s0}] = 1;

    std::vector<int> open_slot(d.n + 1, -1);  // arrow id -> key slot while open
    for (int p = 0; p < 2 * d.n; ++p) {
        const Endpoint& e = d.word[p];
        bool closing = opened[e.id];
        const ColumnIndex& cols = e.role == Role::Tail ? tail_cols : head_cols;
        std::map<std::vector<int>, Rational> next;
        if (!closing) {
            int slot = 2;
            for (int r = 1; r <= d.n; ++r)
                if (open_slot[r] >= 0)
                    ++slot;
            // append new open arrow at the end; record slot later
            for (const auto& [key, coeff] : state) {
                int cur = key[1];
                for (const auto& [a, row, val] : cols.cols[cur]) {
                    std::vector<int> nk = key;
                    nk[1] = row;
                    nk.push_back(a);
                    next[nk] += coeff * val;
                }
            }
            open_slot[e.id] = slot;
            opened[e.id] = true;
        } else {
            int slot = open_slot[e.id];
            // cache the needed matrix entries per basis index
            const auto& mats = basis.pairs;
            for (const auto& [key, coeff] : state) {
                int cur = key[1];
                int a = key[slot];
                const Mat& m = e.role == Role::Tail ? mats[a].second : mats[a].first;
                for (const auto& [row, val] : m.column(cur)) {
                    std::vector<int> nk;
                    nk.reserve(key.size() - 1);
                    for (size_t i = 0; i < key.size(); ++i)
                        if (static_cast<int>(i) != slot)
                            nk.push_back(key[i]);
                    nk[1] = row;
                    next[nk] += coeff * val;
                }
            }
            // shift slots of arrows opened after this one
            for (int r = 1; r <= d.n; ++r)
                if (open_slot[r] > slot)
                    --open_slot[r];
            open_slot[e.id] = -1;
        }
        state = std::move(next);
    }
    Rational total = 0;
    for (const auto& [key, coeff] : state)
        if (key[0] == key[1])
            total += coeff;
    return total;
}

PolynomialQ oracle_poly(const OrientedChordDiagram& d, Family f) {
    if (d.n > 4)
        throw std::invalid_argument("oracle_poly: more than 4 arrows");
    std::vector<std::pair<BigInt, Rational>> pts;
    for (int N = 1; N <= d.n + 3; ++N)
        pts.push_back({BigInt(N), oracle_eval(d, f, N)});
    try {
        return PolynomialQ::interpolate(pts, static_cast<unsigned>(d.n + 1));
    } catch (const std::invalid_argument&) {
        throw std::runtime_error("oracle_poly: degree bound n+1 violated for '" + format(d) +
                                 "' (" + family_tag(f) + ")");
    }
}

Rational StructureConstants::c_at(int i, int j, int k) const {
    for (const auto& [a, b, d, v] : c)
        if (a == i && b == j && d == k)
            return v;
    return 0;
}

Rational StructureConstants::gamma_at(int i, int j, int k) const {
    for (const auto& [a, b, d, v] : gamma)
        if (a == i && b == j && d == k)
            return v;
    return 0;
}

StructureConstants structure_constants(Family f, int N) {
    if (N < 2)
        throw std::invalid_argument("structure_constants: N must be >= 2");
    FamilyBasis basis = family_basis(f, N);
    int nb = static_cast<int>(basis.pairs.size());
    StructureConstants sc{f, N, nb, {}, {}};
    std::vector<Mat> xs, xis;
    for (const auto& [x, xi] : basis.pairs) {
        xs.push_back(x);
        xis.push_back(xi);
    }
    auto fill = [&](const std::vector<Mat>& span,
                    std::vector<std::tuple<int, int, int, Rational>>& out, const char* what) {
        for (int i = 0; i < nb; ++i)
            for (int j = i + 1; j < nb; ++j) {
                Mat comm = Mat::commutator(span[i], span[j]);
                auto coeffs = expand_in_basis(comm, span);
                if (!coeffs)
                    throw std::runtime_error(std::string("structure_constants: the ") + what +
                                             " span is not closed under the bracket");
                for (int k = 0; k < nb; ++k)
                    if ((*coeffs)[k] != 0) {
                        out.push_back({i, j, k, (*coeffs)[k]});
                        out.push_back({j, i, k, -(*coeffs)[k]});
                    }
            }
    };
    fill(xs, sc.c, "x");
    fill(xis, sc.gamma, "xi");
    return sc;
}

namespace {

// Trace of the circle-ordered insertion: endpoints act in circle order on a
// vector transported along the skeleton, i.e. tr(M_{2n-1} ... M_1 M_0).
Rational trace_in_circle_order(const std::vector<Mat>& mats, int dim) {
    Mat prod(dim);
    for (int i = 1; i <= dim; ++i)
        prod.add(i, i, 1);
    for (const Mat& m : mats)
        prod = m * prod;
    return prod.trace();
}

}  // namespace

Rational vertex_eval(const VertexDiagram& vd, Family f, int N) {
    if (N < 2)
        throw std::invalid_argument("vertex_eval: N must be >= 2");
    validate(vd);
    FamilyBasis basis = family_basis(f, N);
    StructureConstants sc = structure_constants(f, N);
    int dim = basis.dim;
    int nb = static_cast<int>(basis.pairs.size());

    const auto& entries = vd.vtype == VertexType::Bracket ? sc.c : sc.gamma;
    Rational total = 0;
    std::vector<int> assign(vd.n_arrows, 0);  // basis index per plain arrow
    while (true) {
        for (const auto& [t0, t1, t2, coeff] : entries) {
            // Bracket c^k_{ij} stored as (i, j, k): legs xi^i, xi^j, x_k.
            // Cobracket gamma^{jk}_i stored as (j, k, i): legs xi^i, x_j, x_k.
            const Mat& xi_i = vd.vtype == VertexType::Bracket ? basis.pairs[t0].second
                                                              : basis.pairs[t2].second;
            const Mat& m1 = vd.vtype == VertexType::Bracket ? basis.pairs[t1].second
                                                            : basis.pairs[t0].first;
            const Mat& m2 = vd.vtype == VertexType::Bracket ? basis.pairs[t2].first
                                                            : basis.pairs[t1].first;
            std::vector<Mat> word_mats;
            for (const auto& tok : vd.word) {
                if (tok.kind == VertexToken::Leg) {
                    word_mats.push_back(tok.id == 0 ? xi_i : (tok.id == 1 ? m1 : m2));
                } else if (tok.kind == VertexToken::ArrowTail) {
                    word_mats.push_back(basis.pairs[assign[tok.id - 1]].second);
                } else {
                    word_mats.push_back(basis.pairs[assign[tok.id - 1]].first);
                }
            }
            total += coeff * trace_in_circle_order(word_mats, dim);
        }
        int i = 0;
        while (i < vd.n_arrows && ++assign[i] == nb) {
            assign[i] = 0;
            ++i;
        }
        if (i == vd.n_arrows || vd.n_arrows == 0)
            break;
    }
    return total;
}

std::vector<SparseMatrixQ> ambient_basis(Family f, int N) {
    if (N < 1)
        throw std::invalid_argument("ambient_basis: N must be >= 1");
    int d = rep_dimension(f, N);
    std::vector<Mat> out;
    switch (f) {
        case Family::GL:
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j)
                    out.push_back(elem(d, i, j));
            break;
        case Family::SO_EVEN:
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j)
                    out.push_back(elem(d, i, j) - elem(d, j + N, i + N));
            for (int i = 1; i <= N; ++i)
                for (int j = i + 1; j <= N; ++j) {
                    out.push_back(elem(d, i, j + N) - elem(d, j, i + N));
                    out.push_back(elem(d, i + N, j) - elem(d, j + N, i));
                }
            break;
        case Family::SP:
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j)
                    out.push_back(elem(d, i, j) - elem(d, j + N, i + N));
            for (int i = 1; i <= N; ++i)
                for (int j = i; j <= N; ++j) {
                    out.push_back(elem(d, i, j + N) + elem(d, j, i + N));
                    out.push_back(elem(d, i + N, j) + elem(d, j + N, i));
                }
            break;
        case Family::SO_ODD:
            for (int i = 1; i <= N; ++i) {
                out.push_back(elem(d, 1, i + 1) - elem(d, i + N + 1, 1));
                out.push_back(elem(d, i + 1, 1) - elem(d, 1, i + N + 1));
            }
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j)
                    out.push_back(elem(d, i + 1, j + 1) - elem(d, j + N + 1, i + N + 1));
            for (int i = 1; i <= N; ++i)
                for (int j = i + 1; j <= N; ++j) {
                    out.push_back(elem(d, i + 1, j + N + 1) - elem(d, j + 1, i + N + 1));
                    out.push_back(elem(d, i + N + 1, j + 1) - elem(d, j + N + 1, i + 1));
                }
            break;
    }
    return out;
}

}  // namespace wsys
