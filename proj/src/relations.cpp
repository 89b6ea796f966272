#include "wsys/relations.hpp"

#include <map>
#include <stdexcept>

namespace wsys {

std::vector<OrientedChordDiagram> average(const ChordDiagram& c) {
    if (c.n > 5)
        throw std::invalid_argument("average: more than 5 chords");
    // Position pair of each chord, first occurrence first.
    std::vector<std::pair<int, int>> pos(c.n, {-1, -1});
    for (int p = 0; p < 2 * c.n; ++p) {
        auto& pr = pos[c.word[p] - 1];
        (pr.first < 0 ? pr.first : pr.second) = p;
    }
    std::vector<OrientedChordDiagram> out;
    for (int dirs = 0; dirs < (1 << c.n); ++dirs) {
        OrientedChordDiagram d;
        d.n = c.n;
        d.word.resize(2 * c.n);
        for (int ch = 0; ch < c.n; ++ch) {
            bool flip = (dirs >> ch) & 1;
            d.word[pos[ch].first] = {flip ? Role::Head : Role::Tail, ch + 1};
            d.word[pos[ch].second] = {flip ? Role::Tail : Role::Head, ch + 1};
        }
        out.push_back(canonicalize(d));
    }
    return out;
}

Rational casimir_eval(const ChordDiagram& c, Family f, int N,
                      const std::vector<SparseMatrixQ>* basis_override) {
    if (N < 1)
        throw std::invalid_argument("casimir_eval: N must be >= 1");
    if (c.n > 4)
        throw std::invalid_argument("casimir_eval: more than 4 chords");
    std::vector<SparseMatrixQ> basis = basis_override ? *basis_override : ambient_basis(f, N);
    int dim = rep_dimension(f, N);
    int nb = static_cast<int>(basis.size());
    if (c.n == 0)
        return dim;

    // Gram matrix G_ab = tr(x_a x_b) and its inverse.
    std::vector<std::vector<Rational>> g(nb, std::vector<Rational>(nb));
    for (int a = 0; a < nb; ++a)
        for (int b = a; b < nb; ++b)
            g[a][b] = g[b][a] = trace_product(basis[a], basis[b]);
    std::vector<std::vector<Rational>> ginv(nb, std::vector<Rational>(nb));
    for (int col = 0; col < nb; ++col) {
        std::vector<Rational> e(nb, Rational(0));
        e[col] = 1;
        auto x = solve_linear(g, e);
        if (!x)
            throw std::runtime_error("casimir_eval: singular Gram matrix (bad basis)");
        for (int rr = 0; rr < nb; ++rr)
            ginv[rr][col] = (*x)[rr];
    }
    // Closing matrices K_a = sum_b (G^-1)_{ab} x_b.
    std::vector<SparseMatrixQ> close(nb, SparseMatrixQ(dim));
    for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b)
            if (ginv[a][b] != 0)
                close[a] = close[a] + basis[b] * ginv[a][b];

    // Circle sweep with the basis index of every open chord in the key.
    std::map<std::vector<int>, Rational> state;
    for (int s0 = 1; s0 <= dim; ++s0)
        state[{s0, s0}] = 1;
    std::vector<bool> opened(c.n + 1, false);
    std::vector<int> open_slot(c.n + 1, -1);
    std::vector<std::vector<std::tuple<int, int, Rational>>> open_cols(dim + 1);
    for (int a = 0; a < nb; ++a)
        for (const auto& [rc, v] : basis[a].entries())
            open_cols[rc.second].push_back({a, rc.first, v});

    for (int p = 0; p < 2 * c.n; ++p) {
        int id = c.word[p];
        std::map<std::vector<int>, Rational> next;
        if (!opened[id]) {
            int slot = 2;
            for (int r = 1; r <= c.n; ++r)
                if (open_slot[r] >= 0)
                    ++slot;
            for (const auto& [key, coeff] : state)
                for (const auto& [a, row, val] : open_cols[key[1]]) {
                    std::vector<int> nk = key;
                    nk[1] = row;
                    nk.push_back(a);
                    next[nk] += coeff * val;
                }
            open_slot[id] = slot;
            opened[id] = true;
        } else {
            int slot = open_slot[id];
            for (const auto& [key, coeff] : state) {
                int a = key[slot];
                for (const auto& [row, val] : close[a].column(key[1])) {
                    std::vector<int> nk;
                    nk.reserve(key.size() - 1);
                    for (size_t i = 0; i < key.size(); ++i)
                        if (static_cast<int>(i) != slot)
                            nk.push_back(key[i]);
                    nk[1] = row;
                    next[nk] += coeff * val;
                }
            }
            for (int r = 1; r <= c.n; ++r)
                if (open_slot[r] > slot)
                    --open_slot[r];
            open_slot[id] = -1;
        }
        state = std::move(next);
    }
    Rational total = 0;
    for (const auto& [key, coeff] : state)
        if (key[0] == key[1])
            total += coeff;
    return total;
}

namespace {

// Places the endpoints of two arrows into three marked arcs; within a
// shared arc, X's endpoints come before Y's.
struct ArrowSpec {
    int tail_interval, head_interval;
};

OrientedChordDiagram ordered_term(const ArrowSpec& x, const ArrowSpec& y,
                                  const std::vector<std::pair<int, int>>& spectator) {
    // spectator: (gap index after interval g, role) entries, in order
    std::vector<std::vector<Endpoint>> interval(3), gap(3);
    interval[x.tail_interval].push_back({Role::Tail, 1});
    interval[x.head_interval].push_back({Role::Head, 1});
    interval[y.tail_interval].push_back({Role::Tail, 2});
    interval[y.head_interval].push_back({Role::Head, 2});
    for (const auto& [g, role] : spectator)
        gap[g].push_back({role == 0 ? Role::Tail : Role::Head, 3});
    OrientedChordDiagram d;
    for (int m = 0; m < 3; ++m) {
        for (const auto& e : interval[m])
            d.word.push_back(e);
        for (const auto& e : gap[m])
            d.word.push_back(e);
    }
    d.n = static_cast<int>(d.word.size()) / 2;
    return d;
}

}  // namespace

std::vector<RelationInstance> six_t_instances(int spectators) {
    if (spectators < 0 || spectators > 1)
        throw std::invalid_argument("six_t_instances: spectators must be 0 or 1");
    ArrowSpec r12{0, 1}, r13{0, 2}, r23{1, 2};
    std::vector<std::pair<ArrowSpec, ArrowSpec>> products{{r12, r13}, {r13, r12}, {r12, r23},
                                                          {r23, r12}, {r13, r23}, {r23, r13}};
    std::vector<std::vector<std::pair<int, int>>> placements;
    if (spectators == 0) {
        placements.push_back({});
    } else {
        for (int gt = 0; gt < 3; ++gt)
            for (int gh = 0; gh < 3; ++gh) {
                placements.push_back({{gt, 0}, {gh, 1}});
                if (gt == gh)
                    placements.push_back({{gh, 1}, {gt, 0}});
            }
    }
    std::vector<RelationInstance> out;
    for (size_t pl = 0; pl < placements.size(); ++pl) {
        RelationInstance inst;
        inst.name = "6T";
        inst.provenance = spectators == 0
                              ? "three marked arcs, no spectator"
                              : "three marked arcs, spectator placement " + std::to_string(pl);
        int sign = 1;
        for (const auto& [x, y] : products) {
            inst.oriented_terms.push_back({Rational(sign), ordered_term(x, y, placements[pl])});
            sign = -sign;
        }
        out.push_back(std::move(inst));
    }
    return out;
}

std::vector<RelationInstance> four_t_instances() {
    // Unoriented analogue: four terms t12*t13 - t13*t12 + t12*t23 - t23*t12.
    ArrowSpec t12{0, 1}, t13{0, 2}, t23{1, 2};
    std::vector<std::pair<ArrowSpec, ArrowSpec>> products{{t12, t13}, {t13, t12}, {t12, t23},
                                                          {t23, t12}};
    RelationInstance inst;
    inst.name = "4T";
    inst.provenance = "three marked arcs";
    int sign = 1;
    for (const auto& [x, y] : products) {
        OrientedChordDiagram o = ordered_term(x, y, {});
        inst.unoriented_terms.push_back({Rational(sign), unorient(o)});
        sign = -sign;
    }
    return {inst};
}

namespace {

StuInstance make_stu(VertexType vt, const std::vector<int>& slot_order) {
    StuInstance inst;
    inst.vd.n_arrows = 0;
    inst.vd.vtype = vt;
    for (int s : slot_order)
        inst.vd.word.push_back({VertexToken::Leg, s});
    validate(inst.vd);

    // Replace the vertex by two arrows. The commutator side splits into two
    // adjacent points carrying the two product orders; along the circle the
    // earlier point acts first.
    auto build = [&](bool first_order) {
        OrientedChordDiagram d;
        d.n = 2;
        for (int s : slot_order) {
            if (vt == VertexType::Bracket) {
                // slots 0,1 = in-legs (xi^i, xi^j); slot 2 = out-leg carrying
                // [x_i, x_j] = x_i x_j - x_j x_i.
                if (s == 0)
                    d.word.push_back({Role::Tail, 1});
                else if (s == 1)
                    d.word.push_back({Role::Tail, 2});
                else if (first_order) {  // x_i x_j: x_j acts first
                    d.word.push_back({Role::Head, 2});
                    d.word.push_back({Role::Head, 1});
                } else {
                    d.word.push_back({Role::Head, 1});
                    d.word.push_back({Role::Head, 2});
                }
            } else {
                // slot 0 = in-leg carrying [xi^j, xi^k]; slots 1,2 = out-legs
                // (x_j, x_k); arrows 1 = j, 2 = k.
                if (s == 1)
                    d.word.push_back({Role::Head, 1});
                else if (s == 2)
                    d.word.push_back({Role::Head, 2});
                else if (first_order) {  // xi^j xi^k: xi^k acts first
                    d.word.push_back({Role::Tail, 2});
                    d.word.push_back({Role::Tail, 1});
                } else {
                    d.word.push_back({Role::Tail, 1});
                    d.word.push_back({Role::Tail, 2});
                }
            }
        }
        return d;
    };
    inst.first = build(true);
    inst.second = build(false);
    inst.provenance = std::string(vt == VertexType::Bracket ? "bracket" : "cobracket") +
                      " vertex, slot order " + std::to_string(slot_order[0]) +
                      std::to_string(slot_order[1]) + std::to_string(slot_order[2]);
    return inst;
}

}  // namespace

std::vector<StuInstance> stu_instances() {
    return {
        make_stu(VertexType::Bracket, {0, 1, 2}),
        make_stu(VertexType::Bracket, {0, 2, 1}),
        make_stu(VertexType::Cobracket, {0, 1, 2}),
        make_stu(VertexType::Cobracket, {1, 0, 2}),
    };
}

namespace {

using Dense3 = std::vector<std::vector<std::vector<Rational>>>;

Dense3 densify(int nb, const std::vector<std::tuple<int, int, int, Rational>>& sparse) {
    Dense3 t(nb, std::vector<std::vector<Rational>>(nb, std::vector<Rational>(nb, Rational(0))));
    for (const auto& [i, j, k, v] : sparse)
        t[i][j][k] = v;
    return t;
}

std::string tuple_str(std::initializer_list<int> idx) {
    std::string s = "(";
    for (int i : idx)
        s += std::to_string(i) + ",";
    s.back() = ')';
    return s;
}

}  // namespace

std::vector<CheckEntry> check_bialgebra_identities(const StructureConstants& sc) {
    int nb = sc.basis_size;
    Dense3 c = densify(nb, sc.c), g = densify(nb, sc.gamma);
    std::string fam = family_tag(sc.family), nstr = std::to_string(sc.N);
    std::vector<CheckEntry> report;

    auto add = [&](const std::string& check, bool pass, const std::string& residual) {
        report.push_back({check, fam, nstr, pass, residual});
    };

    auto antisymmetric = [&](const Dense3& t, const char* name) {
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j)
                for (int k = 0; k < nb; ++k)
                    if (t[i][j][k] != -t[j][i][k]) {
                        add(std::string("AS-") + name, false, tuple_str({i, j, k}));
                        return;
                    }
        add(std::string("AS-") + name, true, "0");
    };
    antisymmetric(c, "bracket");
    antisymmetric(g, "cobracket");

    auto jacobi = [&](const Dense3& t, const char* name) {
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j)
                for (int k = 0; k < nb; ++k)
                    for (int l = 0; l < nb; ++l) {
                        Rational s = 0;
                        for (int m = 0; m < nb; ++m)
                            s += t[i][j][m] * t[m][k][l] + t[j][k][m] * t[m][i][l] +
                                 t[k][i][m] * t[m][j][l];
                        if (s != 0) {
                            add(name, false,
                                tuple_str({i, j, k, l}) + " -> " + rational_to_string(s));
                            return;
                        }
                    }
        add(name, true, "0");
    };
    jacobi(c, "jacobi");
    jacobi(g, "cojacobi");

    // Cocycle: delta([e_i,e_j]) = ad_{e_i}(delta e_j) - ad_{e_j}(delta e_i).
    bool cocycle_ok = true;
    std::string cocycle_residual = "0";
    for (int i = 0; i < nb && cocycle_ok; ++i)
        for (int j = 0; j < nb && cocycle_ok; ++j)
            for (int s = 0; s < nb && cocycle_ok; ++s)
                for (int t = 0; t < nb; ++t) {
                    Rational lhs = 0, rhs = 0;
                    for (int k = 0; k < nb; ++k)
                        lhs += c[i][j][k] * g[s][t][k];
                    for (int u = 0; u < nb; ++u)
                        rhs += g[u][t][j] * c[i][u][s] + g[s][u][j] * c[i][u][t] -
                               g[u][t][i] * c[j][u][s] - g[s][u][i] * c[j][u][t];
                    if (lhs != rhs) {
                        cocycle_ok = false;
                        cocycle_residual =
                            tuple_str({i, j, s, t}) + " -> " + rational_to_string(lhs - rhs);
                        break;
                    }
                }
    add("cocycle", cocycle_ok, cocycle_residual);
    return report;
}

std::vector<CheckEntry> check_bialgebra_identities(Family f, int N) {
    if (N < 2 || N > 4)
        throw std::invalid_argument("check_bialgebra_identities: N must be in 2..4");
    return check_bialgebra_identities(structure_constants(f, N));
}

CheckEntry check_relation(const RelationInstance& r, Family f) {
    if (!r.unoriented_terms.empty())
        throw std::invalid_argument("polynomial mode needs oriented terms");
    PolynomialQ sum;
    for (const auto& [coeff, d] : r.oriented_terms)
        sum += evaluate_weight(d, f) * coeff;
    CheckEntry e{r.name, family_tag(f), "poly", sum.is_zero(),
                 sum.is_zero() ? "0" : sum.latex()};
    return e;
}

CheckEntry check_relation(const RelationInstance& r, Family f, int N) {
    Rational sum = 0;
    for (const auto& [coeff, d] : r.oriented_terms)
        sum += coeff * oracle_eval(d, f, N);
    for (const auto& [coeff, d] : r.unoriented_terms)
        sum += coeff * casimir_eval(d, f, N);
    return {r.name, family_tag(f), std::to_string(N), sum == 0, rational_to_string(sum)};
}

}  // namespace wsys
