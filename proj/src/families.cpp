#include "wsys/families.hpp"

#include "wsys/ordersystem.hpp"

#include <numeric>
#include <stdexcept>

namespace wsys {

std::string family_tag(Family f) {
    switch (f) {
        case Family::GL: return "gl";
        case Family::SO_EVEN: return "so-even";
        case Family::SO_ODD: return "so-odd";
        case Family::SP: return "sp";
    }
    throw std::logic_error("bad family");
}

Family family_from_tag(const std::string& s) {
    if (s == "gl")
        return Family::GL;
    if (s == "so-even")
        return Family::SO_EVEN;
    if (s == "so-odd")
        return Family::SO_ODD;
    if (s == "sp")
        return Family::SP;
    throw std::invalid_argument("unknown family tag '" + s + "'");
}

int rep_dimension(Family f, int N) {
    switch (f) {
        case Family::GL: return N;
        case Family::SO_EVEN: return 2 * N;
        case Family::SO_ODD: return 2 * N + 1;
        case Family::SP: return 2 * N;
    }
    throw std::logic_error("bad family");
}

PolynomialQ rep_dimension_poly(Family f) {
    switch (f) {
        case Family::GL: return PolynomialQ({std::vector<Rational>{0, 1}});
        case Family::SO_EVEN:
        case Family::SP: return PolynomialQ({std::vector<Rational>{0, 2}});
        case Family::SO_ODD: return PolynomialQ({std::vector<Rational>{1, 2}});
    }
    throw std::logic_error("bad family");
}

PolynomialQ ambient_dimension_poly(Family f) {
    switch (f) {
        case Family::GL: return PolynomialQ({std::vector<Rational>{0, 0, 1}});
        case Family::SO_EVEN: return PolynomialQ({std::vector<Rational>{0, -1, 2}});
        case Family::SO_ODD:
        case Family::SP: return PolynomialQ({std::vector<Rational>{0, 1, 2}});
    }
    throw std::logic_error("bad family");
}

namespace {

constexpr Sector A = Sector::A;
constexpr Sector B = Sector::B;
constexpr Sector U = Sector::U;

PatternRule rule(std::array<Sector, 4> sect, std::array<int, 4> cls, OrderKind ord, int sign,
                 Rational scalar) {
    return {sect, cls, ord, sign, std::move(scalar)};
}

// Slot classes, written as the pairing they induce:
//   {alpha,nu}|{beta,mu} -> {0,1,1,0}     {alpha,mu}|{beta,nu} -> {0,1,0,1}
// with class 0 = the pair named first.
std::vector<PatternRule> so_even_rules() {
    Rational h(1, 2);
    return {
        // k=1: expansion of (xi^{ij1})(x_{ij1}) over 1 <= i <= j <= N.
        rule({A, A, A, A}, {0, 1, 1, 0}, OrderKind::LeqHalf, +1, h),
        rule({A, A, B, B}, {0, 1, 0, 1}, OrderKind::LeqHalf, -1, h),
        rule({B, B, A, A}, {1, 0, 1, 0}, OrderKind::LeqHalf, -1, h),
        rule({B, B, B, B}, {1, 0, 0, 1}, OrderKind::LeqHalf, +1, h),
        // k=2: i < j only (the i = j elements vanish identically).
        rule({A, B, B, A}, {1, 0, 1, 0}, OrderKind::Less, -1, h),
        rule({A, B, B, A}, {1, 0, 0, 1}, OrderKind::Less, +1, h),
        rule({A, B, B, A}, {0, 1, 1, 0}, OrderKind::Less, +1, h),
        rule({A, B, B, A}, {0, 1, 0, 1}, OrderKind::Less, -1, h),
    };
}

std::vector<PatternRule> sp_rules() {
    Rational h(1, 2);
    return {
        // k=1 agrees with so(2N).
        rule({A, A, A, A}, {0, 1, 1, 0}, OrderKind::LeqHalf, +1, h),
        rule({A, A, B, B}, {0, 1, 0, 1}, OrderKind::LeqHalf, -1, h),
        rule({B, B, A, A}, {1, 0, 1, 0}, OrderKind::LeqHalf, -1, h),
        rule({B, B, B, B}, {1, 0, 0, 1}, OrderKind::LeqHalf, +1, h),
        // k=2: both factors carry plus signs and i = j is allowed.
        rule({A, B, B, A}, {1, 0, 1, 0}, OrderKind::LeqHalf, +1, h),
        rule({A, B, B, A}, {1, 0, 0, 1}, OrderKind::LeqHalf, +1, h),
        rule({A, B, B, A}, {0, 1, 1, 0}, OrderKind::LeqHalf, +1, h),
        rule({A, B, B, A}, {0, 1, 0, 1}, OrderKind::LeqHalf, +1, h),
    };
}

std::vector<PatternRule> so_odd_rules() {
    Rational h(1, 2);
    std::vector<PatternRule> rules{
        // k=0 row, indexed by the single free index i. The first-row element
        // e_{i+1,1} - e_{1,i+N+1} sits on the x side (and its transpose on the
        // xi side): this is the assignment under which both halves close under
        // the bracket and the r-matrix satisfies the classical Yang-Baxter
        // equation; the opposite choice breaks every 6T instance.
        rule({A, U, U, A}, {0, 1, 1, 0}, OrderKind::None, +1, h),
        rule({A, U, B, U}, {0, 1, 0, 1}, OrderKind::None, -1, h),
        rule({U, B, U, A}, {1, 0, 1, 0}, OrderKind::None, -1, h),
        rule({U, B, B, U}, {1, 0, 0, 1}, OrderKind::None, +1, h),
    };
    // k=1,2 mirror so(2N) with the sectors shifted by one.
    for (const auto& r : so_even_rules())
        rules.push_back(r);
    return rules;
}

}  // namespace

const std::vector<PatternRule>& pattern_rules(Family f) {
    static const std::vector<PatternRule> gl{
        rule({A, A, A, A}, {0, 1, 1, 0}, OrderKind::LeqHalf, +1, 1)};
    static const std::vector<PatternRule> so_even = so_even_rules();
    static const std::vector<PatternRule> so_odd = so_odd_rules();
    static const std::vector<PatternRule> sp = sp_rules();
    switch (f) {
        case Family::GL: return gl;
        case Family::SO_EVEN: return so_even;
        case Family::SO_ODD: return so_odd;
        case Family::SP: return sp;
    }
    throw std::logic_error("bad family");
}

int sector_index(Family f, int N, Sector s, int v) {
    switch (f) {
        case Family::GL:
            return v;
        case Family::SO_EVEN:
        case Family::SP:
            return s == Sector::A ? v : v + N;
        case Family::SO_ODD:
            if (s == Sector::U)
                return 1;
            return s == Sector::A ? v + 1 : v + N + 1;
    }
    throw std::logic_error("bad family");
}

namespace {

// Maps a concrete index in 1..d to (sector, free value); free value is 0 for U.
bool index_sector(Family f, int N, int idx, Sector s, int& v) {
    switch (f) {
        case Family::GL:
            if (s != Sector::A)
                return false;
            v = idx;
            return true;
        case Family::SO_EVEN:
        case Family::SP:
            if (s == Sector::A && idx >= 1 && idx <= N) {
                v = idx;
                return true;
            }
            if (s == Sector::B && idx > N && idx <= 2 * N) {
                v = idx - N;
                return true;
            }
            return false;
        case Family::SO_ODD:
            if (s == Sector::U && idx == 1) {
                v = 0;
                return true;
            }
            if (s == Sector::A && idx >= 2 && idx <= N + 1) {
                v = idx - 1;
                return true;
            }
            if (s == Sector::B && idx >= N + 2 && idx <= 2 * N + 1) {
                v = idx - N - 1;
                return true;
            }
            return false;
    }
    return false;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

struct PendingConstraint {
    int arc_a, arc_b;  // representative arcs of the two classes
    OrderKind kind;    // Less or LeqHalf after normalization
};

}  // namespace

Rational rules_tensor_entry(Family f, int N, int alpha, int beta, int mu, int nu) {
    std::array<int, 4> idx{alpha, beta, mu, nu};
    Rational total = 0;
    for (const auto& r : pattern_rules(f)) {
        std::array<int, 4> v{};
        bool ok = true;
        for (int s = 0; s < 4 && ok; ++s)
            ok = index_sector(f, N, idx[s], r.sector[s], v[s]);
        if (!ok)
            continue;
        // Both slots of a class must carry the same free value.
        std::array<int, 2> cls_val{-1, -1};
        std::array<bool, 2> cls_is_u{false, false};
        for (int s = 0; s < 4 && ok; ++s) {
            int c = r.cls[s];
            if (r.sector[s] == Sector::U) {
                cls_is_u[c] = true;
                continue;
            }
            if (cls_val[c] < 0)
                cls_val[c] = v[s];
            else if (cls_val[c] != v[s])
                ok = false;
        }
        if (!ok)
            continue;
        Rational w = 1;
        if (!cls_is_u[0] && !cls_is_u[1]) {
            int v0 = cls_val[0], v1 = cls_val[1];
            switch (r.order) {
                case OrderKind::None: break;
                case OrderKind::Less: w = v0 < v1 ? 1 : 0; break;
                case OrderKind::Greater: w = v0 > v1 ? 1 : 0; break;
                case OrderKind::LeqHalf:
                    w = v0 < v1 ? Rational(1) : (v0 == v1 ? Rational(1, 2) : Rational(0));
                    break;
                case OrderKind::GeqHalf:
                    w = v0 > v1 ? Rational(1) : (v0 == v1 ? Rational(1, 2) : Rational(0));
                    break;
            }
        }
        total += Rational(r.sign) * r.scalar * w;
    }
    return total;
}

namespace {

// Resolves the weak constraints one by one, branching into the strict case
// and the half-weighted merge, then counts the surviving order system.
void finish_term(const OrientedChordDiagram& d, const std::vector<Sector>& arc_sector, Dsu dsu,
                 std::vector<PendingConstraint> pending, size_t next,
                 std::vector<std::pair<int, int>> strict, const Rational& weight,
                 PolynomialQ& total) {
    int m = 2 * d.n;
    for (; next < pending.size(); ++next) {
        auto& pc = pending[next];
        if (pc.kind == OrderKind::Less) {
            strict.push_back({pc.arc_a, pc.arc_b});
            continue;
        }
        // Weak: branch into strict and merged halves.
        {
            auto strict_branch = strict;
            strict_branch.push_back({pc.arc_a, pc.arc_b});
            finish_term(d, arc_sector, dsu, pending, next + 1, std::move(strict_branch), weight,
                        total);
        }
        Dsu merged = dsu;
        merged.unite(pc.arc_a, pc.arc_b);
        finish_term(d, arc_sector, std::move(merged), pending, next + 1, strict,
                    weight * Rational(1, 2), total);
        return;
    }

    // Leaf: collect classes and count.
    std::vector<int> class_of(m, -1);
    std::vector<bool> class_has_u, class_has_value;
    int classes = 0;
    for (int a = 0; a < m; ++a) {
        int root = dsu.find(a);
        if (class_of[root] < 0) {
            class_of[root] = classes++;
            class_has_u.push_back(false);
            class_has_value.push_back(false);
        }
        class_of[a] = class_of[root];
        if (arc_sector[a] == Sector::U)
            class_has_u[class_of[a]] = true;
        else
            class_has_value[class_of[a]] = true;
    }
    std::vector<int> valued_id(classes, -1);
    int valued = 0;
    for (int c = 0; c < classes; ++c) {
        if (class_has_u[c] && class_has_value[c])
            return;  // fixed index forced onto a free class: dead
        if (!class_has_u[c])
            valued_id[c] = valued++;
    }
    OrderSystem sys;
    sys.classes = valued;
    sys.weight = weight;
    for (auto [a, b] : strict) {
        int ca = class_of[dsu.find(a)], cb = class_of[dsu.find(b)];
        if (valued_id[ca] < 0 || valued_id[cb] < 0)
            return;  // constraint against the fixed index: dead
        sys.strict.push_back({valued_id[ca], valued_id[cb]});
    }
    total += count_strict_maps(sys);
}

}  // namespace

PolynomialQ evaluate_weight(const OrientedChordDiagram& d, Family f) {
    if (d.n > 6)
        throw std::invalid_argument("evaluate_weight: more than 6 arrows");
    if (d.n == 0)
        return rep_dimension_poly(f);

    const auto& rules = pattern_rules(f);
    auto arcs = resolve_arcs(d);
    int m = 2 * d.n;
    PolynomialQ total;

    std::vector<size_t> choice(d.n, 0);
    while (true) {
        // One pattern choice per arrow.
        std::vector<Sector> arc_sector(m, Sector::U);
        std::vector<bool> arc_set(m, false);
        bool alive = true;
        Rational weight = 1;
        Dsu dsu(m);
        std::vector<PendingConstraint> pending;
        for (int r = 0; r < d.n && alive; ++r) {
            const PatternRule& pr = rules[choice[r]];
            std::array<int, 4> slot_arc{arcs[r].alpha, arcs[r].beta, arcs[r].mu, arcs[r].nu};
            for (int s = 0; s < 4 && alive; ++s) {
                int a = slot_arc[s];
                if (arc_set[a] && arc_sector[a] != pr.sector[s])
                    alive = false;
                arc_set[a] = true;
                arc_sector[a] = pr.sector[s];
            }
            if (!alive)
                break;
            int rep0 = -1, rep1 = -1;
            for (int s = 0; s < 4; ++s) {
                int& rep = pr.cls[s] == 0 ? rep0 : rep1;
                if (rep < 0)
                    rep = slot_arc[s];
                else
                    dsu.unite(rep, slot_arc[s]);
            }
            weight *= Rational(pr.sign) * pr.scalar;
            switch (pr.order) {
                case OrderKind::None: break;
                case OrderKind::Less: pending.push_back({rep0, rep1, OrderKind::Less}); break;
                case OrderKind::Greater: pending.push_back({rep1, rep0, OrderKind::Less}); break;
                case OrderKind::LeqHalf:
                    pending.push_back({rep0, rep1, OrderKind::LeqHalf});
                    break;
                case OrderKind::GeqHalf:
                    pending.push_back({rep1, rep0, OrderKind::LeqHalf});
                    break;
            }
        }
        if (alive)
            finish_term(d, arc_sector, std::move(dsu), std::move(pending), 0, {}, weight, total);

        int i = 0;
        while (i < d.n && ++choice[i] == rules.size()) {
            choice[i] = 0;
            ++i;
        }
        if (i == d.n)
            break;
    }
    return total;
}

}  // namespace wsys
