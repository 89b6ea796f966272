#include "wsys/ordersystem.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace wsys {

namespace {

bool has_cycle(int p, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(p);
    for (auto [a, b] : edges) {
        if (a == b)
            return true;
        adj[a].push_back(b);
    }
    std::vector<int> state(p, 0);  // 0 new, 1 on stack, 2 done
    std::vector<int> stack;
    for (int s = 0; s < p; ++s) {
        if (state[s])
            continue;
        stack.push_back(s);
        std::vector<size_t> pos{0};
        state[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            if (pos.back() < adj[v].size()) {
                int w = adj[v][pos.back()++];
                if (state[w] == 1)
                    return true;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back(w);
                    pos.push_back(0);
                }
            } else {
                state[v] = 2;
                stack.pop_back();
                pos.pop_back();
            }
        }
    }
    return false;
}

// #maps classes -> {1..m} satisfying every strict edge.
BigInt count_into_chain(int p, const std::vector<std::vector<std::pair<int, bool>>>& checks,
                        int m) {
    if (p == 0)
        return 1;
    std::vector<int> val(p, 0);
    BigInt total = 0;
    int level = 0;
    val[0] = 0;
    while (level >= 0) {
        if (++val[level] > m) {
            val[level] = 0;
            --level;
            continue;
        }
        bool ok = true;
        for (auto [other, other_is_smaller] : checks[level]) {
            int lo = other_is_smaller ? val[other] : val[level];
            int hi = other_is_smaller ? val[level] : val[other];
            if (lo >= hi) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        if (level == p - 1) {
            ++total;
        } else {
            ++level;
            val[level] = 0;
        }
    }
    return total;
}

}  // namespace

BigInt brute_force_strict_maps(const OrderSystem& s, int N) {
    if (s.dead)
        return 0;
    if (s.classes == 0)
        return 1;
    if (N < 1)
        return 0;
    std::vector<int> val(s.classes, 1);
    BigInt total = 0;
    while (true) {
        bool ok = true;
        for (auto [a, b] : s.strict)
            if (!(val[a] < val[b])) {
                ok = false;
                break;
            }
        if (ok)
            ++total;
        int i = 0;
        while (i < s.classes && ++val[i] > N) {
            val[i] = 1;
            ++i;
        }
        if (i == s.classes)
            break;
    }
    return total;
}

PolynomialQ count_strict_maps(const OrderSystem& s) {
    if (s.dead || s.weight == 0)
        return {};
    int p = s.classes;
    std::set<std::pair<int, int>> dedup(s.strict.begin(), s.strict.end());
    std::vector<std::pair<int, int>> edges(dedup.begin(), dedup.end());
    if (has_cycle(p, edges))
        return {};

    static std::mutex memo_mutex;
    static std::map<std::pair<int, std::vector<std::pair<int, int>>>, PolynomialQ> memo;
    std::pair<int, std::vector<std::pair<int, int>>> key{p, edges};
    {
        std::lock_guard lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second * s.weight;
    }

    // Edge checks against already-assigned classes, for early pruning.
    std::vector<std::vector<std::pair<int, bool>>> checks(std::max(p, 1));
    for (auto [a, b] : edges) {
        if (a < b)
            checks[b].push_back({a, true});
        else
            checks[a].push_back({b, false});
    }

    // P has degree <= p, so it is pinned by its values at 0..p.
    std::vector<std::pair<BigInt, Rational>> samples;
    for (int m = 0; m <= p; ++m)
        samples.push_back({BigInt(m), Rational(count_into_chain(p, checks, m))});
    PolynomialQ poly = PolynomialQ::interpolate(samples, static_cast<unsigned>(p));

    {
        std::lock_guard lock(memo_mutex);
        memo.emplace(std::move(key), poly);
    }
    return poly * s.weight;
}

}  // namespace wsys
