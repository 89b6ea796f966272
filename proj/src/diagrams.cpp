#include "wsys/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace wsys {

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> toks;
    if (text.empty())
        return toks;
    size_t start = 0;
    while (true) {
        size_t sp = text.find(' ', start);
        if (sp == std::string::npos) {
            toks.push_back(text.substr(start));
            break;
        }
        toks.push_back(text.substr(start, sp - start));
        start = sp + 1;
    }
    return toks;
}

struct RawToken {
    char kind;  // 't', 'h' or 'c'
    int id;
};

RawToken parse_token(const std::string& tok, int idx) {
    if (tok.empty())
        throw ParseError("empty token at index " + std::to_string(idx), idx);
    for (unsigned char ch : tok)
        if (ch >= 0x80)
            throw ParseError("non-ASCII byte in token " + std::to_string(idx), idx);
    char kind = tok[0];
    if (kind != 't' && kind != 'h' && kind != 'c')
        throw ParseError("bad token '" + tok + "' at index " + std::to_string(idx), idx);
    if (tok.size() < 2 || tok.find_first_not_of("0123456789", 1) != std::string::npos)
        throw ParseError("bad token '" + tok + "' at index " + std::to_string(idx), idx);
    return {kind, std::stoi(tok.substr(1))};
}

template <class Word>
Word renumber_by_first_occurrence(const Word& word);

template <>
std::vector<Endpoint> renumber_by_first_occurrence(const std::vector<Endpoint>& word) {
    std::map<int, int> remap;
    std::vector<Endpoint> out;
    out.reserve(word.size());
    for (const auto& e : word) {
        auto [it, fresh] = remap.emplace(e.id, static_cast<int>(remap.size()) + 1);
        (void)fresh;
        out.push_back({e.role, it->second});
    }
    return out;
}

template <>
std::vector<int> renumber_by_first_occurrence(const std::vector<int>& word) {
    std::map<int, int> remap;
    std::vector<int> out;
    out.reserve(word.size());
    for (int id : word) {
        auto [it, fresh] = remap.emplace(id, static_cast<int>(remap.size()) + 1);
        (void)fresh;
        out.push_back(it->second);
    }
    return out;
}

}  // namespace

AnyDiagram parse_diagram(const std::string& text) {
    auto toks = split_tokens(text);
    char mode = 0;
    std::vector<RawToken> raw;
    raw.reserve(toks.size());
    for (size_t i = 0; i < toks.size(); ++i) {
        RawToken t = parse_token(toks[i], static_cast<int>(i));
        bool oriented_kind = t.kind != 'c';
        if (mode == 0)
            mode = oriented_kind ? 'o' : 'c';
        else if ((mode == 'o') != oriented_kind)
            throw ParseError("mixed token kinds at index " + std::to_string(i),
                             static_cast<int>(i));
        raw.push_back(t);
    }
    if (mode == 'c') {
        ChordDiagram d;
        std::map<int, int> count;
        std::vector<int> word;
        for (size_t i = 0; i < raw.size(); ++i) {
            word.push_back(raw[i].id);
            if (++count[raw[i].id] > 2)
                throw ParseError("chord " + std::to_string(raw[i].id) +
                                     " appears more than twice (token " + std::to_string(i) + ")",
                                 static_cast<int>(i));
        }
        for (auto [id, c] : count)
            if (c != 2)
                throw ParseError("chord " + std::to_string(id) + " appears only once", 0);
        d.word = renumber_by_first_occurrence(word);
        d.n = static_cast<int>(d.word.size()) / 2;
        return d;
    }
    OrientedChordDiagram d;
    std::map<std::pair<int, char>, int> seen;  // (id, role) -> count
    std::map<int, int> total;
    std::vector<Endpoint> word;
    for (size_t i = 0; i < raw.size(); ++i) {
        Role r = raw[i].kind == 't' ? Role::Tail : Role::Head;
        if (++seen[{raw[i].id, raw[i].kind}] > 1)
            throw ParseError("arrow " + std::to_string(raw[i].id) + " has two " +
                                 (r == Role::Tail ? "tails" : "heads") + " (token " +
                                 std::to_string(i) + ")",
                             static_cast<int>(i));
        ++total[raw[i].id];
        word.push_back({r, raw[i].id});
    }
    for (auto [id, c] : total)
        if (c != 2)
            throw ParseError("arrow " + std::to_string(id) + " is missing an endpoint", 0);
    d.word = renumber_by_first_occurrence(word);
    d.n = static_cast<int>(d.word.size()) / 2;
    return d;
}

OrientedChordDiagram parse_oriented(const std::string& text) {
    auto any = parse_diagram(text);
    if (auto* d = std::get_if<OrientedChordDiagram>(&any))
        return *d;
    throw ParseError("expected an oriented diagram", 0);
}

ChordDiagram parse_unoriented(const std::string& text) {
    auto any = parse_diagram(text);
    if (auto* d = std::get_if<ChordDiagram>(&any))
        return *d;
    throw ParseError("expected an unoriented diagram", 0);
}

std::string format(const OrientedChordDiagram& d) {
    std::string out;
    for (const auto& e : d.word) {
        if (!out.empty())
            out += ' ';
        out += (e.role == Role::Tail ? 't' : 'h');
        out += std::to_string(e.id);
    }
    return out;
}

std::string format(const ChordDiagram& d) {
    std::string out;
    for (int id : d.word) {
        if (!out.empty())
            out += ' ';
        out += 'c';
        out += std::to_string(id);
    }
    return out;
}

OrientedChordDiagram rotate(const OrientedChordDiagram& d, int k) {
    OrientedChordDiagram r = d;
    if (d.word.empty())
        return r;
    int m = static_cast<int>(d.word.size());
    k = ((k % m) + m) % m;
    std::rotate(r.word.begin(), r.word.begin() + k, r.word.end());
    return r;
}

ChordDiagram rotate(const ChordDiagram& d, int k) {
    ChordDiagram r = d;
    if (d.word.empty())
        return r;
    int m = static_cast<int>(d.word.size());
    k = ((k % m) + m) % m;
    std::rotate(r.word.begin(), r.word.begin() + k, r.word.end());
    return r;
}

OrientedChordDiagram canonicalize(const OrientedChordDiagram& d) {
    OrientedChordDiagram best = d;
    best.word = renumber_by_first_occurrence(d.word);
    for (size_t k = 1; k < d.word.size(); ++k) {
        auto cand = renumber_by_first_occurrence(rotate(d, static_cast<int>(k)).word);
        if (cand < best.word)
            best.word = cand;
    }
    return best;
}

ChordDiagram canonicalize(const ChordDiagram& d) {
    ChordDiagram best = d;
    best.word = renumber_by_first_occurrence(d.word);
    for (size_t k = 1; k < d.word.size(); ++k) {
        auto cand = renumber_by_first_occurrence(rotate(d, static_cast<int>(k)).word);
        if (cand < best.word)
            best.word = cand;
    }
    return best;
}

namespace {

void matchings(int points, std::vector<std::pair<int, int>>& cur, std::vector<bool>& used,
               const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    int first = -1;
    for (int i = 0; i < points; ++i)
        if (!used[i]) {
            first = i;
            break;
        }
    if (first < 0) {
        emit(cur);
        return;
    }
    used[first] = true;
    for (int j = first + 1; j < points; ++j) {
        if (used[j])
            continue;
        used[j] = true;
        cur.push_back({first, j});
        matchings(points, cur, used, emit);
        cur.pop_back();
        used[j] = false;
    }
    used[first] = false;
}

}  // namespace

std::vector<OrientedChordDiagram> enumerate_oriented(int n) {
    if (n < 0 || n > 6)
        throw std::invalid_argument("enumerate_oriented: n out of range 0..6");
    std::set<std::vector<Endpoint>> seen;
    if (n == 0)
        seen.insert({});
    std::vector<std::pair<int, int>> cur;
    std::vector<bool> used(2 * n, false);
    matchings(2 * n, cur, used, [&](const std::vector<std::pair<int, int>>& m) {
        for (int dirs = 0; dirs < (1 << n); ++dirs) {
            OrientedChordDiagram d;
            d.n = n;
            d.word.resize(2 * n);
            for (int c = 0; c < n; ++c) {
                bool flip = (dirs >> c) & 1;
                auto [a, b] = m[c];
                d.word[a] = {flip ? Role::Head : Role::Tail, c + 1};
                d.word[b] = {flip ? Role::Tail : Role::Head, c + 1};
            }
            seen.insert(canonicalize(d).word);
        }
    });
    std::vector<OrientedChordDiagram> out;
    for (const auto& w : seen)
        out.push_back({n, w});
    return out;
}

std::vector<ChordDiagram> enumerate_unoriented(int n) {
    if (n < 0 || n > 6)
        throw std::invalid_argument("enumerate_unoriented: n out of range 0..6");
    std::set<std::vector<int>> seen;
    if (n == 0)
        seen.insert({});
    std::vector<std::pair<int, int>> cur;
    std::vector<bool> used(2 * n, false);
    matchings(2 * n, cur, used, [&](const std::vector<std::pair<int, int>>& m) {
        ChordDiagram d;
        d.n = n;
        d.word.resize(2 * n);
        for (int c = 0; c < n; ++c) {
            d.word[m[c].first] = c + 1;
            d.word[m[c].second] = c + 1;
        }
        seen.insert(canonicalize(d).word);
    });
    std::vector<ChordDiagram> out;
    for (const auto& w : seen)
        out.push_back({n, w});
    return out;
}

std::vector<ArrowArcs> resolve_arcs(const OrientedChordDiagram& d) {
    if (d.n < 1)
        throw std::invalid_argument("resolve_arcs: need at least one arrow");
    int m = 2 * d.n;
    std::vector<ArrowArcs> out(d.n);
    for (int p = 0; p < m; ++p) {
        const Endpoint& e = d.word[p];
        int in = (p + m - 1) % m;  // arc ending at endpoint p
        int outarc = p;            // arc starting at endpoint p
        ArrowArcs& rec = out[e.id - 1];
        if (e.role == Role::Tail) {
            rec.alpha = in;
            rec.beta = outarc;
        } else {
            rec.mu = in;
            rec.nu = outarc;
        }
    }
    return out;
}

ChordDiagram unorient(const OrientedChordDiagram& d) {
    ChordDiagram c;
    c.n = d.n;
    for (const auto& e : d.word)
        c.word.push_back(e.id);
    c.word = renumber_by_first_occurrence(c.word);
    return c;
}

void validate(const VertexDiagram& vd) {
    int in_legs = vd.vtype == VertexType::Bracket ? 2 : 1;
    std::set<int> legs;
    std::map<std::pair<int, int>, int> arrows;  // (id, is_head) -> count
    for (const auto& t : vd.word) {
        if (t.kind == VertexToken::Leg) {
            if (t.id < 0 || t.id > 2 || !legs.insert(t.id).second)
                throw std::invalid_argument("vertex diagram: bad or duplicate leg slot");
        } else {
            ++arrows[{t.id, t.kind == VertexToken::ArrowHead}];
        }
    }
    if (legs.size() != 3)
        throw std::invalid_argument("vertex diagram: vertex must have exactly 3 legs");
    (void)in_legs;
    for (int a = 1; a <= vd.n_arrows; ++a)
        if (arrows[{a, 0}] != 1 || arrows[{a, 1}] != 1)
            throw std::invalid_argument("vertex diagram: arrow " + std::to_string(a) +
                                        " needs one tail and one head");
    if (static_cast<int>(vd.word.size()) != 2 * vd.n_arrows + 3)
        throw std::invalid_argument("vertex diagram: stray tokens");
}

VertexDiagram reverse_vertex(const VertexDiagram& vd) {
    // Swapping the two like-direction legs reverses the cyclic order.
    int a = vd.vtype == VertexType::Bracket ? 0 : 1;
    int b = vd.vtype == VertexType::Bracket ? 1 : 2;
    VertexDiagram out = vd;
    for (auto& t : out.word)
        if (t.kind == VertexToken::Leg) {
            if (t.id == a)
                t.id = b;
            else if (t.id == b)
                t.id = a;
        }
    return out;
}

}  // namespace wsys
