#include "wsys/diagrams.hpp"
#include "wsys/families.hpp"
#include "wsys/oracle.hpp"
#include "wsys/relations.hpp"
#include "wsys/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace wsys;
namespace fs = std::filesystem;

int default_threads() {
    if (const char* env = std::getenv("WSYS_THREADS"))
        if (int k = std::atoi(env); k > 0)
            return k;
    return 1;
}

// Deterministic parallel map: results land in slot order regardless of
// scheduling.
template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
    threads = std::min(std::max(threads, 1), count > 0 ? count : 1);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++)
                fn(i);
        });
    for (auto& th : pool)
        th.join();
}

std::vector<Family> parse_family_list(const std::string& list) {
    std::vector<Family> out;
    std::stringstream ss(list);
    std::string tag;
    while (std::getline(ss, tag, ','))
        out.push_back(family_from_tag(tag));
    if (out.empty())
        throw std::invalid_argument("empty family list");
    return out;
}

void atomic_write(const fs::path& path, const std::string& contents) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << contents;
    }
    fs::rename(tmp, path);
}

int run_eval(const std::string& family, const std::string& diagram, int oracle_n, int threads,
             const std::string& cache_path, int max_arrows) {
    (void)threads;  // single diagram: nothing to distribute
    Family f = family_from_tag(family);
    OrientedChordDiagram d = parse_oriented(diagram);
    if (d.n > max_arrows)
        throw std::invalid_argument("diagram has " + std::to_string(d.n) +
                                    " arrows, over the cap " + std::to_string(max_arrows));
    if (oracle_n > 0) {
        std::cout << nlohmann::json(rational_to_string(oracle_eval(d, f, oracle_n))) << "\n";
        return 0;
    }
    std::string key = format(canonicalize(d)) + "|" + family;
    nlohmann::json cache = nlohmann::json::object();
    if (!cache_path.empty() && fs::exists(cache_path)) {
        std::ifstream in(cache_path);
        in >> cache;
    }
    nlohmann::json value;
    if (cache.contains(key)) {
        value = cache[key];
    } else {
        value = poly_to_json(evaluate_weight(d, f));
        if (!cache_path.empty()) {
            cache[key] = value;
            atomic_write(cache_path, cache.dump(2) + "\n");
        }
    }
    std::cout << value.dump() << "\n";
    return 0;
}

void parse_n_range(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("bad --n-range, expected a..b");
    lo = std::stoi(text.substr(0, dots));
    hi = std::stoi(text.substr(dots + 2));
    if (lo < 1 || hi < lo)
        throw std::invalid_argument("bad --n-range bounds");
}

std::vector<CheckEntry> suite_6t() {
    std::vector<CheckEntry> report;
    for (int spectators = 0; spectators <= 1; ++spectators)
        for (const auto& inst : six_t_instances(spectators))
            for (Family f : kAllFamilies)
                report.push_back(check_relation(inst, f));
    return report;
}

std::vector<CheckEntry> suite_4t(int n_lo, int n_hi) {
    std::vector<CheckEntry> report;
    for (const auto& inst : four_t_instances())
        for (Family f : kAllFamilies)
            for (int N = std::max(n_lo, 1); N <= n_hi; ++N)
                report.push_back(check_relation(inst, f, N));
    return report;
}

std::vector<CheckEntry> suite_stu(int n_lo, int n_hi) {
    std::vector<CheckEntry> report;
    for (const auto& inst : stu_instances())
        for (Family f : kAllFamilies)
            for (int N = std::max(n_lo, 2); N <= n_hi; ++N) {
                Rational lhs = vertex_eval(inst.vd, f, N);
                Rational rhs = oracle_eval(inst.first, f, N) - oracle_eval(inst.second, f, N);
                report.push_back({"STU " + inst.provenance, family_tag(f), std::to_string(N),
                                  lhs == rhs, rational_to_string(lhs - rhs)});
            }
    return report;
}

std::vector<CheckEntry> suite_bialgebra(int n_lo, int n_hi) {
    std::vector<CheckEntry> report;
    for (Family f : kAllFamilies)
        for (int N = std::max(n_lo, 2); N <= std::min(n_hi, 4); ++N)
            for (auto& e : check_bialgebra_identities(f, N))
                report.push_back(std::move(e));
    return report;
}

std::vector<CheckEntry> suite_averaging(int max_arrows, int n_lo, int n_hi) {
    std::vector<CheckEntry> report;
    for (int n = 0; n <= std::min(max_arrows, 3); ++n)
        for (const auto& c : enumerate_unoriented(n))
            for (Family f : kAllFamilies)
                for (int N = std::max(n_lo, 1); N <= std::min(n_hi, 4); ++N) {
                    Rational lhs = 0;
                    for (const auto& d : average(c))
                        lhs += oracle_eval(d, f, N);
                    Rational rhs = casimir_eval(c, f, N);
                    report.push_back({"averaging " + format(c), family_tag(f), std::to_string(N),
                                      lhs == rhs, rational_to_string(lhs - rhs)});
                }
    return report;
}

std::vector<CheckEntry> suite_oracle_match(int max_arrows, int threads) {
    std::vector<OrientedChordDiagram> diagrams;
    for (int n = 0; n <= max_arrows; ++n)
        for (const auto& d : enumerate_oriented(n))
            diagrams.push_back(d);
    int count = static_cast<int>(diagrams.size()) * 4;
    std::vector<CheckEntry> report(count);
    parallel_for(count, threads, [&](int i) {
        const auto& d = diagrams[i / 4];
        Family f = kAllFamilies[i % 4];
        PolynomialQ fast = evaluate_weight(d, f);
        PolynomialQ slow = oracle_poly(d, f);
        report[i] = {"oracle-match " + format(d), family_tag(f), "poly", fast == slow,
                     (fast - slow).latex()};
    });
    return report;
}

int run_check(const std::string& suite, int max_arrows, const std::string& n_range, int threads) {
    int n_lo = 2, n_hi = 3;
    if (!n_range.empty())
        parse_n_range(n_range, n_lo, n_hi);
    std::vector<CheckEntry> report;
    auto append = [&](std::vector<CheckEntry> r) {
        for (auto& e : r)
            report.push_back(std::move(e));
    };
    bool all = suite == "all";
    bool known = all;
    if (all || suite == "6t")
        known = true, append(suite_6t());
    if (all || suite == "4t")
        known = true, append(suite_4t(n_lo, n_hi));
    if (all || suite == "stu")
        known = true, append(suite_stu(n_lo, n_hi));
    if (all || suite == "bialgebra")
        known = true, append(suite_bialgebra(n_lo, n_hi));
    if (all || suite == "averaging")
        known = true, append(suite_averaging(max_arrows, 1, 4));
    if (all || suite == "oracle-match")
        known = true, append(suite_oracle_match(std::min(max_arrows, 3), threads));
    if (!known)
        throw std::invalid_argument("unknown suite: " + suite);
    std::cout << report_to_json(report).dump(2) << "\n";
    for (const auto& e : report)
        if (!e.pass)
            return 1;
    return 0;
}

int run_table(int max_arrows, const std::string& families, const std::string& out_path,
              int threads) {
    std::vector<Family> fams = parse_family_list(families);
    struct Row {
        int n;
        std::string word, family, coeffs;
    };
    std::vector<std::pair<OrientedChordDiagram, Family>> jobs;
    for (int n = 1; n <= max_arrows; ++n)
        for (const auto& d : enumerate_oriented(n))
            for (Family f : fams)
                jobs.push_back({d, f});
    std::vector<Row> rows(jobs.size());
    parallel_for(static_cast<int>(jobs.size()), threads, [&](int i) {
        const auto& [d, f] = jobs[i];
        std::string coeffs = "[";
        for (const auto& c : evaluate_weight(d, f).binomial_coeffs()) {
            if (coeffs.size() > 1)
                coeffs += ",";
            coeffs += rational_to_string(c);
        }
        coeffs += "]";
        rows[i] = {d.n, format(d), family_tag(f), coeffs};
    });
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.n, a.word, a.family) < std::tie(b.n, b.word, b.family);
    });
    std::ostringstream csv;
    csv << "word,family,binomial_coeffs\n";
    for (const auto& r : rows)
        csv << '"' << r.word << "\"," << r.family << ",\"" << r.coeffs << "\"\n";
    atomic_write(out_path, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lie weight systems on oriented chord diagrams"};
    app.require_subcommand(1);

    std::string family = "gl", diagram, cache_path, suite = "all", n_range, families_list,
                out_path;
    int oracle_n = 0, threads = default_threads(), max_arrows = 4;

    auto* eval = app.add_subcommand("eval", "Evaluate one diagram");
    eval->add_option("--family", family, "gl|so-even|so-odd|sp")->required();
    eval->add_option("--diagram", diagram, "diagram word, e.g. \"t1 h1\"")->required();
    eval->add_option("--oracle", oracle_n, "evaluate the matrix oracle at this N instead");
    eval->add_option("--threads", threads, "worker threads");
    eval->add_option("--cache", cache_path, "advisory JSON result cache");
    eval->add_option("--max-arrows", max_arrows, "arrow cap override")
        ->check(CLI::Range(0, 6));

    auto* check = app.add_subcommand("check", "Run verification suites");
    check->add_option("--suite", suite, "6t|4t|stu|bialgebra|averaging|oracle-match|all");
    check->add_option("--max-arrows", max_arrows, "diagram size cap")->check(CLI::Range(0, 6));
    check->add_option("--n-range", n_range, "a..b range of N for numeric checks");
    check->add_option("--threads", threads, "worker threads");

    auto* table = app.add_subcommand("table", "Tabulate weight polynomials to CSV");
    table->add_option("--max-arrows", max_arrows, "tabulate 1..n arrows")
        ->required()
        ->check(CLI::Range(1, 6));
    table->add_option("--families", families_list, "comma-separated family tags")
        ->default_val("gl,so-even,so-odd,sp");
    table->add_option("--out", out_path, "output CSV path")->required();
    table->add_option("--threads", threads, "worker threads");

    try {
        app.parse(argc, argv);
        if (eval->parsed())
            return run_eval(family, diagram, oracle_n, threads, cache_path, max_arrows);
        if (check->parsed())
            return run_check(suite, max_arrows, n_range, threads);
        return run_table(max_arrows, families_list, out_path, threads);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
