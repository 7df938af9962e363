// drinfeld: command line front end for the cohomology computations and the
// verification battery. Exit codes: 0 success, 1 usage, 2 failed check.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "drinfeld/cohomology.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/gmodules.hpp"
#include "drinfeld/orlik.hpp"
#include "drinfeld/qarith.hpp"
#include "drinfeld/verify.hpp"

using namespace drinfeld;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_failure = 2;

// Largest |G/B| accepted for flag enumeration.
constexpr long flag_guard = 20000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int n = 0;
    std::vector<int> qs{2};
    int m_max = 2;
    int n_max = 2;
    std::string format = "text";
    std::string suite = "all";
    std::string cache_dir;
    int jobs = 1;
    std::uint64_t seed = 20240601;
    int samples = 200;
};

void check_q(int q)
{
    if (!is_prime(q))
        throw UsageError("--q must list primes (got " + std::to_string(q) + ")");
}

void check_n(int n)
{
    if (n < 1)
        throw UsageError("--n must be at least 1");
}

void check_flag_guard(int n, int q)
{
    if (parabolic_index(ParabolicType::empty(n), q) > flag_guard)
        throw UsageError("n=" + std::to_string(n) + ", q=" + std::to_string(q) + " exceeds the flag enumeration guard (" +
                         std::to_string(flag_guard) + " complete flags)");
}

std::optional<std::filesystem::path> cache_path(const RunConfig& cfg)
{
    if (cfg.cache_dir.empty())
        return std::nullopt;
    return std::filesystem::path(cfg.cache_dir);
}

int cmd_cohomology(const RunConfig& cfg)
{
    check_n(cfg.n);
    for (int q : cfg.qs) {
        check_q(q);
        check_flag_guard(cfg.n, q);
    }
    RegistryPool pool(cache_path(cfg));
    nlohmann::json docs = nlohmann::json::array();
    bool all_ok = true;
    for (int q : cfg.qs) {
        const int n = cfg.n;
        std::vector<std::string> problems;
        std::vector<CohomologyTable> tables;
        try {
            const auto hy = h_of_y(pool.get(n, q), cfg.jobs);
            const auto hc = solve_les(hy);
            const auto hx = dualize(hc);
            tables = {hy, hc, hx};
            for (auto& l : table_diff(expected_h_of_y(n, q), hy))
                problems.push_back("H(Y) " + l);
            for (auto& l : table_diff(expected_hc_of_x(n, q), hc))
                problems.push_back("Hc(X) " + l);
            for (auto& l : table_diff(expected_h_of_x(n, q), hx))
                problems.push_back("H(X) " + l);
            for (int m = 1; m <= 3; ++m)
                if (hc.lefschetz_trace(m) != lefschetz_count(n, q, m))
                    problems.push_back("Lefschetz trace disagrees with the point-count formula at m=" + std::to_string(m));
        } catch (const VerificationError& e) {
            problems.push_back(e.what());
        }
        all_ok = all_ok && problems.empty();
        if (cfg.format == "json") {
            for (const auto& t : tables)
                docs.push_back(table_to_json(t));
        } else {
            for (const auto& t : tables)
                std::cout << table_to_text(t);
        }
        for (const auto& p : problems)
            std::cerr << "check failed (n=" << n << ", q=" << q << "): " << p << '\n';
    }
    if (cfg.format == "json")
        std::cout << docs.dump(2) << '\n';
    return all_ok ? exit_ok : exit_failure;
}

int cmd_dims(const RunConfig& cfg)
{
    check_n(cfg.n);
    nlohmann::json docs = nlohmann::json::array();
    for (int q : cfg.qs) {
        check_q(q);
        const int n = cfg.n;
        if (cfg.format != "json")
            std::printf("n=%d q=%d\n  %-15s %-13s %-10s %s\n", n, q, "I", "composition", "[G:P_I]", "dim v_I");
        for (int size = 0; size <= n; ++size)
            for (const auto& I : subsets_of_size(n, size, ParabolicType::empty(n), false)) {
                const auto index = parabolic_index(I, q);
                const auto v = steinberg_dim(I, q);
                if (cfg.format == "json") {
                    docs.push_back({{"n", n}, {"q", q}, {"I", I.subset_string()}, {"composition", I.composition_string()},
                                    {"parabolic_index", index.get_str()}, {"steinberg_dim", v.get_str()}});
                } else {
                    const std::string name = I.is_full() ? "Delta" : I.subset_string();
                    std::printf("  %-15s %-13s %-10s %s\n", name.c_str(), I.composition_string().c_str(), index.get_str().c_str(),
                                v.get_str().c_str());
                }
            }
    }
    if (cfg.format == "json")
        std::cout << docs.dump(2) << '\n';
    return exit_ok;
}

int cmd_pages(const RunConfig& cfg)
{
    check_n(cfg.n);
    nlohmann::json docs = nlohmann::json::array();
    bool ok = true;
    for (int q : cfg.qs) {
        check_q(q);
        check_flag_guard(cfg.n, q);
        const FlagRegistry registry(cfg.n, q, cache_path(cfg));
        const auto e1 = e1_page(cfg.n, q);
        nlohmann::json doc{{"n", cfg.n}, {"q", q}, {"E1", page_to_json(e1)}};
        try {
            doc["E2"] = page_to_json(e2_page(registry, cfg.jobs));
        } catch (const VerificationError& e) {
            ok = false;
            std::cerr << "check failed: " << e.what() << '\n';
        }
        docs.push_back(std::move(doc));
    }
    if (cfg.format == "json") {
        std::cout << docs.dump(2) << '\n';
    } else {
        for (const auto& doc : docs) {
            std::cout << "n=" << doc["n"] << " q=" << doc["q"] << '\n';
            for (const char* key : {"E1", "E2"}) {
                if (!doc.contains(key))
                    continue;
                for (const auto& e : doc[key])
                    std::cout << "  " << key << '^' << '{' << e["r"] << ',' << e["s"] << "} = " << e["label"].get<std::string>()
                              << '(' << e["twist"] << ") [dim " << e["dim"] << "]\n";
            }
        }
    }
    return ok ? exit_ok : exit_failure;
}

int cmd_verify(const RunConfig& cfg)
{
    if (cfg.n_max < 1)
        throw UsageError("--n-max must be at least 1");
    if (cfg.m_max < 1)
        throw UsageError("--m-max must be at least 1");
    for (int q : cfg.qs)
        check_q(q);
    const std::vector<std::string> known{"all", "steinberg", "orlik", "e2", "hy", "hc", "duality", "lefschetz", "combinatorics"};
    if (std::find(known.begin(), known.end(), cfg.suite) == known.end())
        throw UsageError("unknown suite '" + cfg.suite + "'");
    auto wants = [&](const char* s) { return cfg.suite == "all" || cfg.suite == s; };

    std::vector<NQ> grid;
    std::vector<NQM> orlik_grid, lefschetz_grid;
    std::vector<std::string> skipped;
    for (int q : cfg.qs)
        for (int n = 1; n <= cfg.n_max; ++n) {
            if (parabolic_index(ParabolicType::empty(n), q) > flag_guard) {
                skipped.push_back("n=" + std::to_string(n) + " q=" + std::to_string(q) + " (flag guard)");
                continue;
            }
            grid.push_back({n, q});
            for (int m = 1; m <= cfg.m_max; ++m) {
                const auto dims = function_complex_term_dims(n, q, m);
                std::size_t total = 0;
                for (auto d : dims)
                    total += d;
                if (total <= function_complex_guard)
                    orlik_grid.push_back({n, q, m});
                else if (wants("orlik"))
                    skipped.push_back("orlik n=" + std::to_string(n) + " q=" + std::to_string(q) + " m=" + std::to_string(m) + " (size guard)");
            }
        }
    for (int q : cfg.qs)
        for (int n = 1; n <= cfg.n_max; ++n)
            for (int m = 1; m <= cfg.m_max; ++m) {
                if (projective_count(n, q, m) > static_cast<unsigned long>(enumeration_guard)) {
                    if (wants("lefschetz"))
                        skipped.push_back("lefschetz n=" + std::to_string(n) + " q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                          " (enumeration guard)");
                    continue;
                }
                lefschetz_grid.push_back({n, q, m});
            }

    RegistryPool pool(cache_path(cfg));
    VerifyOptions opt{cfg.jobs, cfg.seed};
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<SuiteReport> reports;
    if (wants("combinatorics"))
        reports.push_back(verify_combinatorics(std::min(cfg.n_max + 1, 5), cfg.qs, cfg.samples, pool, opt));
    if (wants("steinberg"))
        reports.push_back(verify_steinberg(grid, pool, opt));
    if (wants("orlik"))
        reports.push_back(verify_orlik(orlik_grid, pool, opt));
    if (wants("e2"))
        reports.push_back(verify_e2(grid, pool, opt));
    if (wants("hy"))
        reports.push_back(verify_h_of_y(grid, pool, opt));
    if (wants("hc"))
        reports.push_back(verify_hc_of_x(grid, pool, opt));
    if (wants("duality"))
        reports.push_back(verify_duality(grid, pool, opt));
    if (wants("lefschetz"))
        reports.push_back(verify_lefschetz(lefschetz_grid, opt));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool ok = true;
    for (const auto& r : reports)
        ok = ok && r.passed();
    if (cfg.format == "json") {
        nlohmann::json doc{{"passed", ok}, {"seconds", seconds}, {"skipped", skipped}, {"suites", nlohmann::json::array()}};
        for (const auto& r : reports) {
            nlohmann::json checks = nlohmann::json::array();
            for (const auto& c : r.checks)
                checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            doc["suites"].push_back({{"suite", r.suite}, {"passed", r.passed()}, {"seconds", r.seconds}, {"checks", checks}});
        }
        std::cout << doc.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            for (const auto& c : r.checks)
                std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
            std::cout << "-- suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks, "
                      << r.failures() << " failed, " << r.seconds << " s)\n";
        }
        for (const auto& s : skipped)
            std::cout << "skipped " << s << '\n';
        std::cout << (ok ? "PASS" : "FAIL") << " in " << seconds << " s\n";
    }
    return ok ? exit_ok : exit_failure;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations for the rigid cohomology of Drinfeld's upper half space over F_q"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached flag enumerations")->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber)->capture_default_str();

    auto* coh = app.add_subcommand("cohomology", "Print H(Y), Hc(X) and H(X) with internal cross-checks");
    coh->add_option("--n", cfg.n, "Projective dimension n")->required();
    coh->add_option("--q", cfg.qs, "Field size(s), comma separated")->delimiter(',')->capture_default_str();
    coh->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    auto* ver = app.add_subcommand("verify", "Run the verification battery");
    ver->add_option("--suite", cfg.suite, "all|steinberg|orlik|e2|hy|hc|duality|lefschetz|combinatorics")->capture_default_str();
    ver->add_option("--n-max", cfg.n_max)->capture_default_str();
    ver->add_option("--q", cfg.qs, "Field size(s), comma separated")->delimiter(',')->capture_default_str();
    ver->add_option("--m-max", cfg.m_max)->capture_default_str();
    ver->add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
    ver->add_option("--samples", cfg.samples, "Random nested triples for pullback checks")->capture_default_str();
    ver->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    auto* dims = app.add_subcommand("dims", "Tabulate [G:P_I] and dim v_I");
    dims->add_option("--n", cfg.n)->required();
    dims->add_option("--q", cfg.qs)->delimiter(',')->capture_default_str();
    dims->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    auto* pages = app.add_subcommand("pages", "Print the E1 and E2 pages");
    pages->add_option("--n", cfg.n)->required();
    pages->add_option("--q", cfg.qs)->delimiter(',')->capture_default_str();
    pages->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (coh->parsed())
            return cmd_cohomology(cfg);
        if (ver->parsed())
            return cmd_verify(cfg);
        if (dims->parsed())
            return cmd_dims(cfg);
        if (pages->parsed())
            return cmd_pages(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
