// Acceptance run: one PASS/FAIL line per criterion, single threaded.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "drinfeld/cohomology.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/gmodules.hpp"
#include "drinfeld/verify.hpp"

using namespace drinfeld;

namespace {

struct Outcome {
    bool passed = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            passed = false;
            notes.push_back(what);
        }
    }
    void absorb(const SuiteReport& r)
    {
        for (const auto& c : r.checks)
            require(c.passed, c.name + ": " + c.detail);
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.passed = false;
        out.notes.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (seconds >= budget_seconds)
        out.require(false, "runtime " + std::to_string(seconds) + " s exceeds budget " + std::to_string(budget_seconds) + " s");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", seconds, budget_seconds);
    std::cout << (out.passed ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << title << " (" << timing << ")\n";
    for (const auto& n : out.notes)
        std::cout << "         " << n << '\n';
    if (!out.passed)
        ++failures;
}

std::vector<NQ> small_grid()
{
    std::vector<NQ> g;
    for (int q : {2, 3})
        for (int n = 1; n <= 3; ++n)
            g.push_back({n, q});
    return g;
}

}  // namespace

int main()
{
    RegistryPool pool;
    const VerifyOptions opt{1, 20240601};
    const auto grid = small_grid();

    criterion(1, "Steinberg resolutions exact except at the augmentation", 60, [&] {
        Outcome o;
        o.absorb(verify_steinberg(grid, pool, opt));
        for (auto [n, q, expected] : {std::array{2, 2, 8}, {3, 2, 64}, {2, 3, 27}}) {
            const auto data = steinberg_resolution(pool.get(n, q), ParabolicType::empty(n));
            o.require(data.dim_v == static_cast<std::size_t>(expected),
                      "dim v_B for n=" + std::to_string(n) + " q=" + std::to_string(q) + " is " + std::to_string(data.dim_v));
        }
        o.require(pool.get(3, 2).flags(ParabolicType::empty(3)).size() == 315, "|G/B| for n=3 q=2");
        return o;
    });

    criterion(2, "function complexes on Y(F_{q^m}) are acyclic", 120, [&] {
        Outcome o;
        o.absorb(verify_orlik({{1, 2, 1}, {1, 2, 2}, {2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {3, 2, 1}}, pool, opt));
        return o;
    });

    criterion(3, "E2 page matches the predicted pattern", 60, [&] {
        Outcome o;
        o.absorb(verify_e2(grid, pool, opt));
        const auto page = e2_page(pool.get(2, 2));
        std::map<std::pair<int, int>, std::int64_t> nonzero;
        for (const auto& [pos, module] : page.entries)
            if (!module.empty())
                nonzero[pos] = module.dim();
        o.require(nonzero == std::map<std::pair<int, int>, std::int64_t>{{{1, 0}, 8}, {{0, 0}, 1}, {{0, 2}, 7}},
                  "E2 for n=2 q=2 is not {(1,0):8, (0,0):1, (0,2):7}");
        return o;
    });

    criterion(4, "H*(Y) equals the closed-form table including twists", 60, [&] {
        Outcome o;
        o.absorb(verify_h_of_y(grid, pool, opt));
        return o;
    });

    criterion(5, "H*_c(X) from the long exact sequence", 60, [&] {
        Outcome o;
        o.absorb(verify_hc_of_x(grid, pool, opt));
        const auto hc2 = hc_of_x(pool.get(2, 2));
        o.require(hc2.at(2).dim() == 8 && hc2.at(3).dim() == 6 && hc2.at(4).dim() == 1, "n=2 q=2 dims are not (8,6,1) in degrees 2,3,4");
        o.require(hc2.at(2).twists() == std::vector<int>{0} && hc2.at(3).twists() == std::vector<int>{-1} &&
                      hc2.at(4).twists() == std::vector<int>{-2},
                  "n=2 q=2 twists are not 0,-1,-2");
        o.require(hc_of_x(pool.get(3, 2)).at(3).dim() == 64, "n=3 q=2 degree 3 is not 64-dimensional");
        return o;
    });

    criterion(6, "duality between H*(X) and H*_c(X)", 60, [&] {
        Outcome o;
        o.absorb(verify_duality(grid, pool, opt));
        return o;
    });

    criterion(7, "Lefschetz count equals brute-force point count", 180, [&] {
        Outcome o;
        std::vector<NQM> cases;
        for (int q : {2, 3, 5})
            for (int m = 1; m <= 4; ++m)
                cases.push_back({1, q, m});
        for (int q : {2, 3})
            for (int m = 1; m <= 3; ++m)
                cases.push_back({2, q, m});
        for (int m = 1; m <= 2; ++m)
            cases.push_back({3, 2, m});
        o.absorb(verify_lefschetz(cases, opt));
        o.require(lefschetz_count(2, 2, 3) == 24 && drinfeld_points(2, 2, 3) == 24, "(n,q,m)=(2,2,3) does not give 24 on both sides");
        return o;
    });

    criterion(8, "combinatorial oracles and pullback matrix properties", 120, [&] {
        Outcome o;
        o.absorb(verify_combinatorics(5, {2, 3}, 200, pool, opt));
        return o;
    });

    std::cout << (failures == 0 ? "all 8 criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
