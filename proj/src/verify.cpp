#include "drinfeld/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "drinfeld/cohomology.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/gmodules.hpp"
#include "drinfeld/orlik.hpp"
#include "drinfeld/qarith.hpp"

namespace drinfeld {

bool SuiteReport::passed() const
{
    return failures() == 0;
}

std::size_t SuiteReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

RegistryPool::RegistryPool(std::optional<std::filesystem::path> cache_dir) : cache_dir_(std::move(cache_dir)) {}

const FlagRegistry& RegistryPool::get(int n, int q)
{
    std::lock_guard lock(mutex_);
    auto& slot = registries_[{n, q}];
    if (!slot)
        slot = std::make_unique<FlagRegistry>(n, q, cache_dir_);
    return *slot;
}

std::vector<CheckResult> run_jobs(const std::vector<std::function<CheckResult()>>& jobs, int parallelism)
{
    std::vector<CheckResult> results(jobs.size());
    auto run_one = [&](std::size_t k) {
        try {
            results[k] = jobs[k]();
        } catch (const std::exception& e) {
            results[k] = CheckResult{"job " + std::to_string(k), false, std::string("exception: ") + e.what()};
        }
    };
    unsigned workers = parallelism > 0 ? static_cast<unsigned>(parallelism) : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs.size()));
    if (workers <= 1) {
        for (std::size_t k = 0; k < jobs.size(); ++k)
            run_one(k);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
        threads.emplace_back([&] {
            for (std::size_t k = next++; k < jobs.size(); k = next++)
                run_one(k);
        });
    for (auto& t : threads)
        t.join();
    return results;
}

namespace {

std::string nq_name(int n, int q)
{
    return "n=" + std::to_string(n) + " q=" + std::to_string(q);
}

SuiteReport timed(const std::string& suite, const std::vector<std::function<CheckResult()>>& jobs, int parallelism)
{
    const auto t0 = std::chrono::steady_clock::now();
    SuiteReport report{suite, run_jobs(jobs, parallelism), 0.0};
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string join(const std::vector<std::string>& lines)
{
    std::string out;
    for (const auto& l : lines)
        out += (out.empty() ? "" : "; ") + l;
    return out;
}

// Cases already run in parallel; each case computes its ranks serially.
int inner_parallelism(const VerifyOptions&)
{
    return 1;
}

}  // namespace

SuiteReport verify_steinberg(const std::vector<NQ>& cases, RegistryPool& pool, const VerifyOptions& opt)
{
    std::vector<std::function<CheckResult()>> jobs;
    for (auto [n, q] : cases)
        for (int size = 0; size < n; ++size)
            for (const auto& J : subsets_of_size(n, size, ParabolicType::empty(n), true))
                jobs.push_back([n, q, J, &pool, &opt] {
                    CheckResult r{"steinberg " + nq_name(n, q) + " J=" + J.subset_string(), false, ""};
                    try {
                        const auto data = steinberg_resolution(pool.get(n, q), J, inner_parallelism(opt));
                        const BigInt expected = steinberg_dim(J, q);
                        r.passed = expected == static_cast<unsigned long>(data.dim_v);
                        r.detail = "dim v = " + std::to_string(data.dim_v) + " (closed form " + expected.get_str() + ")";
                    } catch (const VerificationError& e) {
                        r.detail = e.what();
                    }
                    return r;
                });
    return timed("steinberg", jobs, opt.parallelism);
}

SuiteReport verify_orlik(const std::vector<NQM>& cases, RegistryPool& pool, const VerifyOptions& opt)
{
    std::vector<std::function<CheckResult()>> jobs;
    for (auto [n, q, m] : cases)
        jobs.push_back([n, q, m, &pool, &opt] {
            CheckResult r{"orlik " + nq_name(n, q) + " m=" + std::to_string(m), false, ""};
            const auto fc = build_function_complex(pool.get(n, q), m);
            const auto h = homology_dims(fc.complex, inner_parallelism(opt));
            const bool acyclic = std::all_of(h.begin(), h.end(), [](std::size_t x) { return x == 0; });
            const bool sizes = fc.complex.terms() == function_complex_term_dims(n, q, m);
            std::ostringstream os;
            os << "terms";
            for (auto t : fc.complex.terms())
                os << ' ' << t;
            os << " homology";
            for (auto x : h)
                os << ' ' << x;
            if (!sizes)
                os << " (term sizes disagree with point counts)";
            r.passed = acyclic && sizes;
            r.detail = os.str();
            return r;
        });
    return timed("orlik", jobs, opt.parallelism);
}

SuiteReport verify_e2(const std::vector<NQ>& cases, RegistryPool& pool, const VerifyOptions& opt)
{
    std::vector<std::function<CheckResult()>> jobs;
    for (auto [n, q] : cases)
        jobs.push_back([n, q, &pool, &opt] {
            CheckResult r{"e2 " + nq_name(n, q), false, ""};
            try {
                const auto page = e2_page(pool.get(n, q), inner_parallelism(opt));
                std::ostringstream os;
                for (const auto& [pos, module] : page.entries)
                    if (!module.empty())
                        os << '(' << pos.first << ',' << pos.second << "):" << module.dim() << ' ';
                r.passed = true;
                r.detail = os.str();
            } catch (const VerificationError& e) {
                r.detail = e.what();
            }
            return r;
        });
    return timed("e2", jobs, opt.parallelism);
}

SuiteReport verify_h_of_y(const std::vector<NQ>& cases, RegistryPool& pool, const VerifyOptions& opt)
{
    std::vector<std::function<CheckResult()>> jobs;
    for (auto [n, q] : cases)
        jobs.push_back([n, q, &pool, &opt] {
            CheckResult r{"H(Y) " + nq_name(n, q), false, ""};
            try {
                const auto diff = table_diff(expected_h_of_y(n, q), h_of_y(pool.get(n, q), inner_parallelism(opt)));
                r.passed = diff.empty();
                r.detail = diff.empty() ? "matches closed form" : join(diff);
            } catch (const VerificationError& e) {
                r.detail = e.what();
            }
            return r;
        });
    return timed("hy", jobs, opt.parallelism);
}

SuiteReport verify_hc_of_x(const std::vector<NQ>& cases, RegistryPool& pool, const VerifyOptions& opt)
{
    std::vector<std::function<CheckResult()>> jobs;
    for (auto [n, q] : cases)
        jobs.push_back([n, q, &pool, &opt] {
            CheckResult r{"Hc(X) " + nq_name(n, q), false, ""};
            try {
                const auto hc = hc_of_x(pool.get(n, q), inner_parallelism(opt));
                const auto diff = table_diff(expected_hc_of_x(n, q), hc);
                r.passed = diff.empty();
                std::ostringstream os;
                os << "dims";
                for (int d = n; d <= 2 * n; ++d)
                    os << ' ' << hc.at(d).dim();
                os << " in degrees " << n << ".." << 2 * n;
                r.detail = diff.empty() ? os.str() : join(diff);
            } catch (const VerificationError& e) {
                r.detail = e.what();
            }
            return r;
        });
    return timed("hc", jobs, opt.parallelism);
}

SuiteReport verify_duality(const std::vector<NQ>& cases, RegistryPool& pool, const VerifyOptions& opt)
{
    std::vector<std::function<CheckResult()>> jobs;
    for (auto [n, q] : cases)
        jobs.push_back([n, q, &pool, &opt] {
            CheckResult r{"duality " + nq_name(n, q), false, ""};
            try {
                const auto hc = hc_of_x(pool.get(n, q), inner_parallelism(opt));
                const auto hx = dualize(hc);
                std::vector<std::string> problems;
                for (int j = 0; j <= 2 * n; ++j) {
                    const auto& a = hx.at(j).summands();
                    const auto& b = hc.at(2 * n - j).summands();
                    if (hx.at(j).dim() != hc.at(2 * n - j).dim())
                        problems.push_back("dim mismatch in degree " + std::to_string(j));
                    if (a.size() != b.size()) {
                        problems.push_back("summand count mismatch in degree " + std::to_string(j));
                        continue;
                    }
                    for (const auto& s : a) {
                        auto it = std::find_if(b.begin(), b.end(), [&](const Summand& t) {
                            return t.label.dual() == s.label && t.dim == s.dim && t.twist + s.twist == -n;
                        });
                        if (it == b.end())
                            problems.push_back("no dual partner for " + s.label.to_string() + " in degree " + std::to_string(j));
                        if (s.label.kind == ModuleKind::Steinberg)
                            problems.push_back("undualized label in degree " + std::to_string(j));
                    }
                }
                for (auto& line : table_diff(expected_h_of_x(n, q), hx))
                    problems.push_back(std::move(line));
                r.passed = problems.empty();
                r.detail = problems.empty() ? "dims, labels and twist sums agree" : join(problems);
            } catch (const VerificationError& e) {
                r.detail = e.what();
            }
            return r;
        });
    return timed("duality", jobs, opt.parallelism);
}

SuiteReport verify_lefschetz(const std::vector<NQM>& cases, const VerifyOptions& opt)
{
    std::vector<std::function<CheckResult()>> jobs;
    for (auto [n, q, m] : cases)
        jobs.push_back([n, q, m] {
            CheckResult r{"lefschetz " + nq_name(n, q) + " m=" + std::to_string(m), false, ""};
            const BigInt predicted = lefschetz_count(n, q, m);
            const BigInt counted = drinfeld_points(n, q, m);
            r.passed = predicted == counted;
            r.detail = "trace formula " + predicted.get_str() + ", points " + counted.get_str();
            return r;
        });
    return timed("lefschetz", jobs, opt.parallelism);
}

std::size_t count_subspaces_by_spans(int ambient_dim, int d, int q)
{
    std::vector<std::vector<int>> vectors;
    std::vector<int> v(static_cast<std::size_t>(ambient_dim), 0);
    for (;;) {
        int k = 0;
        while (k < ambient_dim && v[static_cast<std::size_t>(k)] == q - 1)
            v[static_cast<std::size_t>(k++)] = 0;
        if (k == ambient_dim)
            break;
        ++v[static_cast<std::size_t>(k)];
        vectors.push_back(v);
    }
    if (d == 0)
        return 1;
    std::set<Subspace> current;
    for (const auto& x : vectors)
        current.insert(Subspace::span(q, ambient_dim, {x}));
    for (int e = 2; e <= d; ++e) {
        std::set<Subspace> next;
        for (const auto& U : current) {
            std::vector<std::vector<int>> basis;
            for (int r = 0; r < U.dim(); ++r)
                basis.push_back(U.row(r));
            for (const auto& x : vectors) {
                if (U.contains_vector(x))
                    continue;
                basis.push_back(x);
                next.insert(Subspace::span(q, ambient_dim, basis));
                basis.pop_back();
            }
        }
        current = std::move(next);
    }
    return current.size();
}

SuiteReport verify_combinatorics(int max_ambient, const std::vector<int>& qs, int samples, RegistryPool& pool,
                                 const VerifyOptions& opt)
{
    std::vector<std::function<CheckResult()>> jobs;
    for (int q : qs)
        for (int N = 1; N <= max_ambient; ++N) {
            jobs.push_back([N, q] {
                CheckResult r{"gauss_binomial N=" + std::to_string(N) + " q=" + std::to_string(q), true, ""};
                std::ostringstream os;
                for (int d = 0; d <= N; ++d) {
                    const auto counted = count_subspaces_by_spans(N, d, q);
                    const BigInt formula = gauss_binomial(N, d, q);
                    os << counted << ' ';
                    if (formula != static_cast<unsigned long>(counted)) {
                        r.passed = false;
                        os << "(formula " << formula.get_str() << ") ";
                    }
                }
                r.detail = os.str();
                return r;
            });
            const int n = N - 1;
            if (n < 1)
                continue;
            jobs.push_back([n, q, &pool] {
                CheckResult r{"parabolic_index n=" + std::to_string(n) + " q=" + std::to_string(q), true, ""};
                const auto& registry = pool.get(n, q);
                std::size_t checked = 0;
                for (int size = 0; size <= n; ++size)
                    for (const auto& I : subsets_of_size(n, size, ParabolicType::empty(n), false)) {
                        const auto count = registry.flags(I).size();
                        if (parabolic_index(I, q) != static_cast<unsigned long>(count)) {
                            r.passed = false;
                            r.detail += I.composition_string() + ": " + std::to_string(count) + " flags; ";
                        }
                        ++checked;
                    }
                if (r.passed)
                    r.detail = std::to_string(checked) + " types agree";
                return r;
            });
        }

    jobs.push_back([samples, &pool, &opt] {
        CheckResult r{"pullback triples (" + std::to_string(samples) + " samples)", true, ""};
        std::mt19937_64 rng(opt.seed);
        std::vector<std::string> problems;
        for (int k = 0; k < samples; ++k) {
            const int n = std::uniform_int_distribution<int>(1, 4)(rng);
            const int q = n == 4 ? 2 : std::uniform_int_distribution<int>(0, 1)(rng) ? 3 : 2;
            // Each root lands in I, J \ I, L \ J or outside L.
            std::uint32_t mi = 0, mj = 0, ml = 0;
            for (int a = 0; a < n; ++a) {
                const int where = std::uniform_int_distribution<int>(0, 3)(rng);
                if (where <= 0)
                    mi |= 1u << a;
                if (where <= 1)
                    mj |= 1u << a;
                if (where <= 2)
                    ml |= 1u << a;
            }
            const ParabolicType I(n, mi), J(n, mj), L(n, ml);
            const auto& registry = pool.get(n, q);
            const auto pij = pullback_matrix(registry, I, J);
            const auto pjl = pullback_matrix(registry, J, L);
            const auto pil = pullback_matrix(registry, I, L);
            const std::string tag = "n=" + std::to_string(n) + " q=" + std::to_string(q) + " " + I.subset_string() + "<=" +
                                    J.subset_string() + "<=" + L.subset_string();
            for (const auto* p : {&pij, &pjl, &pil}) {
                for (int row = 0; row < p->rows(); ++row) {
                    const auto entries = p->row(row);
                    if (entries.size() != 1 || entries[0].value != 1) {
                        problems.push_back(tag + ": row without a single unit entry");
                        break;
                    }
                }
                std::vector<long> colsum(static_cast<std::size_t>(p->cols()), 0);
                for (int row = 0; row < p->rows(); ++row)
                    for (const auto& e : p->row(row))
                        colsum[static_cast<std::size_t>(e.col)] += 1;
                if (!colsum.empty() && std::any_of(colsum.begin(), colsum.end(), [&](long c) { return c != colsum.front(); }))
                    problems.push_back(tag + ": column sums not constant");
                else if (!colsum.empty() && colsum.front() * p->cols() != p->rows())
                    problems.push_back(tag + ": column sum is not the index ratio");
            }
            if (!(pij * pjl == pil))
                problems.push_back(tag + ": composition fails");
        }
        r.passed = problems.empty();
        r.detail = problems.empty() ? "row, column and composition properties hold" : join(problems);
        return r;
    });
    return timed("combinatorics", jobs, opt.parallelism);
}

}  // namespace drinfeld
