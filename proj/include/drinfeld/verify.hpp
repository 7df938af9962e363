#pragma once

// Verification battery shared by the command line tool and the acceptance
// binary. Every suite runs a list of independent cases, optionally on a
// worker pool, and reports one line per case.

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/flag_registry.hpp"

namespace drinfeld {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool passed() const;
    std::size_t failures() const;
};

/// One FlagRegistry per (n, q), shared between suites and threads.
class RegistryPool {
public:
    explicit RegistryPool(std::optional<std::filesystem::path> cache_dir = std::nullopt);
    const FlagRegistry& get(int n, int q);

private:
    std::optional<std::filesystem::path> cache_dir_;
    std::mutex mutex_;
    std::map<std::pair<int, int>, std::unique_ptr<FlagRegistry>> registries_;
};

/// Runs jobs on up to `parallelism` threads (0 = hardware concurrency);
/// results keep the job order.
std::vector<CheckResult> run_jobs(const std::vector<std::function<CheckResult()>>& jobs, int parallelism);

using NQ = std::pair<int, int>;
using NQM = std::array<int, 3>;

struct VerifyOptions {
    int parallelism = 1;
    std::uint64_t seed = 20240601;
};

SuiteReport verify_steinberg(const std::vector<NQ>& cases, RegistryPool& pool, const VerifyOptions& opt);
SuiteReport verify_orlik(const std::vector<NQM>& cases, RegistryPool& pool, const VerifyOptions& opt);
SuiteReport verify_e2(const std::vector<NQ>& cases, RegistryPool& pool, const VerifyOptions& opt);
SuiteReport verify_h_of_y(const std::vector<NQ>& cases, RegistryPool& pool, const VerifyOptions& opt);
SuiteReport verify_hc_of_x(const std::vector<NQ>& cases, RegistryPool& pool, const VerifyOptions& opt);
SuiteReport verify_duality(const std::vector<NQ>& cases, RegistryPool& pool, const VerifyOptions& opt);
SuiteReport verify_lefschetz(const std::vector<NQM>& cases, const VerifyOptions& opt);

/// Gaussian binomials and parabolic indices against subspace and flag
/// enumeration for ambient dimension <= max_ambient, plus pullback matrix
/// properties on `samples` random nested triples I <= J <= L.
SuiteReport verify_combinatorics(int max_ambient, const std::vector<int>& qs, int samples, RegistryPool& pool,
                                 const VerifyOptions& opt);

/// Subspaces of F_q^N of dimension d, grown by spans from dimension d-1.
/// Independent of the RREF enumerator.
std::size_t count_subspaces_by_spans(int ambient_dim, int d, int q);

}  // namespace drinfeld
