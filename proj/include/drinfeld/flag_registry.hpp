#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "drinfeld/ffgeom.hpp"

namespace drinfeld {

/// Lazily enumerated flag sets G/P_I for a fixed (n, q), shared by every
/// builder that needs coset bases. Safe to use from several threads.
///
/// With a cache directory, flag lists are read from and written to
/// versioned JSON files keyed by (n, q, I). A missing, stale or corrupt
/// file is ignored and regenerated, so the cache never changes results.
class FlagRegistry {
public:
    FlagRegistry(int n, int q, std::optional<std::filesystem::path> cache_dir = std::nullopt);

    int n() const { return n_; }
    int q() const { return q_; }

    const std::vector<Flag>& flags(const ParabolicType& I) const;
    /// Position of f in flags(f.type); throws std::out_of_range if absent.
    std::size_t index_of(const Flag& f) const;

    /// Number of flag lists served from the disk cache so far.
    int cache_hits() const;

private:
    int n_;
    int q_;
    std::optional<std::filesystem::path> cache_dir_;
    mutable std::mutex mutex_;
    mutable std::map<std::uint32_t, std::unique_ptr<const std::vector<Flag>>> by_mask_;
    mutable int cache_hits_ = 0;
};

inline constexpr int flag_cache_version = 1;

std::filesystem::path flag_cache_file(const std::filesystem::path& dir, const ParabolicType& I, int q);
void write_flag_cache(const std::filesystem::path& file, const ParabolicType& I, int q, const std::vector<Flag>& flags);
/// Returns nullopt when the file is absent, unreadable or fails validation.
std::optional<std::vector<Flag>> read_flag_cache(const std::filesystem::path& file, const ParabolicType& I, int q);

}  // namespace drinfeld
