#include "drinfeld/flag_registry.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace drinfeld {

using nlohmann::json;

FlagRegistry::FlagRegistry(int n, int q, std::optional<std::filesystem::path> cache_dir)
    : n_(n), q_(q), cache_dir_(std::move(cache_dir))
{
    if (n < 1)
        throw std::invalid_argument("FlagRegistry: need n >= 1");
    if (!is_prime(q))
        throw std::invalid_argument("FlagRegistry: q must be prime");
}

const std::vector<Flag>& FlagRegistry::flags(const ParabolicType& I) const
{
    if (I.n() != n_)
        throw std::invalid_argument("FlagRegistry::flags: rank mismatch");
    std::lock_guard lock(mutex_);
    auto it = by_mask_.find(I.mask());
    if (it != by_mask_.end())
        return *it->second;

    std::optional<std::vector<Flag>> loaded;
    if (cache_dir_) {
        loaded = read_flag_cache(flag_cache_file(*cache_dir_, I, q_), I, q_);
        if (loaded)
            ++cache_hits_;
    }
    if (!loaded) {
        loaded = enumerate_flags(I, q_);
        if (cache_dir_) {
            std::error_code ec;
            std::filesystem::create_directories(*cache_dir_, ec);
            if (!ec)
                write_flag_cache(flag_cache_file(*cache_dir_, I, q_), I, q_, *loaded);
        }
    }
    auto stored = std::make_unique<const std::vector<Flag>>(std::move(*loaded));
    const auto& ref = *stored;
    by_mask_.emplace(I.mask(), std::move(stored));
    return ref;
}

std::size_t FlagRegistry::index_of(const Flag& f) const
{
    const auto& list = flags(f.type);
    auto it = std::lower_bound(list.begin(), list.end(), f);
    if (it == list.end() || !(*it == f))
        throw std::out_of_range("FlagRegistry::index_of: flag not found");
    return static_cast<std::size_t>(it - list.begin());
}

int FlagRegistry::cache_hits() const
{
    std::lock_guard lock(mutex_);
    return cache_hits_;
}

std::filesystem::path flag_cache_file(const std::filesystem::path& dir, const ParabolicType& I, int q)
{
    std::ostringstream name;
    name << "flags_v" << flag_cache_version << "_n" << I.n() << "_q" << q << "_I" << I.mask() << ".json";
    return dir / name.str();
}

void write_flag_cache(const std::filesystem::path& file, const ParabolicType& I, int q, const std::vector<Flag>& flags)
{
    json doc;
    doc["format"] = "drinfeld-flag-cache";
    doc["version"] = flag_cache_version;
    doc["n"] = I.n();
    doc["q"] = q;
    doc["mask"] = I.mask();
    json list = json::array();
    for (const auto& f : flags) {
        json chain = json::array();
        for (const auto& s : f.chain)
            chain.push_back(s.raw_entries());
        list.push_back(std::move(chain));
    }
    doc["flags"] = std::move(list);
    const auto tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            return;
        out << doc.dump();
    }
    std::error_code ec;
    std::filesystem::rename(tmp, file, ec);
}

std::optional<std::vector<Flag>> read_flag_cache(const std::filesystem::path& file, const ParabolicType& I, int q)
{
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    try {
        const json doc = json::parse(in);
        if (doc.at("format") != "drinfeld-flag-cache" || doc.at("version") != flag_cache_version || doc.at("n") != I.n() ||
            doc.at("q") != q || doc.at("mask") != I.mask())
            return std::nullopt;
        const auto dims = I.flag_dims();
        const int ambient = I.n() + 1;
        std::vector<Flag> out;
        for (const auto& chain : doc.at("flags")) {
            if (chain.size() != dims.size())
                return std::nullopt;
            Flag f{I, {}};
            for (std::size_t k = 0; k < dims.size(); ++k) {
                auto entries = chain[k].get<std::vector<std::uint8_t>>();
                f.chain.push_back(Subspace::from_rref(q, ambient, dims[k], std::move(entries)));
                if (k > 0 && !f.chain[k].contains(f.chain[k - 1]))
                    return std::nullopt;
            }
            out.push_back(std::move(f));
        }
        if (!std::is_sorted(out.begin(), out.end()) || std::adjacent_find(out.begin(), out.end()) != out.end())
            return std::nullopt;
        if (BigInt(static_cast<unsigned long>(out.size())) != parabolic_index(I, q))
            return std::nullopt;
        return out;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace drinfeld
