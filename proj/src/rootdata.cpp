#include "drinfeld/rootdata.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace drinfeld {

ParabolicType::ParabolicType(int n, std::uint32_t mask) : n_(n), mask_(mask)
{
    if (n < 0 || n > 31)
        throw std::invalid_argument("ParabolicType: rank parameter out of range");
    if ((mask & ~full_mask(n)) != 0)
        throw std::invalid_argument("ParabolicType: mask has bits outside {0,...,n-1}");
}

ParabolicType ParabolicType::full(int n) { return {n, full_mask(n)}; }

ParabolicType ParabolicType::prefix(int n, int j)
{
    if (j < 0 || j > n)
        throw std::invalid_argument("ParabolicType::prefix: j must lie in {0,...,n}");
    return {n, full_mask(j)};
}

ParabolicType ParabolicType::from_members(int n, const std::vector<int>& members)
{
    std::uint32_t mask = 0;
    for (int a : members) {
        if (a < 0 || a >= n)
            throw std::invalid_argument("ParabolicType::from_members: root index out of range");
        mask |= 1u << a;
    }
    return {n, mask};
}

ParabolicType ParabolicType::from_composition(const std::vector<int>& parts)
{
    if (parts.empty())
        throw std::invalid_argument("from_composition: empty composition");
    int total = 0;
    for (int p : parts) {
        if (p <= 0)
            throw std::invalid_argument("from_composition: parts must be positive");
        total += p;
    }
    const int n = total - 1;
    // Block k covers coordinates [s, s + i_k); it contributes a_s, ..., a_{s+i_k-2}.
    std::uint32_t mask = 0;
    int start = 0;
    for (int p : parts) {
        for (int a = start; a <= start + p - 2; ++a)
            mask |= 1u << a;
        start += p;
    }
    return {n, mask};
}

int ParabolicType::size() const { return std::popcount(mask_); }

bool ParabolicType::is_subset_of(const ParabolicType& other) const
{
    return n_ == other.n_ && (mask_ & ~other.mask_) == 0;
}

std::vector<int> ParabolicType::members() const
{
    std::vector<int> out;
    for (int a = 0; a < n_; ++a)
        if (contains(a))
            out.push_back(a);
    return out;
}

std::vector<int> ParabolicType::missing() const
{
    std::vector<int> out;
    for (int a = 0; a < n_; ++a)
        if (!contains(a))
            out.push_back(a);
    return out;
}

ParabolicType ParabolicType::with(int root) const
{
    if (root < 0 || root >= n_)
        throw std::invalid_argument("ParabolicType::with: root out of range");
    return {n_, mask_ | (1u << root)};
}

ParabolicType ParabolicType::without(int root) const
{
    if (root < 0 || root >= n_)
        throw std::invalid_argument("ParabolicType::without: root out of range");
    return {n_, mask_ & ~(1u << root)};
}

std::vector<int> ParabolicType::composition() const
{
    std::vector<int> parts;
    int prev = 0;
    for (int d : flag_dims()) {
        parts.push_back(d - prev);
        prev = d;
    }
    parts.push_back(n_ + 1 - prev);
    return parts;
}

std::vector<int> ParabolicType::flag_dims() const
{
    // a_j missing from I <=> a block boundary sits after coordinate j.
    std::vector<int> dims;
    for (int a = 0; a < n_; ++a)
        if (!contains(a))
            dims.push_back(a + 1);
    return dims;
}

int ParabolicType::i_of() const
{
    for (int a = 0; a < n_; ++a)
        if (!contains(a))
            return a;
    throw std::invalid_argument("i(I) is undefined for I = Delta");
}

std::string ParabolicType::subset_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int a : members()) {
        if (!first)
            os << ',';
        os << 'a' << a;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string ParabolicType::composition_string() const
{
    std::ostringstream os;
    os << '(';
    const auto parts = composition();
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k)
            os << ',';
        os << parts[k];
    }
    os << ')';
    return os.str();
}

std::strong_ordering operator<=>(const ParabolicType& a, const ParabolicType& b)
{
    if (auto c = a.n_ <=> b.n_; c != 0)
        return c;
    if (auto c = a.size() <=> b.size(); c != 0)
        return c;
    const auto ma = a.members();
    const auto mb = b.members();
    return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::vector<ParabolicType> subsets_of_size(int n, int c, const ParabolicType& containing, bool proper)
{
    if (containing.n() != n)
        throw std::invalid_argument("subsets_of_size: rank mismatch");
    std::vector<ParabolicType> out;
    if (c < 0 || c > n)
        return out;
    const std::uint32_t base = containing.mask();
    for (std::uint32_t mask = 0; mask <= ParabolicType::full_mask(n); ++mask) {
        if (std::popcount(mask) != c || (mask & base) != base)
            continue;
        if (proper && mask == ParabolicType::full_mask(n))
            continue;
        out.emplace_back(n, mask);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ParabolicType> supersets_of(const ParabolicType& containing)
{
    std::vector<ParabolicType> out;
    for (int c = containing.size(); c <= containing.n(); ++c) {
        auto level = subsets_of_size(containing.n(), c, containing, false);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

int covering_root(const ParabolicType& smaller, const ParabolicType& larger)
{
    if (!smaller.is_subset_of(larger))
        return -1;
    const std::uint32_t diff = larger.mask() & ~smaller.mask();
    if (std::popcount(diff) != 1)
        return -1;
    return std::countr_zero(diff);
}

int incidence_sign(const ParabolicType& smaller, const ParabolicType& larger)
{
    const int i = covering_root(smaller, larger);
    if (i < 0)
        throw std::invalid_argument("incidence_sign: larger does not cover smaller");
    int below = 0;
    for (int j = 0; j < i; ++j)
        if (!smaller.contains(j))
            ++below;
    return (below % 2 == 0) ? 1 : -1;
}

}  // namespace drinfeld
