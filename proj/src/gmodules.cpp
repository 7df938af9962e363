#include "drinfeld/gmodules.hpp"

#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

PermModule perm_module(const FlagRegistry& registry, const ParabolicType& I)
{
    return PermModule{I, &registry.flags(I)};
}

ExactMatrix pullback_matrix(const FlagRegistry& registry, const ParabolicType& I, const ParabolicType& J)
{
    if (!I.is_subset_of(J))
        throw std::invalid_argument("pullback_matrix: " + I.subset_string() + " is not contained in " + J.subset_string());
    const auto& source = registry.flags(I);
    const auto& target = registry.flags(J);
    std::vector<Triplet> t;
    t.reserve(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        const std::size_t j = registry.index_of(forget(source[i], J));
        t.push_back({static_cast<int>(i), static_cast<int>(j), Rational(1)});
    }
    return ExactMatrix::from_triplets(static_cast<int>(source.size()), static_cast<int>(target.size()), std::move(t));
}

ExactMatrix pullback_matrix(const ParabolicType& I, const ParabolicType& J, int q)
{
    const FlagRegistry registry(I.n(), q);
    return pullback_matrix(registry, I, J);
}

PermComplex build_perm_complex(const FlagRegistry& registry, std::vector<std::vector<ParabolicType>> levels)
{
    const int n = registry.n();
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (levels[k].empty())
            throw std::invalid_argument("build_perm_complex: empty level");
        const int size = levels[k].front().size();
        if (k > 0 && size != levels[k - 1].front().size() - 1)
            throw std::invalid_argument("build_perm_complex: level sizes must drop by one");
        for (const auto& I : levels[k])
            if (I.n() != n || I.size() != size)
                throw std::invalid_argument("build_perm_complex: mixed parabolic types within a level");
    }

    std::vector<std::size_t> terms;
    std::vector<std::vector<std::size_t>> offsets;
    for (const auto& level : levels) {
        std::size_t dim = 0;
        std::vector<std::size_t> off;
        for (const auto& I : level) {
            off.push_back(dim);
            dim += registry.flags(I).size();
        }
        terms.push_back(dim);
        offsets.push_back(std::move(off));
    }

    std::vector<ExactMatrix> diffs;
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
        std::vector<Triplet> t;
        const auto& upper = levels[k];
        const auto& lower = levels[k + 1];
        for (std::size_t a = 0; a < lower.size(); ++a) {
            for (std::size_t b = 0; b < upper.size(); ++b) {
                if (covering_root(lower[a], upper[b]) < 0)
                    continue;
                const int sign = incidence_sign(lower[a], upper[b]);
                const auto block = pullback_matrix(registry, lower[a], upper[b]);
                for (int r = 0; r < block.rows(); ++r)
                    for (const auto& e : block.row(r))
                        t.push_back({static_cast<int>(offsets[k + 1][a]) + r, static_cast<int>(offsets[k][b]) + e.col, e.value * sign});
            }
        }
        diffs.push_back(ExactMatrix::from_triplets(static_cast<int>(terms[k + 1]), static_cast<int>(terms[k]), std::move(t)));
    }
    return PermComplex{std::move(levels), ChainComplex(std::move(terms), std::move(diffs))};
}

SteinbergData steinberg_resolution(const FlagRegistry& registry, const ParabolicType& J, int parallelism)
{
    if (!J.is_proper())
        throw std::invalid_argument("steinberg_resolution: J must be a proper subset of Delta");
    const int n = J.n();
    std::vector<std::vector<ParabolicType>> levels;
    // Level c collects J <= I <= Delta with #(Delta \ I) = c.
    for (int c = 0; c <= n - J.size(); ++c)
        levels.push_back(subsets_of_size(n, n - c, J, false));

    SteinbergData out{J, build_perm_complex(registry, std::move(levels)), {}, 0};
    const int last = static_cast<int>(out.resolution.complex.length()) - 1;
    const auto report = is_exact_except(out.resolution.complex, {last}, parallelism);
    out.homology = report.homology;
    if (!report.exact) {
        std::ostringstream msg;
        msg << "steinberg_resolution(" << J.subset_string() << ", q=" << registry.q() << "): not exact at positions";
        for (int p : report.failing_positions)
            msg << ' ' << p << " (dim " << report.homology[static_cast<std::size_t>(p)] << ')';
        throw VerificationError(msg.str());
    }
    out.dim_v = report.allowed_dims.at(last);
    return out;
}

SteinbergData steinberg_resolution(const ParabolicType& J, int q)
{
    const FlagRegistry registry(J.n(), q);
    return steinberg_resolution(registry, J);
}

BigInt steinberg_dim(const ParabolicType& J, const BigInt& q)
{
    BigInt total = 0;
    for (const auto& I : supersets_of(J)) {
        const int sign = ((I.size() - J.size()) % 2 == 0) ? 1 : -1;
        total += sign * parabolic_index(I, q);
    }
    return total;
}

std::size_t steinberg_dim_by_quotient(const FlagRegistry& registry, const ParabolicType& J)
{
    const auto& basis = registry.flags(J);
    // Columns of the stacked matrix: functions on each G/P_I, I strictly above J.
    std::vector<Triplet> t;
    int col_offset = 0;
    for (const auto& I : supersets_of(J)) {
        if (I == J)
            continue;
        const auto block = pullback_matrix(registry, J, I);
        for (int r = 0; r < block.rows(); ++r)
            for (const auto& e : block.row(r))
                t.push_back({r, col_offset + e.col, e.value});
        col_offset += block.cols();
    }
    const auto stacked = ExactMatrix::from_triplets(static_cast<int>(basis.size()), col_offset, std::move(t));
    return basis.size() - rank(stacked);
}

}  // namespace drinfeld
