#include "drinfeld/orlik.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

std::size_t point_index(const std::vector<ProjPoint>& sorted, const ProjPoint& x)
{
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    if (it == sorted.end() || !(*it == x))
        throw VerificationError("function complex: summand point does not lie on Y");
    return static_cast<std::size_t>(it - sorted.begin());
}

std::vector<ParabolicType> level_types(int n, int k)
{
    // Term k of the function complex is indexed by proper I with #I = n - k.
    return subsets_of_size(n, n - k, ParabolicType::empty(n), true);
}

}  // namespace

std::vector<std::size_t> function_complex_term_dims(int n, int q, int m)
{
    std::vector<std::size_t> dims;
    const BigInt total = projective_count(n, q, m) - drinfeld_points(n, q, m);
    dims.push_back(total.get_ui());
    for (int k = 1; k <= n; ++k) {
        BigInt d = 0;
        for (const auto& I : level_types(n, k))
            d += parabolic_index(I, q) * projective_count(I.i_of(), q, m);
        dims.push_back(d.get_ui());
    }
    return dims;
}

FunctionComplex build_function_complex(const FlagRegistry& registry, int m)
{
    const int n = registry.n();
    const int q = registry.q();
    {
        // Size guard from closed-form counts before enumerating anything.
        BigInt total = projective_count(n, q, m);
        for (int k = 1; k <= n; ++k)
            for (const auto& I : level_types(n, k))
                total += parabolic_index(I, q) * projective_count(I.i_of(), q, m);
        if (total > static_cast<unsigned long>(function_complex_guard))
            throw std::length_error("build_function_complex: total dimension exceeds guard");
    }

    const GaloisField field(q, m);
    FunctionComplexSpec spec{n, q, m, {}, {}};
    const auto forms = rational_forms(n, q);
    for (auto& x : enumerate_projective_points(n, field))
        if (on_rational_hyperplane(field, forms, x))
            spec.y_points.push_back(std::move(x));

    std::vector<std::size_t> terms{spec.y_points.size()};
    for (int k = 1; k <= n; ++k) {
        std::vector<FunctionSummand> level;
        std::size_t offset = 0;
        for (const auto& I : level_types(n, k)) {
            const auto& cosets = registry.flags(I);
            for (std::size_t g = 0; g < cosets.size(); ++g) {
                FunctionSummand s{I, g, {}, offset};
                // g.Y_I = P(U) with U the smallest member of the flag.
                for (const auto& x : y_points_of(cosets[g].chain.front(), field))
                    s.points.push_back(point_index(spec.y_points, x));
                std::sort(s.points.begin(), s.points.end());
                offset += s.points.size();
                level.push_back(std::move(s));
            }
        }
        terms.push_back(offset);
        spec.levels.push_back(std::move(level));
    }

    std::vector<bool> covered(spec.y_points.size(), false);
    for (const auto& level : spec.levels)
        for (const auto& s : level)
            for (auto p : s.points)
                covered[p] = true;
    if (std::find(covered.begin(), covered.end(), false) != covered.end())
        throw VerificationError("function complex: the translates g.Y_I do not cover Y");

    std::vector<ExactMatrix> diffs;
    // Augmentation: restriction Fun(Y) -> Fun(g.Y_I) for #I = n-1.
    {
        std::vector<Triplet> t;
        for (const auto& s : spec.levels.front())
            for (std::size_t k = 0; k < s.points.size(); ++k)
                t.push_back({static_cast<int>(s.offset + k), static_cast<int>(s.points[k]), Rational(1)});
        diffs.push_back(ExactMatrix::from_triplets(static_cast<int>(terms[1]), static_cast<int>(terms[0]), std::move(t)));
    }
    for (std::size_t k = 1; k < spec.levels.size(); ++k) {
        const auto& upper = spec.levels[k - 1];
        const auto& lower = spec.levels[k];
        // Locate summand (L, h) of the upper level.
        std::map<std::pair<std::uint32_t, std::size_t>, const FunctionSummand*> upper_index;
        for (const auto& s : upper)
            upper_index[{s.type.mask(), s.coset}] = &s;

        std::vector<Triplet> t;
        for (const auto& s : lower) {
            const Flag& g = registry.flags(s.type)[s.coset];
            for (int root : s.type.missing()) {
                const ParabolicType L = s.type.with(root);
                if (!L.is_proper())
                    continue;
                const int sign = incidence_sign(s.type, L);
                const std::size_t h = registry.index_of(forget(g, L));
                const FunctionSummand& target = *upper_index.at({L.mask(), h});
                for (std::size_t a = 0; a < s.points.size(); ++a) {
                    auto it = std::lower_bound(target.points.begin(), target.points.end(), s.points[a]);
                    if (it == target.points.end() || *it != s.points[a])
                        throw VerificationError("function complex: g.Y_I is not contained in h.Y_J");
                    const auto b = static_cast<std::size_t>(it - target.points.begin());
                    t.push_back({static_cast<int>(s.offset + a), static_cast<int>(target.offset + b), Rational(sign)});
                }
            }
        }
        diffs.push_back(ExactMatrix::from_triplets(static_cast<int>(terms[k + 1]), static_cast<int>(terms[k]), std::move(t)));
    }
    return FunctionComplex{std::move(spec), ChainComplex(std::move(terms), std::move(diffs))};
}

FunctionComplex build_function_complex(int n, int q, int m)
{
    const FlagRegistry registry(n, q);
    return build_function_complex(registry, m);
}

bool check_intersection_closure(int n, int q, int m)
{
    const GaloisField field(q, m);
    std::vector<Subspace> subspaces;
    std::vector<std::vector<ProjPoint>> point_sets;
    for (int d = 1; d <= n; ++d)
        for (auto& U : enumerate_subspaces(n + 1, d, q)) {
            point_sets.push_back(y_points_of(U, field));
            subspaces.push_back(std::move(U));
        }
    auto contains_point = [&](std::size_t u, const ProjPoint& x) {
        return std::binary_search(point_sets[u].begin(), point_sets[u].end(), x);
    };
    const auto forms = rational_forms(n, q);
    for (const auto& x : enumerate_projective_points(n, field)) {
        if (!on_rational_hyperplane(field, forms, x))
            continue;
        std::vector<std::size_t> family;
        for (std::size_t u = 0; u < subspaces.size(); ++u)
            if (contains_point(u, x))
                family.push_back(u);
        if (family.empty())
            return false;
        for (std::size_t a = 0; a < family.size(); ++a)
            for (std::size_t b = a + 1; b < family.size(); ++b) {
                const auto meet = intersect(subspaces[family[a]], subspaces[family[b]]);
                if (meet.is_zero)
                    return false;
                const auto W = Subspace::span(q, n + 1, meet.basis);
                const auto it = std::lower_bound(subspaces.begin(), subspaces.end(), W);
                if (it == subspaces.end() || !(*it == W))
                    return false;
                if (!contains_point(static_cast<std::size_t>(it - subspaces.begin()), x))
                    return false;
            }
    }
    return true;
}

E1Row build_e1_row(const FlagRegistry& registry, int s)
{
    const int n = registry.n();
    if (s < 0 || s > 2 * n - 2 || s % 2 != 0)
        throw std::invalid_argument("build_e1_row: s must be even with 0 <= s <= 2n-2");
    const int j = s / 2;
    const auto base = ParabolicType::prefix(n, j);
    std::vector<std::vector<ParabolicType>> levels;
    for (int r = 0; r <= n - 1 - j; ++r)
        levels.push_back(subsets_of_size(n, n - 1 - r, base, true));
    return E1Row{s, -j, build_perm_complex(registry, std::move(levels))};
}

SpectralPage e1_page(int n, int q)
{
    SpectralPage page{n, q, 1, {}};
    for (int s = 0; s <= 2 * n - 2; s += 2) {
        const auto base = ParabolicType::prefix(n, s / 2);
        for (int r = 0; r <= n - 1 - s / 2; ++r) {
            TwistedModule entry;
            for (const auto& I : subsets_of_size(n, n - 1 - r, base, true))
                entry.add(Summand{ModuleLabel::induced(I), parabolic_index(I, q).get_si(), -s / 2});
            page.entries[{r, s}] = std::move(entry);
        }
    }
    return page;
}

SpectralPage e2_page(const FlagRegistry& registry, int parallelism)
{
    const int n = registry.n();
    const int q = registry.q();
    SpectralPage page{n, q, 2, {}};
    for (int s = 0; s <= 2 * n - 2; s += 2) {
        const int j = s / 2;
        const auto row = build_e1_row(registry, s);
        const auto h = homology_dims(row.complex.complex, parallelism);
        const int last = n - 1 - j;

        std::map<int, Summand> predicted;
        if (s == 2 * n - 2) {
            const auto I = ParabolicType::prefix(n, n - 1);
            predicted[0] = Summand{ModuleLabel::induced(I), parabolic_index(I, q).get_si(), -j};
        } else {
            const auto I = ParabolicType::prefix(n, j);
            predicted[0] = Summand{ModuleLabel::trivial(n), 1, -j};
            predicted[last] = Summand{ModuleLabel::steinberg(I), steinberg_dim(I, q).get_si(), -j};
        }
        for (int r = 0; r <= last; ++r) {
            const auto computed = static_cast<std::int64_t>(h[static_cast<std::size_t>(r)]);
            auto it = predicted.find(r);
            const std::int64_t expected = it == predicted.end() ? 0 : it->second.dim;
            if (computed != expected) {
                std::ostringstream msg;
                msg << "E2^{" << r << ',' << s << "} for n=" << n << ", q=" << q << ": computed dimension " << computed
                    << ", expected " << expected;
                throw VerificationError(msg.str());
            }
            TwistedModule entry;
            if (it != predicted.end())
                entry.add(it->second);
            page.entries[{r, s}] = std::move(entry);
        }
    }
    return page;
}

nlohmann::json page_to_json(const SpectralPage& page)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [pos, module] : page.entries)
        for (const auto& s : module.summands())
            out.push_back({{"r", pos.first}, {"s", pos.second}, {"dim", s.dim}, {"twist", s.twist}, {"label", s.label.to_string()}});
    return out;
}

}  // namespace drinfeld
