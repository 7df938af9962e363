#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "drinfeld/ffgeom.hpp"
#include "drinfeld/flag_registry.hpp"
#include "drinfeld/qarith.hpp"

using namespace drinfeld;

namespace {

// Points of P^n(F_{q^m}) whose coordinates are F_q-linearly independent.
BigInt drinfeld_closed_form(int n, int q, int m)
{
    const BigInt Q = ipow(BigInt(q), static_cast<unsigned long>(m));
    BigInt num = 1;
    for (int k = 0; k <= n; ++k)
        num *= Q - ipow(BigInt(q), static_cast<unsigned long>(k));
    return exact_div(num, Q - 1);
}

}  // namespace

TEST_CASE("finite field axioms")
{
    for (auto [p, m] : {std::pair{2, 1}, {2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
        const GaloisField F(p, m);
        CHECK(F.order() == static_cast<std::uint32_t>(ipow(BigInt(p), static_cast<unsigned long>(m)).get_ui()));
        CHECK(F.modulus().size() == static_cast<std::size_t>(m + 1));
        for (std::uint32_t a = 0; a < F.order(); ++a) {
            const auto x = F.element(a);
            CHECK(F.add(x, F.neg(x)) == F.zero());
            CHECK(F.mul(x, F.one()) == x);
            if (a != 0)
                CHECK(F.mul(x, F.inv(x)) == F.one());
        }
        std::mt19937 rng(11);
        for (int k = 0; k < 300; ++k) {
            const auto a = F.element(rng() % F.order()), b = F.element(rng() % F.order()), c = F.element(rng() % F.order());
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        }
    }
}

TEST_CASE("least irreducible polynomial")
{
    CHECK(least_irreducible(2, 2) == std::vector<int>{1, 1, 1});
    CHECK(least_irreducible(2, 3) == std::vector<int>{1, 1, 0, 1});
    CHECK(least_irreducible(3, 2) == std::vector<int>{1, 0, 1});
}

TEST_CASE("subspaces: span, containment, intersection")
{
    const auto U = Subspace::span(2, 3, {{1, 1, 0}, {0, 1, 1}});
    CHECK(U.dim() == 2);
    CHECK(U.pivots() == std::vector<int>{0, 1});
    CHECK(U.contains_vector(std::vector<int>{1, 0, 1}));
    CHECK_FALSE(U.contains_vector(std::vector<int>{1, 0, 0}));
    const auto L = Subspace::span(2, 3, {{1, 0, 1}});
    CHECK(U.contains(L));
    CHECK_THROWS(Subspace::span(2, 3, {{0, 0, 0}}));

    const auto V = Subspace::span(2, 3, {{1, 0, 0}, {0, 0, 1}});
    const auto meet = intersect(U, V);
    REQUIRE_FALSE(meet.is_zero);
    CHECK(Subspace::span(2, 3, meet.basis) == L);
    CHECK(intersect(L, Subspace::span(2, 3, {{1, 0, 0}})).is_zero);
    CHECK_THROWS(Subspace::from_rref(2, 3, 1, {0, 1, 1, 0}));
}

TEST_CASE("flag enumeration matches parabolic indices and nests")
{
    for (int q : {2, 3})
        for (int n = 1; n <= 3; ++n) {
            if (q == 3 && n == 3)
                continue;
            for (std::uint32_t mask = 0; mask <= ParabolicType::full_mask(n); ++mask) {
                const ParabolicType I(n, mask);
                const auto flags = enumerate_flags(I, q);
                CHECK(parabolic_index(I, q) == static_cast<unsigned long>(flags.size()));
                CHECK(std::is_sorted(flags.begin(), flags.end()));
                for (const auto& f : flags) {
                    const auto dims = I.flag_dims();
                    REQUIRE(f.chain.size() == dims.size());
                    for (std::size_t k = 0; k < dims.size(); ++k) {
                        CHECK(f.chain[k].dim() == dims[k]);
                        if (k > 0)
                            CHECK(f.chain[k].contains(f.chain[k - 1]));
                    }
                }
            }
        }
}

TEST_CASE("forgetting flag members")
{
    const auto B = ParabolicType::empty(2);
    const auto J = ParabolicType::from_members(2, {1});
    const auto flags = enumerate_flags(B, 2);
    std::set<Flag> images;
    for (const auto& f : flags) {
        const auto g = forget(f, J);
        CHECK(g.type == J);
        REQUIRE(g.chain.size() == 1);
        CHECK(g.chain[0] == f.chain[0]);
        images.insert(g);
    }
    CHECK(images.size() == 7);
    CHECK_THROWS(forget(forget(flags[0], J), B));
}

TEST_CASE("projective points and Y")
{
    const GaloisField F(2, 2);
    const auto pts = enumerate_projective_points(2, F);
    CHECK(pts.size() == 21);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    const auto forms = rational_forms(2, 2);
    CHECK(forms.size() == 7);
    for (const auto& x : pts)
        CHECK(on_rational_hyperplane(F, forms, x));  // P^2(F_4) is covered by rational lines

    const GaloisField F8(2, 3);
    std::size_t off = 0;
    for (const auto& x : enumerate_projective_points(2, F8))
        off += on_rational_hyperplane(F8, forms, x) ? 0 : 1;
    CHECK(off == 24);
}

TEST_CASE("Drinfeld point counts against the independent-coordinates formula")
{
    for (auto [n, q, m] : {std::array{1, 2, 1}, {1, 2, 3}, {1, 3, 2}, {1, 5, 3}, {2, 2, 3}, {2, 3, 3}, {2, 2, 4}, {3, 2, 2}, {3, 2, 4}})
        CHECK(drinfeld_points(n, q, m) == drinfeld_closed_form(n, q, m));
    CHECK(drinfeld_points(2, 2, 3) == 24);
    CHECK(drinfeld_points(2, 2, 2) == 0);
    CHECK_THROWS(drinfeld_points(3, 5, 5));
}

TEST_CASE("flag registry cache gives identical flags")
{
    const auto dir = std::filesystem::temp_directory_path() / "drinfeld_flag_cache_test";
    std::filesystem::remove_all(dir);
    const FlagRegistry plain(2, 3);
    {
        const FlagRegistry writer(2, 3, dir);
        for (std::uint32_t mask = 0; mask < 4; ++mask)
            CHECK(writer.flags(ParabolicType(2, mask)) == plain.flags(ParabolicType(2, mask)));
        CHECK(writer.cache_hits() == 0);
    }
    const FlagRegistry reader(2, 3, dir);
    for (std::uint32_t mask = 0; mask < 4; ++mask)
        CHECK(reader.flags(ParabolicType(2, mask)) == plain.flags(ParabolicType(2, mask)));
    CHECK(reader.cache_hits() == 4);

    // A damaged file is ignored and recomputed.
    const auto file = flag_cache_file(dir, ParabolicType::empty(2), 3);
    std::ofstream(file) << "{\"format\": \"something else\"}";
    CHECK_FALSE(read_flag_cache(file, ParabolicType::empty(2), 3).has_value());
    const FlagRegistry again(2, 3, dir);
    CHECK(again.flags(ParabolicType::empty(2)) == plain.flags(ParabolicType::empty(2)));
    CHECK(again.cache_hits() == 0);

    const auto& flags = plain.flags(ParabolicType::empty(2));
    for (std::size_t k = 0; k < flags.size(); k += 7)
        CHECK(plain.index_of(flags[k]) == k);
    std::filesystem::remove_all(dir);
}
