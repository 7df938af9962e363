#include <doctest.h>

#include <random>
#include <stdexcept>

#include "drinfeld/rootdata.hpp"

using drinfeld::ParabolicType;

TEST_CASE("composition and subset describe the same parabolic")
{
    const auto I = ParabolicType::from_composition({2, 1});
    CHECK(I.n() == 2);
    CHECK(I.members() == std::vector<int>{0});
    CHECK(I.flag_dims() == std::vector<int>{2});
    CHECK(I.composition_string() == "(2,1)");
    CHECK(I.subset_string() == "{a0}");

    const auto B = ParabolicType::empty(3);
    CHECK(B.composition() == std::vector<int>{1, 1, 1, 1});
    CHECK(B.flag_dims() == std::vector<int>{1, 2, 3});
    CHECK(ParabolicType::full(3).composition() == std::vector<int>{4});
    CHECK(ParabolicType::full(3).flag_dims().empty());

    const auto P = ParabolicType::from_members(4, {0, 2, 3});
    CHECK(P.composition() == std::vector<int>{2, 3});
    CHECK(ParabolicType::from_composition(P.composition()) == P);
}

TEST_CASE("composition round trip for every subset")
{
    for (int n = 1; n <= 6; ++n)
        for (std::uint32_t mask = 0; mask <= ParabolicType::full_mask(n); ++mask) {
            const ParabolicType I(n, mask);
            const auto c = I.composition();
            int total = 0;
            for (int part : c)
                total += part;
            CHECK(total == n + 1);
            CHECK(ParabolicType::from_composition(c) == I);
            CHECK(static_cast<int>(c.size()) == n + 1 - I.size());
        }
}

TEST_CASE("prefix parabolics and i(I)")
{
    const auto I1 = ParabolicType::prefix(3, 1);
    CHECK(I1.members() == std::vector<int>{0});
    CHECK(I1.composition() == std::vector<int>{2, 1, 1});
    CHECK(I1.i_of() == 1);
    CHECK(ParabolicType::prefix(3, 0).i_of() == 0);
    CHECK(ParabolicType::from_members(3, {1, 2}).i_of() == 0);
    CHECK(ParabolicType::from_members(3, {0, 1}).i_of() == 2);
    CHECK(ParabolicType::prefix(3, 3).is_full());
    CHECK_THROWS_AS(ParabolicType::full(3).i_of(), std::invalid_argument);
}

TEST_CASE("subset enumeration")
{
    const auto level = drinfeld::subsets_of_size(3, 2, ParabolicType::empty(3), true);
    REQUIRE(level.size() == 3);
    CHECK(level[0] == ParabolicType::from_members(3, {0, 1}));
    CHECK(level[2] == ParabolicType::from_members(3, {1, 2}));

    const auto base = ParabolicType::prefix(3, 1);
    for (const auto& I : drinfeld::subsets_of_size(3, 2, base, true))
        CHECK(base.is_subset_of(I));
    CHECK(drinfeld::subsets_of_size(3, 3, ParabolicType::empty(3), true).empty());
    CHECK(drinfeld::subsets_of_size(3, 3, ParabolicType::empty(3), false).size() == 1);
    CHECK(drinfeld::supersets_of(base).size() == 4);
}

TEST_CASE("incidence signs make d o d vanish on the subset lattice")
{
    // For I <= M with #(M \ I) = 2 the two paths through the middle cancel.
    for (int n = 1; n <= 6; ++n)
        for (std::uint32_t mask = 0; mask <= ParabolicType::full_mask(n); ++mask) {
            const ParabolicType I(n, mask);
            const auto miss = I.missing();
            for (std::size_t a = 0; a < miss.size(); ++a)
                for (std::size_t b = a + 1; b < miss.size(); ++b) {
                    const auto A = I.with(miss[a]);
                    const auto B = I.with(miss[b]);
                    const auto M = A.with(miss[b]);
                    const int path1 = drinfeld::incidence_sign(I, A) * drinfeld::incidence_sign(A, M);
                    const int path2 = drinfeld::incidence_sign(I, B) * drinfeld::incidence_sign(B, M);
                    CHECK(path1 + path2 == 0);
                }
        }
}

TEST_CASE("covering roots")
{
    const auto I = ParabolicType::from_members(3, {0});
    CHECK(drinfeld::covering_root(I, ParabolicType::from_members(3, {0, 2})) == 2);
    CHECK(drinfeld::covering_root(I, ParabolicType::full(3)) == -1);
    CHECK(drinfeld::covering_root(I, I) == -1);
}

TEST_CASE("ordering is by size then members")
{
    std::mt19937 rng(7);
    for (int k = 0; k < 200; ++k) {
        const ParabolicType a(4, rng() & 15u), b(4, rng() & 15u);
        if (a.size() != b.size())
            CHECK(((a < b) == (a.size() < b.size())));
        CHECK(((a == b) == (a.mask() == b.mask())));
    }
}

TEST_CASE("invalid input is rejected")
{
    CHECK_THROWS(ParabolicType::from_composition({}));
    CHECK_THROWS(ParabolicType::from_composition({2, 0, 1}));
    CHECK_THROWS(ParabolicType(2, 4u));
    CHECK_THROWS(ParabolicType::prefix(2, 3));
}
