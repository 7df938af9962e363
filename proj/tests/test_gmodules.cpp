#include <doctest.h>

#include "drinfeld/errors.hpp"
#include "drinfeld/gmodules.hpp"
#include "drinfeld/qarith.hpp"

using namespace drinfeld;

TEST_CASE("pullback matrices: shape, single unit per row, constant column sums")
{
    const FlagRegistry reg(2, 3);
    const auto I = ParabolicType::empty(2);
    const auto J = ParabolicType::from_members(2, {0});
    const auto p = pullback_matrix(reg, I, J);
    CHECK(p.rows() == 52);
    CHECK(p.cols() == 13);
    std::vector<int> colsum(13, 0);
    for (int r = 0; r < p.rows(); ++r) {
        REQUIRE(p.row(r).size() == 1);
        CHECK(p.row(r)[0].value == 1);
        ++colsum[static_cast<std::size_t>(p.row(r)[0].col)];
    }
    for (int c : colsum)
        CHECK(c == 4);
    CHECK_THROWS(pullback_matrix(reg, J, I));
}

TEST_CASE("pullbacks compose")
{
    const FlagRegistry reg(3, 2);
    const auto I = ParabolicType::empty(3);
    const auto J = ParabolicType::from_members(3, {1});
    const auto L = ParabolicType::from_members(3, {0, 1});
    CHECK(pullback_matrix(reg, I, J) * pullback_matrix(reg, J, L) == pullback_matrix(reg, I, L));
    CHECK(pullback_matrix(reg, J, J) == ExactMatrix::identity(static_cast<int>(reg.flags(J).size())));
}

TEST_CASE("Steinberg dimensions: closed forms")
{
    CHECK(steinberg_dim(ParabolicType::empty(2), 2) == 8);
    CHECK(steinberg_dim(ParabolicType::empty(3), 2) == 64);
    CHECK(steinberg_dim(ParabolicType::empty(2), 3) == 27);
    CHECK(steinberg_dim(ParabolicType::from_members(2, {0}), 2) == 6);
    CHECK(steinberg_dim(ParabolicType::from_members(2, {1}), 2) == 6);
    CHECK(steinberg_dim(ParabolicType::full(2), 2) == 1);
    CHECK(steinberg_dim(ParabolicType::empty(1), 3) == 3);
    for (int q : {2, 3, 5})
        for (int n = 1; n <= 5; ++n)
            CHECK(steinberg_dim(ParabolicType::empty(n), q) == ipow(BigInt(q), static_cast<unsigned long>(n * (n + 1) / 2)));
}

TEST_CASE("Steinberg resolutions are exact except at the end")
{
    for (auto [n, q] : {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
        const FlagRegistry reg(n, q);
        for (std::uint32_t mask = 0; mask < ParabolicType::full_mask(n); ++mask) {
            const ParabolicType J(n, mask);
            const auto data = steinberg_resolution(reg, J);
            CAPTURE(J.subset_string());
            CHECK(steinberg_dim(J, q) == static_cast<unsigned long>(data.dim_v));
            CHECK(data.dim_v == steinberg_dim_by_quotient(reg, J));
            for (std::size_t k = 0; k + 1 < data.homology.size(); ++k)
                CHECK(data.homology[k] == 0);
            CHECK(data.homology.back() == data.dim_v);
            CHECK(data.resolution.complex.length() == static_cast<std::size_t>(n - J.size() + 1));
        }
        CHECK_THROWS(steinberg_resolution(reg, ParabolicType::full(n)));
    }
}

TEST_CASE("permutation complex levels")
{
    const FlagRegistry reg(2, 2);
    const auto pc = build_perm_complex(reg, {{ParabolicType::from_members(2, {0}), ParabolicType::from_members(2, {1})}, {ParabolicType::empty(2)}});
    CHECK(pc.complex.terms() == std::vector<std::size_t>{14, 21});
    CHECK(perm_module(reg, ParabolicType::empty(2)).dim() == 21);
    CHECK_THROWS(build_perm_complex(reg, {{ParabolicType::empty(2)}, {ParabolicType::from_members(2, {0})}}));
}
