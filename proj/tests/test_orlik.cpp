#include <doctest.h>

#include <stdexcept>

#include "drinfeld/errors.hpp"
#include "drinfeld/orlik.hpp"

using namespace drinfeld;

TEST_CASE("function complex term sizes")
{
    using V = std::vector<std::size_t>;
    CHECK(function_complex_term_dims(1, 2, 1) == V{3, 3});
    CHECK(function_complex_term_dims(2, 2, 1) == V{7, 28, 21});
    CHECK(function_complex_term_dims(2, 2, 2) == V{21, 42, 21});
    CHECK(function_complex_term_dims(2, 3, 1) == V{13, 65, 52});
    CHECK(function_complex_term_dims(3, 2, 1) == V{15, 225, 525, 315});
    CHECK(function_complex_term_dims(3, 2, 2) == V{85, 505, 735, 315});
}

TEST_CASE("function complexes are acyclic")
{
    for (auto [n, q, m] : {std::array{1, 2, 1}, {1, 2, 2}, {1, 3, 3}, {2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {2, 2, 3}, {3, 2, 1}}) {
        CAPTURE(n);
        CAPTURE(q);
        CAPTURE(m);
        const auto fc = build_function_complex(n, q, m);
        CHECK(fc.complex.terms() == function_complex_term_dims(n, q, m));
        for (auto h : homology_dims(fc.complex))
            CHECK(h == 0);
    }
    CHECK_THROWS_AS(build_function_complex(3, 3, 3), std::length_error);
}

TEST_CASE("rational subspaces through a point of Y are closed under intersection")
{
    CHECK(check_intersection_closure(1, 2, 2));
    CHECK(check_intersection_closure(2, 2, 2));
    CHECK(check_intersection_closure(2, 3, 1));
    CHECK(check_intersection_closure(3, 2, 1));
}

TEST_CASE("E1 page")
{
    const auto page = e1_page(2, 2);
    CHECK(page.entries.at({0, 0}).dim() == 14);
    CHECK(page.entries.at({1, 0}).dim() == 21);
    CHECK(page.entries.at({0, 2}).dim() == 7);
    CHECK(page.entries.at({0, 2}).twists() == std::vector<int>{-1});
    CHECK(page.entries.count({1, 2}) == 0);

    const FlagRegistry reg(2, 2);
    CHECK_THROWS(build_e1_row(reg, 1));
    CHECK_THROWS(build_e1_row(reg, 4));
    CHECK(build_e1_row(reg, 2).twist == -1);
}

TEST_CASE("E2 page pattern")
{
    const FlagRegistry reg(2, 2);
    const auto page = e2_page(reg);
    std::map<std::pair<int, int>, std::int64_t> nonzero;
    for (const auto& [pos, module] : page.entries)
        if (!module.empty())
            nonzero[pos] = module.dim();
    CHECK(nonzero == std::map<std::pair<int, int>, std::int64_t>{{{1, 0}, 8}, {{0, 0}, 1}, {{0, 2}, 7}});

    for (auto [n, q] : {std::pair{1, 2}, {1, 3}, {2, 3}, {3, 2}, {3, 3}}) {
        const FlagRegistry r(n, q);
        const auto p = e2_page(r, 0);
        CHECK(p.entries.at({0, 2 * n - 2}).summands().front().label == ModuleLabel::induced(ParabolicType::prefix(n, n - 1)));
    }
    const auto doc = page_to_json(page);
    CHECK(doc.size() == 3);
    CHECK(doc[0].contains("label"));
}
