#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "drinfeld/homalg.hpp"

using namespace drinfeld;

namespace {

// Textbook Gauss-Jordan over Q; the reference for every rank below.
std::size_t naive_rank(std::vector<std::vector<Rational>> a)
{
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

ExactMatrix random_matrix(std::mt19937& rng, int rows, int cols, double density, int planted_rank = -1)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> val(-3, 3);
    if (planted_rank < 0) {
        std::vector<Triplet> t;
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (u(rng) < density)
                    t.push_back({r, c, Rational(val(rng), std::uniform_int_distribution<int>(1, 4)(rng))});
        return ExactMatrix::from_triplets(rows, cols, std::move(t));
    }
    // Product of rows x k and k x cols factors has rank <= k.
    const auto a = random_matrix(rng, rows, planted_rank, density);
    const auto b = random_matrix(rng, planted_rank, cols, density);
    return a * b;
}

std::vector<int> shuffled(std::mt19937& rng, int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("triplet assembly sums duplicates and drops zeros")
{
    const auto m = ExactMatrix::from_triplets(2, 3, {{0, 1, Rational(1)}, {0, 1, Rational(-1)}, {1, 2, Rational(1, 2)}, {1, 2, Rational(1, 3)}});
    CHECK(m.nnz() == 1);
    CHECK(m.at(1, 2) == Rational(5, 6));
    CHECK(m.at(0, 1) == 0);
    CHECK_THROWS(ExactMatrix::from_triplets(2, 2, {{2, 0, Rational(1)}}));
}

TEST_CASE("products, transpose and identity")
{
    std::mt19937 rng(3);
    const auto a = random_matrix(rng, 5, 7, 0.4);
    const auto b = random_matrix(rng, 7, 4, 0.4);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK(a * ExactMatrix::identity(7) == a);
    CHECK(ExactMatrix::from_dense(a.to_dense()) == a);
    CHECK_THROWS(a * a);
}

TEST_CASE("rank against the naive oracle")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = std::uniform_int_distribution<int>(1, 18)(rng);
        const int cols = std::uniform_int_distribution<int>(1, 18)(rng);
        const int planted = trial % 2 ? std::uniform_int_distribution<int>(1, 6)(rng) : -1;
        const auto m = random_matrix(rng, rows, cols, 0.35, planted);
        const auto expected = naive_rank(m.to_dense());
        CHECK(rank_dense(m) == expected);
        CHECK(rank_sparse(m) == expected);
        CHECK(rank(m) == expected);
        CHECK(rank(m.transpose()) == expected);
        CHECK(rank(m.permuted(shuffled(rng, rows), shuffled(rng, cols))) == expected);
    }
}

TEST_CASE("sparse rank on a large structured matrix")
{
    // Incidence matrix of a path graph on 400 vertices: rank 399.
    std::vector<Triplet> t;
    for (int e = 0; e < 399; ++e) {
        t.push_back({e, e, Rational(1)});
        t.push_back({e, e + 1, Rational(-1)});
    }
    const auto m = ExactMatrix::from_triplets(399, 400, std::move(t));
    CHECK(rank(m) == 399);
    CHECK(rank(m.transpose()) == 399);
}

TEST_CASE("dump format is stable")
{
    const auto m = ExactMatrix::from_triplets(2, 3, {{1, 0, Rational(-2, 3)}, {0, 2, Rational(5)}});
    CHECK(m.dump_string() == "2 3 2\n0 2 5/1\n1 0 -2/3\n");
    std::istringstream is(m.dump_string());
    CHECK(ExactMatrix::parse_dump(is) == m);
}

TEST_CASE("chain complexes: shape and d o d checks")
{
    const auto d0 = ExactMatrix::from_dense({{Rational(1)}, {Rational(1)}});
    const auto d1 = ExactMatrix::from_dense({{Rational(1), Rational(-1)}});
    const ChainComplex c({1, 2, 1}, {d0, d1});
    CHECK(homology_dims(c) == std::vector<std::size_t>{0, 0, 0});
    CHECK(c.euler_characteristic() == 0);

    const auto bad = ExactMatrix::from_dense({{Rational(1), Rational(1)}});
    CHECK_THROWS_AS(ChainComplex({1, 2, 1}, {d0, bad}), ComplexError);
    CHECK_THROWS_AS(ChainComplex({1, 3, 1}, {d0, d1}), ComplexError);

    const ChainComplex iso_then_zero({1, 1, 1}, {ExactMatrix::identity(1), ExactMatrix(1, 1)});
    const auto report = is_exact_except(iso_then_zero, {2});
    CHECK(report.exact);
    CHECK(report.allowed_dims.at(2) == 1);
    const auto strict = is_exact_except(ChainComplex({1, 2, 1}, {d0, ExactMatrix(1, 2)}), {});
    CHECK_FALSE(strict.exact);
    CHECK(strict.failing_positions == std::vector<int>{1, 2});
}

TEST_CASE("Euler characteristic is preserved by homology")
{
    // Koszul complex K^k -> K^{2k} -> K^k of two commuting matrices A = R, B = R^2 - cI.
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const int k = std::uniform_int_distribution<int>(1, 7)(rng);
        const auto R = random_matrix(rng, k, k, trial % 3 == 0 ? 0.2 : 0.6);
        std::vector<Triplet> shift;
        for (int i = 0; i < k; ++i)
            shift.push_back({i, i, Rational(-(trial % 4))});
        const auto A = R;
        const auto B = ExactMatrix::from_triplets(k, k, [&] {
            auto t = shift;
            const auto r2 = R * R;
            for (int i = 0; i < k; ++i)
                for (const auto& e : r2.row(i))
                    t.push_back({i, e.col, e.value});
            return t;
        }());
        std::vector<Triplet> t0, t1;
        for (int i = 0; i < k; ++i) {
            for (const auto& e : A.row(i)) {
                t0.push_back({i, e.col, e.value});
                t1.push_back({i, k + e.col, -e.value});
            }
            for (const auto& e : B.row(i)) {
                t0.push_back({k + i, e.col, e.value});
                t1.push_back({i, e.col, e.value});
            }
        }
        const auto uk = static_cast<std::size_t>(k);
        const ChainComplex cx({uk, 2 * uk, uk}, {ExactMatrix::from_triplets(2 * k, k, t0), ExactMatrix::from_triplets(k, 2 * k, t1)});
        const auto h = homology_dims(cx, 2);
        const long chi = static_cast<long>(h[0]) - static_cast<long>(h[1]) + static_cast<long>(h[2]);
        CHECK(chi == cx.euler_characteristic());
        CHECK(cx.euler_characteristic() == 0);
    }
}
