#include <doctest.h>

#include <stdexcept>

#include "drinfeld/ffgeom.hpp"
#include "drinfeld/qarith.hpp"

using namespace drinfeld;

TEST_CASE("gaussian binomials: known values")
{
    CHECK(gauss_binomial(3, 1, 2) == 7);
    CHECK(gauss_binomial(4, 2, 2) == 35);
    CHECK(gauss_binomial(4, 2, 3) == 130);
    CHECK(gauss_binomial(5, 0, 7) == 1);
    CHECK(gauss_binomial(5, 5, 7) == 1);
    CHECK_THROWS_AS(gauss_binomial(2, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(gauss_binomial(2, 1, 1), std::invalid_argument);
}

TEST_CASE("gaussian binomials: symmetry and Pascal recursion")
{
    for (int q : {2, 3, 4, 5})
        for (int n = 1; n <= 9; ++n)
            for (int k = 1; k < n; ++k) {
                CHECK(gauss_binomial(n, k, q) == gauss_binomial(n, n - k, q));
                CHECK(gauss_binomial(n, k, q) ==
                      gauss_binomial(n - 1, k - 1, q) + ipow(BigInt(q), static_cast<unsigned long>(k)) * gauss_binomial(n - 1, k, q));
            }
}

TEST_CASE("gaussian binomials agree with subspace enumeration")
{
    for (int q : {2, 3})
        for (int N = 1; N <= 4; ++N)
            for (int d = 1; d <= N; ++d)
                CHECK(gauss_binomial(N, d, q) == static_cast<unsigned long>(enumerate_subspaces(N, d, q).size()));
}

TEST_CASE("multinomials and parabolic indices")
{
    CHECK(gauss_multinomial({1, 1, 1}, 2) == 21);
    CHECK(gauss_multinomial({2, 1}, 2) == 7);
    CHECK(parabolic_index(ParabolicType::empty(2), 2) == 21);
    CHECK(parabolic_index(ParabolicType::empty(3), 2) == 315);
    CHECK(parabolic_index(ParabolicType::empty(3), 3) == 2080);
    CHECK(parabolic_index(ParabolicType::full(3), 3) == 1);
    CHECK(parabolic_index(ParabolicType::from_composition({2, 2}), 2) == 35);
}

TEST_CASE("projective counts")
{
    CHECK(projective_count(2, 2, 1) == 7);
    CHECK(projective_count(2, 2, 2) == 21);
    CHECK(projective_count(1, 3, 2) == 10);
    CHECK(projective_count(0, 5, 3) == 1);
}

TEST_CASE("integer helpers")
{
    CHECK(ipow(3, 0) == 1);
    CHECK(ipow(2, 64) == BigInt("18446744073709551616"));
    CHECK(exact_div(91, 13) == 7);
    CHECK_THROWS_AS(exact_div(91, 12), std::logic_error);
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(is_prime_power(8));
    CHECK(is_prime_power(9));
    CHECK_FALSE(is_prime_power(12));
}
