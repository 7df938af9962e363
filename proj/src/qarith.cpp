#include "drinfeld/qarith.hpp"

#include <stdexcept>

namespace drinfeld {

BigInt ipow(const BigInt& base, unsigned long exponent)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

BigInt exact_div(const BigInt& a, const BigInt& b)
{
    if (b == 0)
        throw std::logic_error("exact_div: division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::logic_error("exact_div: " + a.get_str() + " is not divisible by " + b.get_str());
    BigInt out;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

bool is_prime(long value)
{
    if (value < 2)
        return false;
    for (long d = 2; d * d <= value; ++d)
        if (value % d == 0)
            return false;
    return true;
}

bool is_prime_power(long value)
{
    if (value < 2)
        return false;
    long p = 2;
    while (value % p != 0)
        ++p;
    while (value % p == 0)
        value /= p;
    return value == 1;
}

namespace {

void check_q(const BigInt& q)
{
    if (q < 2)
        throw std::invalid_argument("q must be at least 2");
}

}  // namespace

BigInt gauss_binomial(int n, int k, const BigInt& q)
{
    check_q(q);
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("gauss_binomial: need 0 <= k <= n");
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < k; ++i) {
        num *= ipow(q, static_cast<unsigned long>(n - i)) - 1;
        den *= ipow(q, static_cast<unsigned long>(i + 1)) - 1;
    }
    return exact_div(num, den);
}

BigInt gauss_multinomial(const std::vector<int>& parts, const BigInt& q)
{
    int remaining = 0;
    for (int p : parts) {
        if (p < 0)
            throw std::invalid_argument("gauss_multinomial: negative part");
        remaining += p;
    }
    BigInt out = 1;
    for (int p : parts) {
        out *= gauss_binomial(remaining, p, q);
        remaining -= p;
    }
    return out;
}

BigInt projective_count(int n, const BigInt& q, int m)
{
    check_q(q);
    if (n < 0 || m < 1)
        throw std::invalid_argument("projective_count: need n >= 0 and m >= 1");
    const BigInt qm = ipow(q, static_cast<unsigned long>(m));
    return exact_div(ipow(qm, static_cast<unsigned long>(n + 1)) - 1, qm - 1);
}

BigInt parabolic_index(const ParabolicType& I, const BigInt& q)
{
    return gauss_multinomial(I.composition(), q);
}

}  // namespace drinfeld
