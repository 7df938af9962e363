#pragma once

// Exact q-analog arithmetic over arbitrary-precision integers.

#include <gmpxx.h>

#include <vector>

#include "drinfeld/rootdata.hpp"

namespace drinfeld {

using BigInt = mpz_class;

BigInt ipow(const BigInt& base, unsigned long exponent);

/// a / b, throwing std::logic_error if b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);

bool is_prime(long value);
bool is_prime_power(long value);

/// Number of k-dimensional subspaces of F_q^n.
BigInt gauss_binomial(int n, int k, const BigInt& q);

/// Number of flags of type (parts) in F_q^{sum(parts)}: a product of
/// Gaussian binomials.
BigInt gauss_multinomial(const std::vector<int>& parts, const BigInt& q);

/// #P^n(F_{q^m}) = (q^{m(n+1)} - 1) / (q^m - 1).
BigInt projective_count(int n, const BigInt& q, int m);

/// [G : P_I] for G = GL_{n+1}(F_q), i.e. the number of flags of the type of I.
BigInt parabolic_index(const ParabolicType& I, const BigInt& q);

}  // namespace drinfeld
