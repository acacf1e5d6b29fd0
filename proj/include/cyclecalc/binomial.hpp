#pragma once

/**
 * Generalized binomial coefficients and the alternating-sum identities
 * built on them.
 *
 * binom(n, k) is defined for every integer n by the falling-factorial product
 * n(n-1)...(n-k+1)/k!, with binom(n, 0) = 1 and binom(n, k) = 0 for k < 0.
 * With this convention (1+x)^n = sum_k binom(n, k) x^k for negative n as well.
 */

#include "cyclecalc/rational.hpp"

namespace cyclecalc {

BigInt binom(long n, long k);

/// sum_i binom(n, i) binom(m, k - i); throws IdentityViolation unless it
/// equals binom(n + m, k).
BigInt vandermonde_convolution(long n, long m, long k);

struct AltBinomSums {
    BigInt s1;  ///< sum_{i=0}^{l} (-1)^i binom(m, l-i)        == binom(m-1, l)
    BigInt s2;  ///< sum_{i=0}^{l} (-1)^(i-1) i binom(m, l-i)  == binom(m-2, l-1)
    BigInt s3;  ///< sum_{i=0}^{l} (-1)^i i^2 binom(m, l-i)    == binom(m-3, l-2) - binom(m-3, l-1)
};

/// Direct summation of the three sums; each is checked against its closed
/// form and IdentityViolation is thrown on disagreement.
AltBinomSums alt_binom_sums(long m, long l);

}  // namespace cyclecalc
