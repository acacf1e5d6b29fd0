#include "cyclecalc/binomial.hpp"

#include "cyclecalc/errors.hpp"

namespace cyclecalc {

BigInt binom(long n, long k) {
    if (k < 0) return 0;
    BigInt num = 1;
    for (long j = 0; j < k; ++j) num *= BigInt(n - j);
    // exact: k! divides any product of k consecutive integers
    BigInt result;
    mpz_divexact(result.get_mpz_t(), num.get_mpz_t(), factorial(static_cast<unsigned>(k)).get_mpz_t());
    return result;
}

BigInt vandermonde_convolution(long n, long m, long k) {
    BigInt sum = 0;
    for (long i = 0; i <= k; ++i) sum += binom(n, i) * binom(m, k - i);
    if (sum != binom(n + m, k))
        throw IdentityViolation("convolution identity failed for n=" + std::to_string(n) +
                                " m=" + std::to_string(m) + " k=" + std::to_string(k));
    return sum;
}

AltBinomSums alt_binom_sums(long m, long l) {
    AltBinomSums out{0, 0, 0};
    for (long i = 0; i <= l; ++i) {
        const BigInt b = binom(m, l - i);
        const long sign = (i % 2 == 0) ? 1 : -1;
        out.s1 += sign * b;
        out.s2 += -sign * i * b;
        out.s3 += sign * i * i * b;
    }
    const auto where = " (m=" + std::to_string(m) + ", l=" + std::to_string(l) + ")";
    if (out.s1 != binom(m - 1, l)) throw IdentityViolation("first alternating sum" + where);
    if (out.s2 != binom(m - 2, l - 1)) throw IdentityViolation("second alternating sum" + where);
    if (out.s3 != binom(m - 3, l - 2) - binom(m - 3, l - 1)) throw IdentityViolation("third alternating sum" + where);
    return out;
}

}  // namespace cyclecalc
