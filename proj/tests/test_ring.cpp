#include "doctest.h"

#include <random>

#include "cyclecalc/errors.hpp"
#include "cyclecalc/ring.hpp"

using namespace cyclecalc;

namespace {

// X^n mod (X-1)^(2g+1) by schoolbook long division over the integers, n >= 0.
Vector reduce_power_oracle(int g, long n) {
    const std::size_t deg = static_cast<std::size_t>(2 * g + 1);
    std::vector<BigInt> divisor(deg + 1);  // (X-1)^deg, low degree first
    for (std::size_t k = 0; k <= deg; ++k) {
        BigInt c = 1;
        for (std::size_t i = 0; i < k; ++i) c = c * BigInt(static_cast<long>(deg - i)) / BigInt(static_cast<long>(i + 1));
        divisor[k] = ((deg - k) % 2 == 0) ? c : BigInt(-c);
    }
    std::vector<BigInt> rem(static_cast<std::size_t>(n) + 1, 0);
    rem[static_cast<std::size_t>(n)] = 1;
    for (long top = n; top >= static_cast<long>(deg); --top) {
        const BigInt lead = rem[static_cast<std::size_t>(top)];
        if (lead == 0) continue;
        for (std::size_t k = 0; k <= deg; ++k) rem[static_cast<std::size_t>(top) - deg + k] -= lead * divisor[k];
    }
    Vector out(deg, Rational(0));
    for (std::size_t k = 0; k < deg && k < rem.size(); ++k) out[k] = Rational(rem[k]);
    return out;
}

// Gauss-Jordan on an augmented matrix, local to this test.
Vector tiny_solve(Matrix a, Vector b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a[p][c].is_zero()) ++p;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
    return b;
}

// pi_i on the Gamma basis Gamma_0..Gamma_2g: unique solution of sum_n a_n n^(2g-k) = [k == i].
Vector pi_by_vandermonde(int g, int i) {
    const std::size_t n = static_cast<std::size_t>(2 * g + 1);
    Matrix a(n, Vector(n));
    Vector rhs(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) a[k][m] = Rational(ipow(static_cast<long>(m), static_cast<unsigned>(2 * g - static_cast<int>(k))));
        rhs[k] = static_cast<int>(k) == i ? 1 : 0;
    }
    return tiny_solve(a, rhs);
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    return Rational(num(rng), den(rng));
}

RingElement random_element(int g, std::mt19937& rng) {
    Vector v(static_cast<std::size_t>(2 * g + 1));
    for (auto& c : v) c = random_rational(rng);
    return RingElement::from_shifted(g, v);
}

}  // namespace

TEST_CASE("gamma examples") {
    const RingElement d = gamma(1, 1);
    CHECK(d.shifted_coeffs() == Vector{1, 1, 0});
    CHECK(d.pi_coeffs() == Vector{1, 1, 1});
    CHECK(gamma(1, 6).gamma_basis_coeffs() == Vector{10, -24, 15});
    CHECK(gamma(2, 0).pi_coeffs() == Vector{0, 0, 0, 0, 1});
}

TEST_CASE("gamma matches polynomial division oracle") {
    for (int g = 1; g <= 4; ++g)
        for (long n = 0; n <= 14; ++n) CHECK(gamma(g, n).gamma_basis_coeffs() == reduce_power_oracle(g, n));
}

TEST_CASE("gamma projector coordinates are powers") {
    for (int g = 1; g <= 4; ++g)
        for (long n = -6; n <= 6; ++n) {
            const Vector p = gamma(g, n).pi_coeffs();
            for (int i = 0; i <= 2 * g; ++i) CHECK(p[static_cast<std::size_t>(i)] == Rational(ipow(n, static_cast<unsigned>(2 * g - i))));
        }
}

TEST_CASE("pontryagin examples") {
    CHECK(pontryagin(gamma(3, 2), gamma(3, 3)) == gamma(3, 5));
    std::mt19937 rng(7);
    for (int g = 1; g <= 3; ++g) {
        const RingElement a = random_element(g, rng);
        CHECK(pontryagin(gamma(g, 0), a) == a);
        CHECK(pontryagin_power(gamma(g, 1) - gamma(g, 0), static_cast<unsigned>(2 * g + 1)).is_zero());
        CHECK_FALSE(pontryagin_power(gamma(g, 1) - gamma(g, 0), static_cast<unsigned>(2 * g)).is_zero());
    }
    CHECK_THROWS_AS(pontryagin(gamma(1, 1), gamma(2, 1)), GenusMismatch);
}

TEST_CASE("compose examples") {
    CHECK(compose(gamma(1, 2), gamma(1, 3)).gamma_basis_coeffs() == reduce_power_oracle(1, 6));
    CHECK_THROWS_AS(compose(gamma(1, 1), gamma(3, 1)), GenusMismatch);
}

TEST_CASE("pi examples") {
    CHECK(pi(1, 0).gamma_basis_coeffs() == Vector{Rational(1, 2), -1, Rational(1, 2)});
    CHECK(pi(1, 2) == gamma(1, 0));
    for (int g = 1; g <= 4; ++g) {
        CHECK(pi(g, 2 * g - 1) == log_gamma1(g));
        for (int i = 0; i <= 2 * g; ++i) CHECK(pi(g, i).gamma_basis_coeffs() == pi_by_vandermonde(g, i));
    }
    CHECK_THROWS_AS(pi(2, 5), DomainError);
    CHECK_THROWS_AS(pi(2, -1), DomainError);
}

TEST_CASE("log gamma1") {
    const RingElement x = gamma(1, 1) - gamma(1, 0);
    CHECK(log_gamma1(1) == x - Rational(1, 2) * pontryagin(x, x));
    for (int g = 1; g <= 5; ++g) {
        Vector e(static_cast<std::size_t>(2 * g + 1), Rational(0));
        e[static_cast<std::size_t>(2 * g - 1)] = 1;
        CHECK(log_gamma1(g).pi_coeffs() == e);
        CHECK(pontryagin_exp(log_gamma1(g)) == gamma(g, 1));
        CHECK(pontryagin_exp(Rational(3) * log_gamma1(g)) == gamma(g, 3));
    }
}

TEST_CASE("projector system") {
    for (int g = 1; g <= 5; ++g) {
        RingElement sum = RingElement::zero(g);
        for (int i = 0; i <= 2 * g; ++i) {
            sum += pi(g, i);
            for (int j = 0; j <= 2 * g; ++j) {
                const RingElement p = compose(pi(g, i), pi(g, j));
                if (i == j)
                    CHECK(p == pi(g, i));
                else
                    CHECK(p.is_zero());
            }
        }
        CHECK(sum == gamma(g, 1));
    }
}

TEST_CASE("eigen relations") {
    for (int g = 1; g <= 4; ++g)
        for (long n = -5; n <= 5; ++n)
            for (int i = 0; i <= 2 * g; ++i) {
                const RingElement p = pi(g, 2 * g - i);
                const RingElement expect = Rational(ipow(n, static_cast<unsigned>(i))) * p;
                CHECK(compose(gamma(g, n), p) == expect);
                CHECK(compose(p, gamma(g, n)) == expect);
            }
}

TEST_CASE("semigroup laws") {
    for (int g = 1; g <= 4; ++g)
        for (long n = -4; n <= 6; ++n)
            for (long m = -4; m <= 6; ++m) {
                CHECK(pontryagin(gamma(g, n), gamma(g, m)) == gamma(g, n + m));
                CHECK(compose(gamma(g, n), gamma(g, m)) == gamma(g, n * m));
            }
    for (int g = 1; g <= 4; ++g) CHECK(compose(gamma(g, -1), gamma(g, -1)) == gamma(g, 1));
}

TEST_CASE("basis round trips") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 40; ++trial) {
        const int g = 1 + trial % 5;
        const RingElement a = random_element(g, rng);
        CHECK(RingElement::from_pi(g, a.pi_coeffs()) == a);
        CHECK(RingElement::from_gamma_basis(g, a.gamma_basis_coeffs()) == a);
    }
}

TEST_CASE("products agree with their coordinate kernels") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const int g = 1 + trial % 4;
        const RingElement a = random_element(g, rng), b = random_element(g, rng), c = random_element(g, rng);
        CHECK(pontryagin(a, b) == pontryagin(b, a));
        CHECK(pontryagin(pontryagin(a, b), c) == pontryagin(a, pontryagin(b, c)));
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(pontryagin(a, b + c) == pontryagin(a, b) + pontryagin(a, c));
        CHECK(compose(a, b + c) == compose(a, b) + compose(a, c));
    }
}

TEST_CASE("transpose") {
    for (int g = 1; g <= 4; ++g) {
        CHECK(transpose(gamma(g, 1)) == gamma(g, 1));
        for (int i = 0; i <= 2 * g; ++i) CHECK(transpose(pi(g, i)) == pi(g, 2 * g - i));
        for (long n = -3; n <= 4; ++n) {
            CHECK(transpose(transpose(gamma(g, n))) == gamma(g, n));
            for (long m = -3; m <= 4; ++m)
                CHECK(transpose(compose(gamma(g, n), gamma(g, m))) == compose(transpose(gamma(g, m)), transpose(gamma(g, n))));
        }
    }
    // reversing projector coordinates does not respect the Pontryagin product
    CHECK(transpose(pontryagin(gamma(1, 1), gamma(1, 1))) != pontryagin(transpose(gamma(1, 1)), transpose(gamma(1, 1))));
}

TEST_CASE("reduce_mod") {
    for (int g = 1; g <= 4; ++g) {
        const IdealMask full{g, 2 * g + 1};
        for (long n = -3; n <= 3; ++n) CHECK(reduce_mod(gamma(g, n), full) == gamma(g, n));
        for (int d = 1; d <= 5; ++d) {
            const IdealMask mask{g, d + 1};
            const RingElement gen = pontryagin_power(gamma(g, 1) - gamma(g, 0), static_cast<unsigned>(d + 1));
            CHECK(reduce_mod(gen, mask).is_zero());
            for (long m = -4; m <= 4; ++m) CHECK(reduce_mod(pontryagin(gamma(g, m), gen), mask).is_zero());
            const RingElement r = reduce_mod(gamma(g, 5), mask);
            CHECK(reduce_mod(r, mask) == r);
        }
    }
}

TEST_CASE("gamma combination realizes to the ring") {
    GammaCombination c;
    c.add(2, 3);
    c.add(-1, Rational(1, 2));
    c.add(2, -3);
    CHECK(c.terms().size() == 1);
    CHECK(c.realize(2) == Rational(1, 2) * gamma(2, -1));
    CHECK(c.weight_scalar(3) == Rational(-1, 2));
    CHECK(GammaCombination::single(3).scaled_index(2) == GammaCombination::single(6));
}
