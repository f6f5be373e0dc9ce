#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <numeric>
#include <random>

#include "help/cyclotomic.hpp"

using help::CycNum;
using help::Rational;

namespace {

std::mt19937 rng(20240817);

long rand_conductor() {
    static std::uniform_int_distribution<long> d(1, 24);
    return d(rng);
}

CycNum rand_elem(long n) {
    std::uniform_int_distribution<long> e(0, n - 1);
    std::uniform_int_distribution<long> c(-5, 5);
    std::uniform_int_distribution<int> terms(1, 4);
    std::vector<std::pair<long, Rational>> ts;
    int m = terms(rng);
    for (int i = 0; i < m; ++i) ts.emplace_back(e(rng), Rational(c(rng)));
    return CycNum::from_coeffs(n, ts);
}

}  // namespace

TEST_CASE("euler phi and moebius basics") {
    CHECK(help::euler_phi(1) == 1);
    CHECK(help::euler_phi(12) == 4);
    CHECK(help::euler_phi(23) == 22);
    CHECK(help::euler_phi(24) == 8);
    CHECK(CycNum::moebius(1) == 1);
    CHECK(CycNum::moebius(6) == 1);
    CHECK(CycNum::moebius(12) == 0);
    CHECK(CycNum::moebius(30) == -1);
}

TEST_CASE("roots of unity satisfy their defining relations") {
    for (long n = 1; n <= 24; ++n) {
        CycNum z = CycNum::from_root(n, 1);
        CycNum pw(Rational(1));
        for (long i = 0; i < n; ++i) pw = mul(pw, z);
        CHECK(pw == CycNum(Rational(1)));
        CHECK(static_cast<long>(z.coeffs().size()) == help::euler_phi(n));
    }
}

TEST_CASE("known rational values") {
    // zeta_6 + zeta_6^-1 = 1, zeta_4^2 = -1, sum over all 5th roots = 0
    auto z6 = CycNum::from_root(6, 1);
    CHECK(add(z6, z6.galois(-1)) == CycNum(Rational(1)));
    auto z4 = CycNum::from_root(4, 1);
    CHECK(mul(z4, z4) == CycNum(Rational(-1)));
    CycNum s;
    for (long e = 0; e < 5; ++e) s = add(s, CycNum::from_root(5, e));
    CHECK(s.is_zero());
}

TEST_CASE("ring laws on random elements", "[property]") {
    for (int iter = 0; iter < 10000; ++iter) {
        long n = rand_conductor(), m = rand_conductor();
        CycNum a = rand_elem(n), b = rand_elem(m), c = rand_elem(n);
        CHECK(add(a, b) == add(b, a));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        CHECK(add(a, mul(b, CycNum(Rational(0)))) == a);
    }
}

TEST_CASE("embedding is a ring homomorphism and changes nothing",
          "[property]") {
    for (int iter = 0; iter < 2000; ++iter) {
        long n = rand_conductor();
        long m = n * std::uniform_int_distribution<long>(1, 24 / n)(rng);
        CycNum a = rand_elem(n), b = rand_elem(n);
        CHECK(a.embed(m) == a);
        CHECK(add(a.embed(m), b.embed(m)) == add(a, b));
        CHECK(mul(a.embed(m), b.embed(m)) == mul(a, b));
    }
}

TEST_CASE("galois maps compose and respect multiplication", "[property]") {
    for (int iter = 0; iter < 2000; ++iter) {
        long n = rand_conductor();
        std::vector<long> units;
        for (long j = 1; j < n || j == 1; ++j) {
            if (std::gcd(j, n) == 1) units.push_back(j);
            if (j >= n) break;
        }
        std::uniform_int_distribution<size_t> pick(0, units.size() - 1);
        long i = units[pick(rng)], j = units[pick(rng)];
        CycNum a = rand_elem(n), b = rand_elem(n);
        CHECK(a.galois(i).galois(j) == a.galois(i * j % (n == 1 ? 1 : n)));
        CHECK(mul(a, b).galois(i) == mul(a.galois(i), b.galois(i)));
        CHECK(add(a, b).galois(i) == add(a.galois(i), b.galois(i)));
    }
}

TEST_CASE("trace equals the sum of all galois conjugates", "[property]") {
    for (int iter = 0; iter < 1000; ++iter) {
        long n = rand_conductor();
        CycNum a = rand_elem(n);
        CycNum s;
        for (long j = 1; j <= n; ++j)
            if (std::gcd(j, n) == 1) s = add(s, a.galois(j));
        REQUIRE(s.is_rational());
        CHECK(s.rational_value() == a.trace_to_Q());
    }
}

TEST_CASE("trace of a bare root matches the moebius formula") {
    // Tr(zeta_n^t) = mu(n/g) phi(n)/phi(n/g), g = gcd(t,n)
    CHECK(CycNum::trace_of_root(7, 0) == 6);
    CHECK(CycNum::trace_of_root(7, 3) == -1);
    CHECK(CycNum::trace_of_root(12, 2) == 2);    // Tr over Q(zeta_12) of zeta_6
    CHECK(CycNum::trace_of_root(12, 6) == -4);   // of -1
    CHECK(CycNum::trace_of_root(8, 2) == 0);     // of i
}

TEST_CASE("floating point oracle agrees", "[property]") {
    for (int iter = 0; iter < 1000; ++iter) {
        long n = rand_conductor(), m = rand_conductor();
        CycNum a = rand_elem(n), b = rand_elem(m);
        auto prod = mul(a, b);
        auto diff = std::abs(prod.eval_complex() -
                             a.eval_complex() * b.eval_complex());
        CHECK(diff < 1e-9);
        auto tr = a.trace_to_Q();
        std::complex<double> s = 0;
        for (long j = 1; j <= n; ++j)
            if (std::gcd(j, n) == 1) s += a.galois(j).eval_complex();
        CHECK(std::abs(s - std::complex<double>(tr.get_d())) < 1e-9);
    }
}

TEST_CASE("galois rejects non-units, embed rejects non-multiples") {
    CycNum a = CycNum::from_root(6, 1);
    CHECK_THROWS(a.galois(2));
    CHECK_THROWS(a.embed(8));
}
