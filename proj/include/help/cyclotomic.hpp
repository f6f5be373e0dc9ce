// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// A CycNum is stored in the power basis 1, zeta, ..., zeta^(phi(n)-1) after
// reduction modulo the n-th cyclotomic polynomial, so equality is
// coefficientwise and zero-testing is trivial. Coefficients are exact
// rationals (GMP); intermediate reductions can exceed machine words even
// when the final values are small.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace help {

using Rational = mpq_class;
using Integer = mpz_class;

inline long euler_phi(long n) {
    long out = n, m = n;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out -= out / d;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out -= out / m;
    return out;
}

namespace detail {

// Phi_n as integer coefficients, ascending degree. Computed by exact
// division of x^n - 1 by the cyclotomic polynomials of the proper divisors.
inline const std::vector<Integer>& cyclotomic_poly(long n) {
    static std::map<long, std::vector<Integer>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);

    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // build all divisors in increasing order so each division sees its own
    // divisors already cached
    for (long m = 1; m <= n; ++m) {
        if (n % m != 0 || cache.count(m)) continue;
        std::vector<Integer> num(m + 1, 0);
        num[0] = -1;
        num[m] = 1;
        for (long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            const auto& den = cache.at(d);
            std::vector<Integer> quo(num.size() - den.size() + 1, 0);
            for (long i = static_cast<long>(quo.size()) - 1; i >= 0; --i) {
                Integer c = num[i + den.size() - 1] / den.back();
                quo[i] = c;
                if (c != 0)
                    for (size_t j = 0; j < den.size(); ++j)
                        num[i + j] -= c * den[j];
            }
            for (const auto& r : num)
                if (r != 0) throw std::logic_error("cyclotomic division remainder");
            num = std::move(quo);
        }
        cache.emplace(m, std::move(num));
    }
    return cache.at(n);
}

}  // namespace detail

class CycNum {
  public:
    CycNum() : n_(1), coeffs_(1, 0) {}

    explicit CycNum(const Rational& r) : n_(1), coeffs_(1, r) {}
    explicit CycNum(long v) : n_(1), coeffs_(1, Rational(v)) {}

    // canonical representation of zeta_n^e scaled by coefficient dictionaries
    static CycNum from_root(long n, long e) {
        if (n < 1) throw std::invalid_argument("conductor must be positive");
        CycNum out;
        out.n_ = n;
        out.coeffs_.assign(static_cast<size_t>(euler_phi(n)), 0);
        std::vector<Rational> raw(n, 0);
        raw[static_cast<size_t>(((e % n) + n) % n)] = 1;
        out.reduce_(raw);
        return out;
    }

    // sum of c_e * zeta_n^e over a sparse exponent list
    static CycNum from_coeffs(long n,
                              const std::vector<std::pair<long, Rational>>& terms) {
        if (n < 1) throw std::invalid_argument("conductor must be positive");
        CycNum out;
        out.n_ = n;
        out.coeffs_.assign(static_cast<size_t>(euler_phi(n)), 0);
        std::vector<Rational> raw(n, 0);
        for (const auto& [e, c] : terms)
            raw[static_cast<size_t>(((e % n) + n) % n)] += c;
        out.reduce_(raw);
        return out;
    }

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("value is not rational");
        return coeffs_[0];
    }

    bool operator==(const CycNum& o) const {
        if (n_ == o.n_) return coeffs_ == o.coeffs_;
        long m = std::lcm(n_, o.n_);
        return embed(m) == o.embed(m);
    }
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    // view the same complex value inside Q(zeta_m), n | m
    CycNum embed(long m) const {
        if (m % n_ != 0)
            throw std::invalid_argument("embed: target conductor not a multiple");
        if (m == n_) return *this;
        long k = m / n_;
        CycNum out;
        out.n_ = m;
        out.coeffs_.assign(static_cast<size_t>(euler_phi(m)), 0);
        std::vector<Rational> raw(m, 0);
        for (size_t e = 0; e < coeffs_.size(); ++e)
            if (coeffs_[e] != 0) raw[e * k] += coeffs_[e];
        out.reduce_(raw);
        return out;
    }

    friend CycNum add(const CycNum& a, const CycNum& b) {
        long m = std::lcm(a.n_, b.n_);
        CycNum x = a.embed(m), y = b.embed(m);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        return x;
    }

    friend CycNum mul(const CycNum& a, const CycNum& b) {
        long m = std::lcm(a.n_, b.n_);
        CycNum x = a.embed(m), y = b.embed(m);
        std::vector<Rational> raw(m, 0);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < y.coeffs_.size(); ++j) {
                if (y.coeffs_[j] == 0) continue;
                raw[(i + j) % m] += x.coeffs_[i] * y.coeffs_[j];
            }
        }
        CycNum out;
        out.n_ = m;
        out.coeffs_.assign(static_cast<size_t>(euler_phi(m)), 0);
        out.reduce_(raw);
        return out;
    }

    friend CycNum scale(const CycNum& a, const Rational& r) {
        CycNum out = a;
        for (auto& c : out.coeffs_) c *= r;
        return out;
    }

    friend CycNum operator+(const CycNum& a, const CycNum& b) { return add(a, b); }
    friend CycNum operator*(const CycNum& a, const CycNum& b) { return mul(a, b); }
    friend CycNum operator-(const CycNum& a, const CycNum& b) {
        return add(a, scale(b, Rational(-1)));
    }

    // field automorphism zeta_n -> zeta_n^j, gcd(j, n) = 1
    CycNum galois(long j) const {
        long jm = ((j % n_) + n_) % n_;
        if (std::gcd(jm, n_) != 1)
            throw std::invalid_argument("galois: exponent not coprime to conductor");
        std::vector<Rational> raw(n_, 0);
        for (size_t e = 0; e < coeffs_.size(); ++e)
            if (coeffs_[e] != 0) raw[(e * jm) % n_] += coeffs_[e];
        CycNum out;
        out.n_ = n_;
        out.coeffs_.assign(coeffs_.size(), 0);
        out.reduce_(raw);
        return out;
    }

    // Tr from Q(zeta_n) down to Q: sum of all Galois conjugates.
    // Uses Tr(zeta_n^t) = mu(n/g) * phi(n) / phi(n/g) with g = gcd(t, n),
    // applied to an unreduced expansion; linearity makes per-basis-element
    // traces sufficient.
    Rational trace_to_Q() const {
        Rational out = 0;
        for (size_t e = 0; e < coeffs_.size(); ++e)
            if (coeffs_[e] != 0)
                out += coeffs_[e] * trace_of_root(n_, static_cast<long>(e));
        return out;
    }

    static long trace_of_root(long n, long t) {
        long g = std::gcd(((t % n) + n) % n, n);
        long m = n / g;
        return moebius(m) * (euler_phi(n) / euler_phi(m));
    }

    std::complex<double> eval_complex() const {
        std::complex<double> out = 0;
        const double tau = 6.283185307179586476925287;
        for (size_t e = 0; e < coeffs_.size(); ++e) {
            if (coeffs_[e] == 0) continue;
            double c = coeffs_[e].get_d();
            out += c * std::polar(1.0, tau * static_cast<double>(e) /
                                           static_cast<double>(n_));
        }
        return out;
    }

    static long moebius(long n) {
        long out = 1;
        for (long d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                n /= d;
                if (n % d == 0) return 0;
                out = -out;
            }
        }
        if (n > 1) out = -out;
        return out;
    }

  private:
    long n_;
    std::vector<Rational> coeffs_;  // length phi(n_)

    // reduce a length-n coefficient vector modulo Phi_n into coeffs_
    void reduce_(std::vector<Rational>& raw) {
        long deg = static_cast<long>(coeffs_.size());
        const auto& phi_n = detail::cyclotomic_poly(n_);
        for (long i = n_ - 1; i >= deg; --i) {
            if (raw[i] == 0) continue;
            Rational c = raw[i];
            for (long j = 0; j <= deg; ++j)
                raw[i - deg + j] -= c * Rational(phi_n[j]);
        }
        for (long i = 0; i < deg; ++i) coeffs_[i] = raw[i];
        for (auto& c : coeffs_) c.canonicalize();
    }
};

}  // namespace help
