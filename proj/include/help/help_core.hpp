// Constraint generation: turns (unit order k, character data, case
// assignment for the powers of u) into an exact integer system over the
// partial augmentations of u.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "help/chartab.hpp"
#include "help/cyclotomic.hpp"

namespace help {

// partial augmentations, indexed parallel to a fixed variable class list
struct AugTuple {
    long order = 1;
    std::vector<long> nu;  // one entry per class of order dividing `order`

    bool operator==(const AugTuple& o) const {
        return order == o.order && nu == o.nu;
    }
    bool operator<(const AugTuple& o) const { return nu < o.nu; }
};

// chosen admissible tuples for the proper powers u^d, 1 < d < k
struct CaseAssignment {
    long order = 1;
    std::map<long, AugTuple> choices;  // d -> tuple of order k/d
};

struct LinearForm {
    std::vector<long> coeffs;  // parallel to ConstraintSystem::var_classes
    long constant = 0;

    auto tie() const { return std::tie(coeffs, constant); }
};

struct Constraint {
    LinearForm form;
    long modulus = 1;
    bool sign_required = true;   // false for pure congruences
    long upper = -1;             // k*degree bound for mu forms, -1 if none
    std::string tag;
};

struct ConstraintSystem {
    long k = 1;
    std::vector<int> var_classes;  // indices into the table's class list
    std::vector<Constraint> constraints;
    std::vector<long> prior_bound;  // |nu_i| <= prior_bound[i] a priori
    bool infeasible = false;        // a variable-free form failed outright
    std::string infeasible_tag;
};

// chi evaluated at u^d through the case assignment: sum nu_c(u^d) chi(c)
inline CycNum chi_at_power(const CharacterTable& t, const Character& chi,
                           const std::vector<int>& chi_classes, long k, long d,
                           const CaseAssignment& kase) {
    if (d == k) return CycNum(Rational(chi.degree));
    auto it = kase.choices.find(d);
    if (it == kase.choices.end())
        throw std::invalid_argument("missing case choice for divisor " +
                                    std::to_string(d));
    const AugTuple& tup = it->second;
    auto vars = classes_of_order_dividing(t, k / d);
    if (vars.size() != tup.nu.size())
        throw std::invalid_argument("case tuple length mismatch at divisor " +
                                    std::to_string(d));
    CycNum acc;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (tup.nu[i] == 0) continue;
        auto pos = std::find(chi_classes.begin(), chi_classes.end(), vars[i]);
        if (pos == chi_classes.end())
            throw std::invalid_argument("character not defined on class " +
                                        t.classes[vars[i]].name);
        acc = add(acc, scale(chi.values[pos - chi_classes.begin()],
                             Rational(tup.nu[i])));
    }
    return acc;
}

namespace detail {

// Tr_{Q(zeta_n)/Q}(a * zeta_n^{-l}) computed term by term: the trace is
// linear, and Tr(zeta_n^t) has a closed form, so no embedding or
// multiplication in the big field is needed.
inline long integral_trace(const CycNum& a, long conductor, long minus_l) {
    long m = a.conductor();
    if (conductor % m != 0)
        throw std::invalid_argument("integral_trace: conductor mismatch");
    long step = conductor / m;
    Rational tr = 0;
    const auto& c = a.coeffs();
    for (size_t e = 0; e < c.size(); ++e)
        if (c[e] != 0)
            tr += c[e] * CycNum::trace_of_root(
                             conductor, static_cast<long>(e) * step + minus_l);
    if (tr.get_den() != 1)
        throw std::runtime_error("non-integral trace: dataset corruption");
    if (!tr.get_num().fits_slong_p())
        throw std::runtime_error("trace overflow");
    return tr.get_num().get_si();
}

}  // namespace detail

// numerator of k*mu_l(u, chi, p) as a linear form over the partial
// augmentations of u, with the constraint "form >= 0 and form == 0 mod k"
inline Constraint mu_form(const CharacterTable& t, long k, long l,
                          const Character& chi,
                          const std::vector<int>& chi_classes,
                          const CaseAssignment& kase,
                          const std::vector<int>& var_classes) {
    if (chi.kind == CharKind::brauer && k % chi.prime == 0)
        throw std::invalid_argument("Brauer character with p | k");
    Constraint con;
    con.modulus = k;
    con.upper = k * chi.degree;
    con.tag = "mu(l=" + std::to_string(l) + ", " + chi.id + ", p=" +
              (chi.kind == CharKind::brauer ? std::to_string(chi.prime) : "*") +
              ")";
    con.form.coeffs.assign(var_classes.size(), 0);

    // d = 1 term, linear in the unknown partial augmentations
    for (size_t i = 0; i < var_classes.size(); ++i) {
        auto pos = std::find(chi_classes.begin(), chi_classes.end(),
                             var_classes[i]);
        if (pos == chi_classes.end())
            throw std::invalid_argument("character not defined on class " +
                                        t.classes[var_classes[i]].name);
        con.form.coeffs[i] = detail::integral_trace(
            chi.values[pos - chi_classes.begin()], k, -l);
    }

    // d > 1 terms are constants once the case assignment fixes u^d
    long constant = 0;
    for (long d = 2; d <= k; ++d) {
        if (k % d != 0) continue;
        long n = k / d;
        CycNum v = chi_at_power(t, chi, chi_classes, k, d, kase);
        constant += detail::integral_trace(v, n, -(l % n));
    }
    con.form.constant = constant;
    return con;
}

// prime-power congruences: for k = p^n, the partial augmentations over the
// classes of each fixed order p^m (0 < m < n) sum to 0 mod p
inline std::vector<Constraint> cl_congruences(const CharacterTable& t, long k,
                                              const std::vector<int>& var_classes) {
    long p = 0;
    for (long q : {2L, 3L, 5L, 7L, 11L, 13L})
        if (k % q == 0) { p = q; break; }
    long kk = k;
    while (kk > 1) {
        if (kk % p != 0)
            throw std::invalid_argument("cl_congruences: k is not a prime power");
        kk /= p;
    }
    std::vector<Constraint> out;
    for (long m = p; m < k; m *= p) {
        Constraint con;
        con.modulus = p;
        con.sign_required = false;
        con.tag = "CL(p=" + std::to_string(p) + ", order=" + std::to_string(m) + ")";
        con.form.coeffs.assign(var_classes.size(), 0);
        bool any = false;
        for (size_t i = 0; i < var_classes.size(); ++i)
            if (t.classes[var_classes[i]].element_order == m) {
                con.form.coeffs[i] = 1;
                any = true;
            }
        if (any) out.push_back(std::move(con));
    }
    return out;
}

// the full system: every mu_l form for the ordinary table and for each
// p-Brauer table with p coprime to k, plus prime-power congruences;
// variable-free forms are checked on the spot and dropped
inline ConstraintSystem build_system(const CharacterTable& t, long k,
                                     const CaseAssignment& kase) {
    ConstraintSystem sys;
    sys.k = k;
    sys.var_classes = classes_of_order_dividing(t, k);

    // a-priori box: eigenvalue multiplicities in [0, chi(1)] force
    // |chi(u)| <= chi(1), and the second orthogonality relation recovers
    // nu_c = (size_c/|G|) * sum_chi chi(u) * conj(chi(c)), so
    // |nu_c| <= (size_c/|G|) * sum_chi chi(1) * |chi(c)|
    for (int ci : sys.var_classes) {
        double s = 0;
        for (const auto& chi : t.ordinary)
            s += static_cast<double>(chi.degree) *
                 std::abs(chi.values[ci].eval_complex());
        double b = static_cast<double>(t.classes[ci].size) * s /
                   static_cast<double>(t.group_order);
        sys.prior_bound.push_back(static_cast<long>(b + 1e-6));
    }

    std::vector<int> all(t.classes.size());
    std::iota(all.begin(), all.end(), 0);

    std::set<std::tuple<std::vector<long>, long, long, bool>> seen;
    auto push = [&](Constraint&& con) {
        bool zero = std::all_of(con.form.coeffs.begin(), con.form.coeffs.end(),
                                [](long c) { return c == 0; });
        if (zero) {
            long c = con.form.constant;
            bool bad = (con.sign_required && c < 0) || (c % con.modulus != 0);
            if (bad && !sys.infeasible) {
                sys.infeasible = true;
                sys.infeasible_tag = con.tag;
            }
            return;
        }
        auto key = std::make_tuple(con.form.coeffs, con.form.constant,
                                   con.modulus, con.sign_required);
        if (seen.insert(key).second) sys.constraints.push_back(std::move(con));
    };

    for (long l = 0; l < k; ++l)
        for (const auto& chi : t.ordinary)
            push(mu_form(t, k, l, chi, all, kase, sys.var_classes));
    for (const auto& [p, bt] : t.brauer) {
        if (k % p == 0) continue;
        for (long l = 0; l < k; ++l)
            for (const auto& chi : bt.characters)
                push(mu_form(t, k, l, chi, bt.class_indices, kase,
                             sys.var_classes));
    }

    bool prime_power = [&] {
        long kk = k;
        for (long q : {2L, 3L, 5L, 7L, 11L, 13L})
            if (kk % q == 0) {
                while (kk % q == 0) kk /= q;
                return kk == 1;
            }
        return false;
    }();
    if (prime_power)
        for (auto& con : cl_congruences(t, k, sys.var_classes))
            push(std::move(con));

    return sys;
}

}  // namespace help
