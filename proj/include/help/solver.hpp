// Integer point enumeration for a ConstraintSystem: interval propagation,
// depth-first search with the augmentation equality substituted into the
// last variable, a brute-force oracle, and a triviality classifier.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "help/help_core.hpp"

namespace help {

struct UnboundedSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoxTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Box {
    std::vector<long> lo, hi;
    bool empty = false;

    long volume_cap(long cap) const {
        long vol = 1;
        for (size_t i = 0; i < lo.size(); ++i) {
            long w = hi[i] - lo[i] + 1;
            if (w <= 0) return 0;
            if (vol > cap / w) return cap + 1;
            vol *= w;
        }
        return vol;
    }
};

struct SolutionSet {
    long order = 1;
    std::vector<AugTuple> tuples;  // sorted lexicographically, duplicate-free
};

namespace detail {

constexpr long kInf = std::numeric_limits<long>::max() / 4;

inline long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline long ceil_div(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) == (b < 0))) ? q + 1 : q;
}

// tighten [lo,hi] per variable from c.x + const in [0, upper]; a variable
// is bounded as soon as the contributions of all *other* variables are
// finite, so bounds can be seeded even from a fully unbounded start
inline bool tighten(const Constraint& con, std::vector<long>& lo,
                    std::vector<long>& hi) {
    if (!con.sign_required) return false;
    const auto& cs = con.form.coeffs;
    size_t n = cs.size();
    // per-variable contribution intervals, +-kInf marking "unbounded"
    std::vector<long> cmin(n, 0), cmax(n, 0);
    int inf_min = 0, inf_max = 0;
    long fin_min = con.form.constant, fin_max = con.form.constant;
    for (size_t i = 0; i < n; ++i) {
        long c = cs[i];
        if (c == 0) continue;
        bool lo_inf = lo[i] <= -kInf / 2, hi_inf = hi[i] >= kInf / 2;
        long a, b;
        if (c > 0) {
            a = lo_inf ? -kInf : c * lo[i];
            b = hi_inf ? kInf : c * hi[i];
        } else {
            a = hi_inf ? -kInf : c * hi[i];
            b = lo_inf ? kInf : c * lo[i];
        }
        cmin[i] = a;
        cmax[i] = b;
        if (a <= -kInf / 2) ++inf_min; else fin_min += a;
        if (b >= kInf / 2) ++inf_max; else fin_max += b;
    }
    bool changed = false;
    for (size_t i = 0; i < n; ++i) {
        long c = cs[i];
        if (c == 0) continue;
        // interval of rest = form - c*x_i
        bool rest_mn_inf = inf_min - (cmin[i] <= -kInf / 2 ? 1 : 0) > 0;
        bool rest_mx_inf = inf_max - (cmax[i] >= kInf / 2 ? 1 : 0) > 0;
        long mn = fin_min - (cmin[i] <= -kInf / 2 ? 0 : cmin[i]);
        long mx = fin_max - (cmax[i] >= kInf / 2 ? 0 : cmax[i]);
        // 0 <= c*x + rest, rest in [mn, mx]  =>  c*x >= -mx
        // c*x + rest <= upper                =>  c*x <= upper - mn
        long xlo = lo[i], xhi = hi[i];
        if (!rest_mx_inf) {
            long b = -mx;  // c*x >= b
            if (c > 0)
                xlo = std::max(xlo, ceil_div(b, c));
            else
                xhi = std::min(xhi, floor_div(b, c));
        }
        if (con.upper >= 0 && !rest_mn_inf) {
            long b = con.upper - mn;  // c*x <= b
            if (c > 0)
                xhi = std::min(xhi, floor_div(b, c));
            else
                xlo = std::max(xlo, ceil_div(b, c));
        }
        if (xlo != lo[i] || xhi != hi[i]) {
            lo[i] = xlo;
            hi[i] = xhi;
            changed = true;
        }
    }
    return changed;
}

// equality sum nu = 1 used in both directions; same infinity bookkeeping
inline bool tighten_equality(std::vector<long>& lo, std::vector<long>& hi) {
    bool changed = false;
    size_t n = lo.size();
    int inf_lo = 0, inf_hi = 0;
    long fin_lo = 0, fin_hi = 0;
    for (size_t i = 0; i < n; ++i) {
        if (lo[i] <= -kInf / 2) ++inf_lo; else fin_lo += lo[i];
        if (hi[i] >= kInf / 2) ++inf_hi; else fin_hi += hi[i];
    }
    for (size_t i = 0; i < n; ++i) {
        bool rest_lo_inf = inf_lo - (lo[i] <= -kInf / 2 ? 1 : 0) > 0;
        bool rest_hi_inf = inf_hi - (hi[i] >= kInf / 2 ? 1 : 0) > 0;
        long rest_lo = fin_lo - (lo[i] <= -kInf / 2 ? 0 : lo[i]);
        long rest_hi = fin_hi - (hi[i] >= kInf / 2 ? 0 : hi[i]);
        long xlo = rest_hi_inf ? lo[i] : std::max(lo[i], 1 - rest_hi);
        long xhi = rest_lo_inf ? hi[i] : std::min(hi[i], 1 - rest_lo);
        if (xlo != lo[i] || xhi != hi[i]) {
            lo[i] = xlo;
            hi[i] = xhi;
            changed = true;
        }
    }
    return changed;
}

}  // namespace detail

inline Box propagate_bounds(const ConstraintSystem& sys) {
    size_t n = sys.var_classes.size();
    Box box;
    box.lo.assign(n, -detail::kInf);
    box.hi.assign(n, detail::kInf);
    if (sys.prior_bound.size() == n)
        for (size_t i = 0; i < n; ++i) {
            box.lo[i] = -sys.prior_bound[i];
            box.hi[i] = sys.prior_bound[i];
        }
    if (sys.infeasible) {
        box.empty = true;
        return box;
    }
    // On the hyperplane sum nu = 1, eliminating variable j from a form via
    // nu_j = 1 - sum_{i != j} nu_i yields an equally valid inequality whose
    // coefficient pattern is often one-sided, which interval propagation can
    // use even while every variable is still unbounded.
    std::vector<Constraint> work = sys.constraints;
    for (const auto& con : sys.constraints) {
        if (!con.sign_required) continue;
        for (size_t j = 0; j < n; ++j) {
            long cj = con.form.coeffs[j];
            if (cj == 0) continue;
            Constraint sub = con;
            for (size_t i = 0; i < n; ++i) sub.form.coeffs[i] -= cj;
            sub.form.constant += cj;
            work.push_back(std::move(sub));
        }
    }
    for (int round = 0; round < 200; ++round) {
        bool changed = detail::tighten_equality(box.lo, box.hi);
        for (const auto& con : work)
            changed |= detail::tighten(con, box.lo, box.hi);
        for (size_t i = 0; i < n; ++i)
            if (box.lo[i] > box.hi[i]) {
                box.empty = true;
                return box;
            }
        if (!changed) break;
    }
    for (size_t i = 0; i < n; ++i)
        if (box.lo[i] <= -detail::kInf / 2 || box.hi[i] >= detail::kInf / 2)
            throw UnboundedSystem("propagation left variable " +
                                  std::to_string(i) + " unbounded");
    return box;
}

// plain re-check of a candidate tuple against the raw system; deliberately
// simple and independent of the search machinery
inline bool satisfies(const ConstraintSystem& sys, const std::vector<long>& nu) {
    long s = 0;
    for (long v : nu) s += v;
    if (s != 1) return false;
    if (sys.infeasible) return false;
    for (const auto& con : sys.constraints) {
        long val = con.form.constant;
        for (size_t i = 0; i < nu.size(); ++i)
            val += con.form.coeffs[i] * nu[i];
        if (con.sign_required && val < 0) return false;
        if (((val % con.modulus) + con.modulus) % con.modulus != 0) return false;
    }
    return true;
}

inline SolutionSet enumerate(const ConstraintSystem& sys, const Box& box) {
    SolutionSet out;
    out.order = sys.k;
    size_t n = sys.var_classes.size();
    if (box.empty || sys.infeasible || n == 0) return out;

    std::vector<long> nu(n, 0);
    // partial values of every constraint form
    std::vector<long> partial(sys.constraints.size());
    for (size_t c = 0; c < sys.constraints.size(); ++c)
        partial[c] = sys.constraints[c].form.constant;

    // per-constraint suffix min/max contribution of variables >= depth
    auto suffix_bounds = [&](size_t c, size_t depth, long& mn, long& mx) {
        mn = mx = 0;
        const auto& cs = sys.constraints[c].form.coeffs;
        for (size_t i = depth; i < n; ++i) {
            long a = cs[i] * box.lo[i], b = cs[i] * box.hi[i];
            mn += std::min(a, b);
            mx += std::max(a, b);
        }
    };

    std::vector<long> sum_lo(n + 1, 0), sum_hi(n + 1, 0);
    for (size_t i = n; i-- > 0;) {
        sum_lo[i] = sum_lo[i + 1] + box.lo[i];
        sum_hi[i] = sum_hi[i + 1] + box.hi[i];
    }

    std::vector<long> tup;
    auto dfs = [&](auto&& self, size_t depth, long running_sum) -> void {
        if (depth == n - 1) {
            long last = 1 - running_sum;  // equality eliminates the last var
            if (last < box.lo[depth] || last > box.hi[depth]) return;
            nu[depth] = last;
            bool ok = true;
            for (size_t c = 0; c < sys.constraints.size() && ok; ++c) {
                long val = partial[c] +
                           sys.constraints[c].form.coeffs[depth] * last;
                const auto& con = sys.constraints[c];
                if (con.sign_required && val < 0) ok = false;
                else if (((val % con.modulus) + con.modulus) % con.modulus != 0)
                    ok = false;
            }
            if (ok) out.tuples.push_back({sys.k, nu});
            return;
        }
        for (long v = box.lo[depth]; v <= box.hi[depth]; ++v) {
            // equality feasibility for the remaining suffix
            long rem = 1 - running_sum - v;
            if (rem < sum_lo[depth + 1] || rem > sum_hi[depth + 1]) continue;
            nu[depth] = v;
            for (size_t c = 0; c < sys.constraints.size(); ++c)
                partial[c] += sys.constraints[c].form.coeffs[depth] * v;
            bool feasible = true;
            for (size_t c = 0; c < sys.constraints.size() && feasible; ++c) {
                const auto& con = sys.constraints[c];
                long mn, mx;
                suffix_bounds(c, depth + 1, mn, mx);
                if (con.sign_required && partial[c] + mx < 0) feasible = false;
                if (con.upper >= 0 && partial[c] + mn > con.upper)
                    feasible = false;
                if (feasible) {
                    // once every remaining coefficient is divisible by the
                    // modulus, the residue is already decided
                    bool fixed = true;
                    for (size_t i = depth + 1; i < n && fixed; ++i)
                        if (con.form.coeffs[i] % con.modulus != 0) fixed = false;
                    if (fixed && partial[c] % con.modulus != 0) feasible = false;
                }
            }
            if (feasible) self(self, depth + 1, running_sum + v);
            for (size_t c = 0; c < sys.constraints.size(); ++c)
                partial[c] -= sys.constraints[c].form.coeffs[depth] * v;
        }
    };

    if (n == 1) {
        if (box.lo[0] <= 1 && 1 <= box.hi[0]) {
            nu[0] = 1;
            if (satisfies(sys, nu)) out.tuples.push_back({sys.k, nu});
        }
    } else {
        dfs(dfs, 0, 0);
    }

    // re-verify every candidate against the raw system
    std::erase_if(out.tuples,
                  [&](const AugTuple& t) { return !satisfies(sys, t.nu); });
    std::sort(out.tuples.begin(), out.tuples.end());
    out.tuples.erase(std::unique(out.tuples.begin(), out.tuples.end()),
                     out.tuples.end());
    return out;
}

// independent oracle: full Cartesian scan of the box
inline SolutionSet brute_force(const ConstraintSystem& sys, const Box& box) {
    SolutionSet out;
    out.order = sys.k;
    size_t n = sys.var_classes.size();
    if (box.empty || n == 0) return out;
    if (box.volume_cap(100000000L) > 100000000L)
        throw BoxTooLarge("brute_force box exceeds 1e8 points");

    std::vector<long> nu(n);
    for (size_t i = 0; i < n; ++i) nu[i] = box.lo[i];
    while (true) {
        long s = 0;
        for (long v : nu) s += v;
        if (s == 1 && !sys.infeasible) {
            bool ok = true;
            for (const auto& con : sys.constraints) {
                long val = con.form.constant;
                for (size_t i = 0; i < n; ++i)
                    val += con.form.coeffs[i] * nu[i];
                if (con.sign_required && val < 0) { ok = false; break; }
                if (((val % con.modulus) + con.modulus) % con.modulus != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.tuples.push_back({sys.k, nu});
        }
        size_t i = 0;
        while (i < n && nu[i] == box.hi[i]) {
            nu[i] = box.lo[i];
            ++i;
        }
        if (i == n) break;
        ++nu[i];
    }
    std::sort(out.tuples.begin(), out.tuples.end());
    return out;
}

// a chain of tuples (one per divisor of k, d=1 first) is trivial when every
// member is the indicator vector of a single class
inline bool classify_trivial(const std::vector<AugTuple>& chain) {
    for (const auto& t : chain) {
        int nonzero = 0;
        bool one = true;
        for (long v : t.nu) {
            if (v != 0) {
                ++nonzero;
                if (v != 1) one = false;
            }
        }
        if (nonzero != 1 || !one) return false;
    }
    return true;
}

}  // namespace help
