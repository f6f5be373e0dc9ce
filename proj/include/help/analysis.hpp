// Per-order orchestration: recursive admissible-set computation over case
// products, the unit-order spectrum, and the prime-graph comparison.

#pragma once

#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "help/help_core.hpp"
#include "help/solver.hpp"

namespace help {

struct PrimeGraph {
    std::set<long> vertices;
    std::set<std::pair<long, long>> edges;  // ordered pairs p < q

    bool operator==(const PrimeGraph&) const = default;
};

struct EliminationReport {
    long order = 1;
    long case_count = 0;
    SolutionSet solutions;
    bool eliminated = false;
    bool all_trivial = false;
    double wall_time = 0.0;  // seconds
};

namespace detail {

inline std::vector<long> divisors_of(long n) {
    std::vector<long> out;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

// the case product for order k: one admissible tuple of order k/d per
// proper divisor d (1 < d < k), iterated lexicographically by
// (divisor ascending, tuple index)
struct CaseProduct {
    std::vector<long> divisors;
    std::vector<const SolutionSet*> sets;
    long total = 1;

    CaseAssignment assignment(long k, long index) const {
        CaseAssignment kase;
        kase.order = k;
        long rest = index;
        std::vector<long> idx(divisors.size(), 0);
        for (size_t i = divisors.size(); i-- > 0;) {
            long n = static_cast<long>(sets[i]->tuples.size());
            idx[i] = rest % n;
            rest /= n;
        }
        for (size_t i = 0; i < divisors.size(); ++i)
            kase.choices[divisors[i]] = sets[i]->tuples[idx[i]];
        return kase;
    }
};

inline void solve_case_range(const CharacterTable& t, long k,
                             const CaseProduct& cp, long lo, long hi,
                             std::set<AugTuple>& out) {
    for (long i = lo; i < hi; ++i) {
        auto kase = cp.assignment(k, i);
        auto sys = build_system(t, k, kase);
        if (sys.infeasible) continue;
        auto box = propagate_bounds(sys);
        if (box.empty) continue;
        auto sol = enumerate(sys, box);
        out.insert(sol.tuples.begin(), sol.tuples.end());
    }
}

}  // namespace detail

class AdmissibleCache {
  public:
    // admissible partial augmentation tuples for units of order k, as the
    // union over all case assignments; memoized bottom-up in divisor order
    const SolutionSet& admissible(long k, const CharacterTable& t,
                                  int workers = 1) {
        auto it = sets_.find(k);
        if (it != sets_.end()) return it->second;

        SolutionSet out;
        out.order = k;
        auto cp = case_product(k, t, workers);
        cases_[k] = cp.total;
        if (cp.total > 0) {
            std::set<AugTuple> acc = run_cases(t, k, cp, 0, cp.total, workers);
            out.tuples.assign(acc.begin(), acc.end());
        }
        return sets_.emplace(k, std::move(out)).first->second;
    }

    long case_count(long k) const {
        auto it = cases_.find(k);
        return it == cases_.end() ? 0 : it->second;
    }

    bool has(long k) const { return sets_.count(k) != 0; }

    // case product for order k; total = 0 encodes an empty divisor set
    // (no systems are to be built at all)
    detail::CaseProduct case_product(long k, const CharacterTable& t,
                                     int workers) {
        detail::CaseProduct cp;
        for (long d : detail::divisors_of(k)) {
            if (d == 1 || d == k) continue;
            const SolutionSet& s = admissible(k / d, t, workers);
            if (s.tuples.empty()) {
                cp.total = 0;
                return cp;
            }
            cp.divisors.push_back(d);
            cp.sets.push_back(&sets_.at(k / d));
            cp.total *= static_cast<long>(s.tuples.size());
        }
        return cp;
    }

    // chunked concurrent case solve with a deterministic (sorted set) merge
    static std::set<AugTuple> run_cases(const CharacterTable& t, long k,
                                        const detail::CaseProduct& cp, long lo,
                                        long hi, int workers) {
        long n = hi - lo;
        if (workers <= 1 || n < 2) {
            std::set<AugTuple> acc;
            detail::solve_case_range(t, k, cp, lo, hi, acc);
            return acc;
        }
        long nw = std::min<long>(workers, n);
        std::vector<std::set<AugTuple>> parts(nw);
        std::vector<std::exception_ptr> errs(nw);
        std::vector<std::thread> pool;
        for (long w = 0; w < nw; ++w) {
            long a = lo + n * w / nw, b = lo + n * (w + 1) / nw;
            pool.emplace_back([&, w, a, b] {
                try {
                    detail::solve_case_range(t, k, cp, a, b, parts[w]);
                } catch (...) {
                    errs[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
        std::set<AugTuple> acc;
        for (auto& s : parts) acc.insert(s.begin(), s.end());
        return acc;
    }

  private:
    std::map<long, SolutionSet> sets_;
    std::map<long, long> cases_;
};

enum class OrderStatus { element_order, eliminated, open, open_not_computed };

inline const char* to_string(OrderStatus s) {
    switch (s) {
        case OrderStatus::element_order: return "element-order";
        case OrderStatus::eliminated: return "eliminated";
        case OrderStatus::open: return "open";
        default: return "open (not computed)";
    }
}

// statuses for every divisor of exp(G), in increasing order. An order is
// eliminated as soon as a proper divisor is (divisor closure, no systems
// built); order 24 is only computed when explicitly requested.
inline std::map<long, OrderStatus> spectrum(const CharacterTable& t,
                                            AdmissibleCache& cache,
                                            int workers = 1,
                                            bool compute_24 = false) {
    std::set<long> elem_orders;
    for (const auto& c : t.classes) elem_orders.insert(c.element_order);

    std::map<long, OrderStatus> out;
    for (long k : detail::divisors_of(t.exponent)) {
        if (k == 1) {
            out[k] = OrderStatus::element_order;
            continue;
        }
        bool killed = false;
        for (long d = 2; d < k && !killed; ++d)
            if (k % d == 0 && out.at(d) == OrderStatus::eliminated)
                killed = true;
        if (killed) {
            out[k] = OrderStatus::eliminated;
        } else if (elem_orders.count(k)) {
            out[k] = OrderStatus::element_order;
        } else if (k % 24 == 0 && !compute_24) {
            out[k] = OrderStatus::open_not_computed;
        } else {
            out[k] = cache.admissible(k, t, workers).tuples.empty()
                         ? OrderStatus::eliminated
                         : OrderStatus::open;
        }
    }
    return out;
}

namespace detail {

inline std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

inline PrimeGraph prime_graph_G(const CharacterTable& t) {
    PrimeGraph g;
    for (long p : detail::prime_factors(t.group_order)) g.vertices.insert(p);
    for (const auto& c : t.classes) {
        auto ps = detail::prime_factors(c.element_order);
        if (ps.size() == 2 && c.element_order == ps[0] * ps[1])
            g.edges.insert({ps[0], ps[1]});
    }
    return g;
}

inline PrimeGraph prime_graph_VZG(const CharacterTable& t,
                                  AdmissibleCache& cache, int workers = 1) {
    PrimeGraph g;
    auto primes = detail::prime_factors(t.group_order);
    g.vertices.insert(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size(); ++i)
        for (size_t j = i + 1; j < primes.size(); ++j) {
            long pq = primes[i] * primes[j];
            if (t.exponent % pq != 0) continue;  // no torsion unit of that order
            if (!cache.admissible(pq, t, workers).tuples.empty())
                g.edges.insert({primes[i], primes[j]});
        }
    return g;
}

// triviality in the sense of rational conjugacy: every solution of order k,
// together with the tuples of every divisor order it chains through, is a
// class indicator
inline bool chain_trivial(long k, const CharacterTable& t,
                          AdmissibleCache& cache, int workers = 1) {
    for (long d : detail::divisors_of(k)) {
        if (d == 1) continue;
        const auto& s = cache.admissible(d, t, workers);
        for (const auto& tup : s.tuples)
            if (!classify_trivial({tup})) return false;
    }
    return true;
}

inline EliminationReport report(long k, const CharacterTable& t,
                                AdmissibleCache& cache, int workers = 1) {
    EliminationReport rep;
    rep.order = k;
    auto start = std::chrono::steady_clock::now();
    rep.solutions = cache.admissible(k, t, workers);
    rep.case_count = cache.case_count(k);
    rep.eliminated = rep.solutions.tuples.empty();
    rep.all_trivial = !rep.eliminated && chain_trivial(k, t, cache, workers);
    rep.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

// ---- budgeted streaming run (order 24) -------------------------------

struct BudgetedResult {
    long order = 1;
    long total_cases = 0;
    long cases_done = 0;  // prefix [0, cases_done) has been processed
    bool completed = false;
    SolutionSet partial;  // tuples found so far, sorted
};

// Runs the case product of order k over a prefix-resumable index range,
// honoring case and wall-time budgets. Progress and found tuples are
// checkpointed to `checkpoint_path` (plain text: done-count, total, then
// one tuple per line) every `chunk` cases, so an interrupted run resumes.
inline BudgetedResult budgeted_admissible(
    long k, const CharacterTable& t, AdmissibleCache& cache, int workers,
    long budget_cases, double budget_secs, const std::string& checkpoint_path,
    const std::function<void(const BudgetedResult&)>& on_progress = {},
    long chunk = 2000) {
    BudgetedResult res;
    res.order = k;
    res.partial.order = k;
    auto cp = cache.case_product(k, t, workers);
    res.total_cases = cp.total;

    std::set<AugTuple> acc;
    long start_at = 0;
    {  // resume from a previous checkpoint when present and matching
        std::ifstream in(checkpoint_path);
        long done = 0, total = 0;
        if (in && (in >> done >> total) && total == cp.total) {
            start_at = done;
            std::string line;
            std::getline(in, line);
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                AugTuple tup;
                tup.order = k;
                size_t pos = 0;
                while (pos < line.size()) {
                    size_t next = line.find(',', pos);
                    tup.nu.push_back(std::stol(line.substr(pos, next - pos)));
                    if (next == std::string::npos) break;
                    pos = next + 1;
                }
                acc.insert(std::move(tup));
            }
        }
    }

    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
            .count();
    };
    auto save = [&](long done) {
        std::ofstream out(checkpoint_path, std::ios::trunc);
        out << done << " " << cp.total << "\n";
        for (const auto& tup : acc) {
            for (size_t i = 0; i < tup.nu.size(); ++i)
                out << (i ? "," : "") << tup.nu[i];
            out << "\n";
        }
    };

    long done = start_at;
    long case_budget_left =
        budget_cases > 0 ? budget_cases : cp.total - start_at;
    while (done < cp.total && case_budget_left > 0 &&
           (budget_secs <= 0 || elapsed() < budget_secs)) {
        long step = std::min({chunk, cp.total - done, case_budget_left});
        auto part = AdmissibleCache::run_cases(t, k, cp, done, done + step,
                                               workers);
        acc.insert(part.begin(), part.end());
        done += step;
        case_budget_left -= step;
        save(done);
        res.cases_done = done;
        res.partial.tuples.assign(acc.begin(), acc.end());
        if (on_progress) on_progress(res);
    }
    res.cases_done = done;
    res.completed = (done == cp.total);
    res.partial.tuples.assign(acc.begin(), acc.end());
    return res;
}

}  // namespace help
