// End-to-end acceptance run: one line per check, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "help/analysis.hpp"
#include "help/cli.hpp"

using namespace help;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void check(int n, bool ok, const std::string& detail) {
    std::cout << "check " << n << ": " << (ok ? "PASS" : "FAIL") << " — "
              << detail << "\n"
              << std::flush;
    if (!ok) ++failures;
}

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::set<std::vector<long>> expected_set(long k) {
    auto rows = cli::read_expected(std::string(HELP_EXPECTED_DIR) + "/order_" +
                                   std::to_string(k) + ".txt");
    return {rows.begin(), rows.end()};
}

std::set<std::vector<long>> tuple_set(const SolutionSet& s) {
    std::set<std::vector<long>> out;
    for (const auto& t : s.tuples) out.insert(t.nu);
    return out;
}

}  // namespace

int main() {
    int workers = std::min(4u, std::max(1u, std::thread::hardware_concurrency()));
    CharacterTable t;
    try {
        t = load_dataset(HELP_DATASET_PATH);
    } catch (const std::exception& e) {
        std::cout << "check 0: FAIL — dataset: " << e.what() << "\n";
        return 1;
    }
    AdmissibleCache cache;

    {  // 1: prime orders are forced to the class indicator
        auto t0 = Clock::now();
        bool ok = true;
        for (long k : {2L, 3L, 5L}) {
            auto t1 = Clock::now();
            const auto& s = cache.admissible(k, t, workers);
            ok = ok && s.tuples.size() == 1 && classify_trivial(s.tuples) &&
                 secs_since(t1) < 1.0;
        }
        std::ostringstream d;
        d << "orders 2,3,5 each admit exactly the trivial tuple ("
          << secs_since(t0) << " s)";
        check(1, ok, d.str());
    }

    {  // 2: order 4
        auto t0 = Clock::now();
        const auto& s = cache.admissible(4, t, workers);
        bool ok = s.tuples.size() == 34 && tuple_set(s) == expected_set(4) &&
                  secs_since(t0) < 5.0;
        check(2, ok, "order 4 yields the 34 expected triples (" +
                         std::to_string(secs_since(t0)) + " s)");
    }

    {  // 3: order 6
        auto t0 = Clock::now();
        const auto& s = cache.admissible(6, t, workers);
        bool ok = s.tuples.size() == 15 && tuple_set(s) == expected_set(6) &&
                  secs_since(t0) < 5.0;
        check(3, ok, "order 6 yields the 15 expected triples (" +
                         std::to_string(secs_since(t0)) + " s)");
    }

    {  // 4: orders 7 and 11
        auto t0 = Clock::now();
        const auto& s7 = cache.admissible(7, t, workers);
        double e7 = secs_since(t0);
        auto t1 = Clock::now();
        const auto& s11 = cache.admissible(11, t, workers);
        double e11 = secs_since(t1);
        bool ok = s7.tuples.size() == 4 && tuple_set(s7) == expected_set(7) &&
                  s11.tuples.size() == 10 &&
                  tuple_set(s11) == expected_set(11) && e7 < 5.0 && e11 < 5.0;
        std::ostringstream d;
        d << "order 7 -> 4 pairs (" << e7 << " s), order 11 -> 10 pairs ("
          << e11 << " s)";
        check(4, ok, d.str());
    }

    {  // 5: mixed orders eliminated in every case split
        auto t0 = Clock::now();
        std::map<long, long> expect_cases{{10, 1},  {14, 4},  {15, 1},
                                          {21, 4},  {22, 10}, {33, 10},
                                          {35, 4},  {55, 10}, {77, 40}};
        bool ok = true;
        for (const auto& [k, nc] : expect_cases) {
            ok = ok && cache.admissible(k, t, workers).tuples.empty() &&
                 cache.case_count(k) == nc;
        }
        ok = ok && secs_since(t0) < 30.0;
        std::ostringstream d;
        d << "orders 10,14,15,21,22,33,35,55,77 all eliminated ("
          << secs_since(t0) << " s total)";
        check(5, ok, d.str());
    }

    {  // 6: order 8
        auto t0 = Clock::now();
        const auto& s = cache.admissible(8, t, workers);
        bool ok = s.tuples.size() == 76 && cache.case_count(8) == 34 &&
                  tuple_set(s) == expected_set(8) && secs_since(t0) < 60.0;
        std::ostringstream d;
        d << "order 8 yields the 76 expected quadruples over 34 cases ("
          << secs_since(t0) << " s)";
        check(6, ok, d.str());
    }

    {  // 7: order 12
        auto t0 = Clock::now();
        const auto& s = cache.admissible(12, t, workers);
        bool ok = cache.case_count(12) == 510 &&
                  tuple_set(s) == expected_set(12) && secs_since(t0) < 600.0;
        std::ostringstream d;
        d << "order 12 yields the " << s.tuples.size()
          << " expected tuples over 510 cases (" << secs_since(t0) << " s, "
          << workers << " workers)";
        check(7, ok, d.str());
    }

    {  // 8: spectrum
        auto spec = spectrum(t, cache, workers);
        bool ok = spec.size() == 64;
        for (const auto& [k, st] : spec) {
            if (k == 12)
                ok = ok && st == OrderStatus::open;
            else if (k == 24)
                ok = ok && st == OrderStatus::open_not_computed;
            else
                ok = ok && (st == OrderStatus::element_order ||
                            st == OrderStatus::eliminated);
        }
        check(8, ok,
              "spectrum: 12 and 24 open, every other divisor of 9240 is an "
              "element order or eliminated");
    }

    {  // 9: prime-graph comparison
        auto gg = prime_graph_G(t);
        auto gv = prime_graph_VZG(t, cache, workers);
        bool ok = gg == gv && gg.vertices == std::set<long>{2, 3, 5, 7, 11} &&
                  gg.edges == std::set<std::pair<long, long>>{{2, 3}};
        check(9, ok,
              "prime graphs agree: vertices {2,3,5,7,11}, single edge {2,3}");
    }

    {  // 10: constraint rendering spot checks
        auto cp4 = cache.case_product(4, t, 1);
        auto sys4 = build_system(t, 4, cp4.assignment(4, 0));
        auto has = [&](const ConstraintSystem& sys, std::vector<long> c,
                       long k0, long m) {
            for (const auto& con : sys.constraints)
                if (con.form.coeffs == c && con.form.constant == k0 &&
                    con.modulus == m)
                    return true;
            return false;
        };
        bool ok = has(sys4, {10, 2, 2}, 26, 4) &&
                  has(sys4, {14, 6, -2}, 62, 4) && has(sys4, {2, -6, 2}, 50, 4);
        bool rendered = false;
        for (const auto& con : sys4.constraints)
            if (cli::render_constraint(t, sys4, con).find(
                    "(1/4)(10*v2a + 2*v4a + 2*v4b + 26) >= 0 in Z") !=
                std::string::npos)
                rendered = true;
        auto cp7 = cache.case_product(7, t, 1);
        auto sys7 = build_system(t, 7, cp7.assignment(7, 0));
        ok = ok && rendered && has(sys7, {4, -3}, 45, 7) &&
             has(sys7, {4, -3}, 10, 7);
        auto cp11 = cache.case_product(11, t, 1);
        auto sys11 = build_system(t, 11, cp11.assignment(11, 0));
        ok = ok && has(sys11, {6, -5}, 280, 11) && has(sys11, {7, -4}, 70, 11) &&
             has(sys11, {6, -5}, 49, 11);
        check(10, ok, "generated systems reproduce the documented inequalities");
    }

    {  // 11: property sweeps (abridged versions of the unit suites)
        bool ok = true;

        std::mt19937 rng(7);
        std::uniform_int_distribution<long> nd(1, 24), cd(-5, 5);
        for (int i = 0; i < 10000 && ok; ++i) {
            long n = nd(rng), m = nd(rng);
            auto a = CycNum::from_coeffs(
                n, {{rng() % n, Rational(cd(rng))}, {rng() % n, Rational(cd(rng))}});
            auto b = CycNum::from_coeffs(m, {{rng() % m, Rational(cd(rng))}});
            ok = ok && mul(a, b) == mul(b, a) &&
                 std::abs(mul(a, b).eval_complex() -
                          a.eval_complex() * b.eval_complex()) < 1e-9;
        }
        bool ring_ok = ok;

        long size_sum = 0, deg2 = 0;
        for (const auto& c : t.classes) size_sum += c.size;
        for (const auto& ch : t.ordinary) deg2 += ch.degree * ch.degree;
        bool data_ok = size_sum == 443520 && deg2 == 443520 &&
                       validate_orthogonality(t).ok;

        bool mu_ok = true;
        std::vector<int> all(t.classes.size());
        std::iota(all.begin(), all.end(), 0);
        for (long k : {4L, 6L}) {
            auto cp = cache.case_product(k, t, 1);
            auto kase = cp.assignment(k, 0);
            auto vars = classes_of_order_dividing(t, k);
            for (const auto& chi : t.ordinary) {
                std::vector<long> csum(vars.size(), 0);
                long ksum = 0;
                for (long l = 0; l < k; ++l) {
                    auto con = mu_form(t, k, l, chi, all, kase, vars);
                    for (size_t i = 0; i < vars.size(); ++i)
                        csum[i] += con.form.coeffs[i];
                    ksum += con.form.constant;
                }
                mu_ok = mu_ok && csum == std::vector<long>(vars.size(), 0) &&
                        ksum == k * chi.degree;
            }
        }

        bool enum_ok = true;
        for (long k : {4L, 6L, 7L, 8L, 11L}) {
            auto cp = cache.case_product(k, t, 1);
            for (long ci = 0; ci < cp.total && enum_ok; ++ci) {
                auto sys = build_system(t, k, cp.assignment(k, ci));
                if (sys.infeasible) continue;
                auto box = propagate_bounds(sys);
                enum_ok = enumerate(sys, box).tuples ==
                          brute_force(sys, box).tuples;
            }
        }

        ok = ring_ok && data_ok && mu_ok && enum_ok;
        std::ostringstream d;
        d << "properties: ring laws " << (ring_ok ? "ok" : "FAIL")
          << ", dataset sums/orthogonality " << (data_ok ? "ok" : "FAIL")
          << ", multiplicity sums " << (mu_ok ? "ok" : "FAIL")
          << ", search vs scan " << (enum_ok ? "ok" : "FAIL");
        check(11, ok, d.str());
    }

    {  // 12: budgeted streaming run for order 24
        std::string ckpt = "acceptance-order24.checkpoint";
        std::remove(ckpt.c_str());
        long progress = 0;
        auto r1 = budgeted_admissible(
            24, t, cache, workers, /*budget_cases=*/600, /*budget_secs=*/0,
            ckpt, [&](const BudgetedResult& r) { progress = r.cases_done; },
            /*chunk=*/200);
        bool streamed = r1.cases_done == 600 && progress == 600 &&
                        !r1.completed && r1.total_cases > 1000000;
        auto r2 = budgeted_admissible(24, t, cache, workers, 400, 0, ckpt, {},
                                      200);
        bool resumed = r2.cases_done == 1000 && !r2.completed;
        std::remove(ckpt.c_str());
        std::ostringstream d;
        d << "order 24 streamed 600 of " << r1.total_cases
          << " cases, checkpointed, and resumed to " << r2.cases_done;
        check(12, streamed && resumed, d.str());
    }

    std::cout << (failures == 0 ? "ALL CHECKS PASSED"
                                : std::to_string(failures) + " CHECK(S) FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
