#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "help/analysis.hpp"

using namespace help;

static const CharacterTable& table() {
    static CharacterTable t = load_dataset(HELP_DATASET_PATH);
    return t;
}

static AdmissibleCache& cache() {
    static AdmissibleCache c;
    return c;
}

TEST_CASE("prime element orders admit only the class indicators") {
    const auto& t = table();
    for (long k : {2L, 3L, 5L}) {
        const auto& s = cache().admissible(k, t, 2);
        REQUIRE(s.tuples.size() == 1);
        CHECK(classify_trivial(s.tuples));
        CHECK(cache().case_count(k) == 1);  // the single empty assignment
    }
}

TEST_CASE("admissible counts for the composite surviving orders") {
    const auto& t = table();
    CHECK(cache().admissible(4, t, 2).tuples.size() == 34);
    CHECK(cache().admissible(6, t, 2).tuples.size() == 15);
    CHECK(cache().admissible(7, t, 2).tuples.size() == 4);
    CHECK(cache().admissible(11, t, 2).tuples.size() == 10);
    CHECK(cache().admissible(8, t, 2).tuples.size() == 76);
    CHECK(cache().case_count(8) == 34);
}

TEST_CASE("mixed orders are eliminated, with the right case counts") {
    const auto& t = table();
    std::map<long, long> expect_cases{{10, 1},  {14, 4},  {15, 1},
                                      {21, 4},  {22, 10}, {33, 10},
                                      {35, 4},  {55, 10}, {77, 40}};
    for (const auto& [k, ncases] : expect_cases) {
        CHECK(cache().admissible(k, t, 2).tuples.empty());
        CHECK(cache().case_count(k) == ncases);
    }
}

TEST_CASE("divisor closure short-circuits eliminated multiples") {
    const auto& t = table();
    REQUIRE(cache().admissible(10, t, 1).tuples.empty());
    // 20 = 2 * 10: the case product collapses without building systems
    auto cp = cache().case_product(20, t, 1);
    CHECK(cp.total == 0);
    CHECK(cache().admissible(20, t, 1).tuples.empty());
}

TEST_CASE("worker count does not change the result") {
    const auto& t = table();
    AdmissibleCache c1, c3;
    auto s1 = c1.admissible(8, t, 1);
    auto s3 = c3.admissible(8, t, 3);
    CHECK(s1.tuples == s3.tuples);
    CHECK(c1.case_count(8) == c3.case_count(8));
}

TEST_CASE("case products iterate lexicographically by divisor") {
    const auto& t = table();
    auto cp = cache().case_product(8, t, 1);
    REQUIRE(cp.divisors == std::vector<long>{2, 4});
    // index 0 picks the first order-4 and the first order-2 tuple; the last
    // divisor varies fastest, but order 2 has a single tuple, so indices
    // 0..33 walk the order-4 list in order
    auto k0 = cp.assignment(8, 0);
    auto k1 = cp.assignment(8, 1);
    CHECK(k0.choices.at(2) == cache().admissible(4, t, 1).tuples[0]);
    CHECK(k1.choices.at(2) == cache().admissible(4, t, 1).tuples[1]);
    CHECK(k0.choices.at(4) == cache().admissible(2, t, 1).tuples[0]);
}

TEST_CASE("spectrum statuses") {
    const auto& t = table();
    auto spec = spectrum(t, cache(), 4);
    CHECK(spec.size() == 64);  // divisors of 9240
    for (long k : {1L, 2L, 3L, 4L, 5L, 6L, 7L, 8L, 11L})
        CHECK(spec.at(k) == OrderStatus::element_order);
    CHECK(spec.at(12) == OrderStatus::open);
    CHECK(spec.at(24) == OrderStatus::open_not_computed);
    for (const auto& [k, st] : spec) {
        if (k == 12 || k == 24) continue;
        bool settled = st == OrderStatus::element_order ||
                       st == OrderStatus::eliminated;
        CHECK(settled);
    }
    CHECK(std::string(to_string(spec.at(24))) == "open (not computed)");
}

TEST_CASE("prime graphs coincide") {
    const auto& t = table();
    auto gg = prime_graph_G(t);
    auto gv = prime_graph_VZG(t, cache(), 4);
    CHECK(gg.vertices == std::set<long>{2, 3, 5, 7, 11});
    CHECK(gg.edges == std::set<std::pair<long, long>>{{2, 3}});
    CHECK(gg == gv);
}

TEST_CASE("reports carry counts and triviality") {
    const auto& t = table();
    auto r2 = report(2, t, cache(), 1);
    CHECK(r2.order == 2);
    CHECK_FALSE(r2.eliminated);
    CHECK(r2.all_trivial);
    auto r4 = report(4, t, cache(), 1);
    CHECK_FALSE(r4.all_trivial);  // non-indicator tuples exist
    auto r10 = report(10, t, cache(), 1);
    CHECK(r10.eliminated);
    CHECK_FALSE(r10.all_trivial);
}

TEST_CASE("budgeted runs stream, checkpoint, and resume") {
    const auto& t = table();
    std::string ckpt = "test_budget.checkpoint";
    std::remove(ckpt.c_str());

    int progress_calls = 0;
    auto res1 = budgeted_admissible(
        8, t, cache(), 2, /*budget_cases=*/10, /*budget_secs=*/0, ckpt,
        [&](const BudgetedResult& r) {
            ++progress_calls;
            CHECK(r.cases_done <= r.total_cases);
        },
        /*chunk=*/4);
    CHECK(res1.total_cases == 34);
    CHECK(res1.cases_done == 10);
    CHECK_FALSE(res1.completed);
    CHECK(progress_calls == 3);  // chunks of 4, 4, 2

    {  // checkpoint exists and records the prefix
        std::ifstream in(ckpt);
        long done = 0, total = 0;
        REQUIRE((in >> done >> total));
        CHECK(done == 10);
        CHECK(total == 34);
    }

    auto res2 = budgeted_admissible(8, t, cache(), 2, 0, 0, ckpt, {}, 16);
    CHECK(res2.completed);
    CHECK(res2.cases_done == 34);
    CHECK(res2.partial.tuples == cache().admissible(8, t, 1).tuples);

    // a zero-second budget leaves the checkpoint untouched and returns
    auto res3 = budgeted_admissible(8, t, cache(), 2, 0, 1e-9, ckpt, {}, 16);
    CHECK(res3.cases_done == 34);
    CHECK(res3.completed);
    std::remove(ckpt.c_str());
}

TEST_CASE("chain triviality across divisors") {
    const auto& t = table();
    CHECK(chain_trivial(2, t, cache(), 1));
    CHECK(chain_trivial(3, t, cache(), 1));
    CHECK_FALSE(chain_trivial(4, t, cache(), 1));
}
