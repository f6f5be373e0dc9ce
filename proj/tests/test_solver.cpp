#include <catch2/catch_amalgamated.hpp>

#include "help/analysis.hpp"
#include "help/solver.hpp"

using namespace help;

static const CharacterTable& table() {
    static CharacterTable t = load_dataset(HELP_DATASET_PATH);
    return t;
}

static AdmissibleCache& cache() {
    static AdmissibleCache c;
    return c;
}

TEST_CASE("signed integer division helpers") {
    using detail::ceil_div;
    using detail::floor_div;
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(ceil_div(-7, -2) == 4);
}

TEST_CASE("propagation throws on an unconstrained system") {
    ConstraintSystem sys;
    sys.k = 4;
    sys.var_classes = {1, 3, 4};  // no constraints at all
    CHECK_THROWS_AS(propagate_bounds(sys), UnboundedSystem);
}

TEST_CASE("propagation finds the obvious box") {
    // 0 <= x + 2 <= 6 and 0 <= -y + 3 <= 5, plus sum = 1
    ConstraintSystem sys;
    sys.k = 2;
    sys.var_classes = {1, 2};
    Constraint a;
    a.form.coeffs = {1, 0};
    a.form.constant = 2;
    a.modulus = 1;
    a.upper = 6;
    Constraint b;
    b.form.coeffs = {0, -1};
    b.form.constant = 3;
    b.modulus = 1;
    b.upper = 5;
    sys.constraints = {a, b};
    auto box = propagate_bounds(sys);
    REQUIRE_FALSE(box.empty);
    CHECK(box.lo[0] == -2);
    CHECK(box.hi[0] == 3);   // y >= -2 and x + y = 1
    CHECK(box.lo[1] == -2);
    CHECK(box.hi[1] == 3);
}

TEST_CASE("trivial tuple classification") {
    CHECK(classify_trivial({{4, {0, 1, 0}}}));
    CHECK(classify_trivial({{2, {1}}, {4, {0, 0, 1}}}));
    CHECK_FALSE(classify_trivial({{4, {2, -1, 0}}}));
    CHECK_FALSE(classify_trivial({{4, {1, 1, -1}}}));
    CHECK_FALSE(classify_trivial({{4, {0, 0, 0}}}));
}

TEST_CASE("enumerate agrees with brute force on every real system",
          "[property]") {
    const auto& t = table();
    long compared = 0;
    for (long k : {2L, 3L, 4L, 5L, 6L, 7L, 8L, 10L, 11L, 12L, 14L, 15L}) {
        auto cp = cache().case_product(k, t, 2);
        // keep the slow orders to a representative prefix of cases
        long ncases = std::min<long>(cp.total, k >= 12 ? 8 : 40);
        for (long ci = 0; ci < ncases; ++ci) {
            auto sys = build_system(t, k, cp.assignment(k, ci));
            if (sys.infeasible) continue;
            auto box = propagate_bounds(sys);
            auto fast = enumerate(sys, box);
            for (const auto& tup : fast.tuples) CHECK(satisfies(sys, tup.nu));
            if (box.volume_cap(2000000) > 2000000)
                continue;  // full scan too large; covered by satisfies above
            auto slow = brute_force(sys, box);
            REQUIRE(fast.tuples.size() == slow.tuples.size());
            CHECK(fast.tuples == slow.tuples);
            ++compared;
        }
    }
    CHECK(compared > 40);
}

TEST_CASE("solutions are sorted and duplicate-free") {
    const auto& t = table();
    auto cp = cache().case_product(6, t, 1);
    auto sys = build_system(t, 6, cp.assignment(6, 0));
    auto sol = enumerate(sys, propagate_bounds(sys));
    for (size_t i = 1; i < sol.tuples.size(); ++i)
        CHECK(sol.tuples[i - 1] < sol.tuples[i]);
}

TEST_CASE("satisfies enforces augmentation one") {
    ConstraintSystem sys;
    sys.k = 4;
    sys.var_classes = {1, 3, 4};
    CHECK_FALSE(satisfies(sys, {1, 1, 0}));
    CHECK(satisfies(sys, {1, 0, 0}));
    CHECK(satisfies(sys, {3, -1, -1}));
}

TEST_CASE("brute force refuses an oversized box") {
    ConstraintSystem sys;
    sys.k = 2;
    sys.var_classes = {1, 2, 3, 4, 5};
    Box box;
    box.lo.assign(5, -100);
    box.hi.assign(5, 100);
    CHECK_THROWS_AS(brute_force(sys, box), BoxTooLarge);
}
