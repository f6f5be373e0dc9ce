#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <numeric>

#include "help/chartab.hpp"

using namespace help;

static const CharacterTable& table() {
    static CharacterTable t = load_dataset(HELP_DATASET_PATH);
    return t;
}

TEST_CASE("group metadata") {
    const auto& t = table();
    CHECK(t.group_name == "M22");
    CHECK(t.group_order == 443520);
    CHECK(t.exponent == 9240);
    CHECK(t.classes.size() == 12);
    CHECK(t.ordinary.size() == 12);
}

TEST_CASE("class sizes sum to the group order") {
    const auto& t = table();
    long sum = 0;
    for (const auto& c : t.classes) sum += c.size;
    CHECK(sum == 443520);
}

TEST_CASE("ordinary degrees square-sum to the group order") {
    const auto& t = table();
    long sum = 0;
    for (const auto& ch : t.ordinary) sum += ch.degree * ch.degree;
    CHECK(sum == 443520);
}

TEST_CASE("expected class list") {
    const auto& t = table();
    std::vector<std::string> names;
    for (const auto& c : t.classes) names.push_back(c.name);
    CHECK(names == std::vector<std::string>{"1a", "2a", "3a", "4a", "4b", "5a",
                                            "6a", "7a", "7b", "8a", "11a",
                                            "11b"});
    CHECK(t.class_index("8a") == 9);
    CHECK_THROWS_AS(t.class_index("9z"), DatasetError);
}

TEST_CASE("orthogonality relations hold exactly") {
    CHECK(validate_orthogonality(table()).ok);
}

TEST_CASE("power maps exist for every prime divisor and preserve orders") {
    const auto& t = table();
    for (long p : {2, 3, 5, 7, 11}) {
        REQUIRE(t.power_maps.count(p) == 1);
        const auto& pm = t.power_maps.at(p);
        REQUIRE(pm.size() == t.classes.size());
        for (size_t i = 0; i < pm.size(); ++i) {
            long m = t.classes[i].element_order;
            CHECK(t.classes[pm[i]].element_order == m / std::gcd(m, p));
        }
    }
    // squaring sends both order-4 classes to 2a and fixes odd-order classes
    const auto& sq = t.power_maps.at(2);
    CHECK(sq[t.class_index("4a")] == t.class_index("2a"));
    CHECK(sq[t.class_index("4b")] == t.class_index("2a"));
    CHECK(sq[t.class_index("7a")] != t.class_index("1a"));
}

TEST_CASE("p-regular class sublists") {
    const auto& t = table();
    CHECK(p_regular_classes(t, 2).size() == 7);
    CHECK(p_regular_classes(t, 3).size() == 10);
    CHECK(p_regular_classes(t, 5).size() == 11);
    CHECK(p_regular_classes(t, 7).size() == 10);
    CHECK(p_regular_classes(t, 11).size() == 10);
}

TEST_CASE("classes of order dividing k") {
    const auto& t = table();
    auto v4 = classes_of_order_dividing(t, 4);
    REQUIRE(v4.size() == 3);
    CHECK(t.classes[v4[0]].name == "2a");
    CHECK(t.classes[v4[1]].name == "4a");
    CHECK(t.classes[v4[2]].name == "4b");
    CHECK(classes_of_order_dividing(t, 2).size() == 1);
    CHECK(classes_of_order_dividing(t, 12).size() == 5);  // 2a 3a 4a 4b 6a
    // the identity never appears
    for (long k : {2, 6, 12, 9240})
        for (int ci : classes_of_order_dividing(t, k))
            CHECK(t.classes[ci].element_order > 1);
}

TEST_CASE("Brauer tables: primes, sizes, degree sums") {
    const auto& t = table();
    REQUIRE(t.brauer.size() == 5);
    std::map<long, size_t> counts{{2, 7}, {3, 10}, {5, 11}, {7, 10}, {11, 10}};
    for (const auto& [p, n] : counts) {
        REQUIRE(t.brauer.count(p) == 1);
        const auto& bt = t.brauer.at(p);
        CHECK(bt.characters.size() == n);
        CHECK(bt.class_indices == p_regular_classes(t, p));
        for (const auto& ch : bt.characters) {
            CHECK(ch.kind == CharKind::brauer);
            CHECK(ch.prime == p);
            CHECK(ch.values[0] == CycNum(Rational(ch.degree)));
        }
    }
    std::vector<long> deg2;
    for (const auto& ch : t.brauer.at(2).characters) deg2.push_back(ch.degree);
    CHECK(deg2 == std::vector<long>{1, 10, 10, 34, 70, 70, 98});
    std::vector<long> deg3;
    for (const auto& ch : t.brauer.at(3).characters) deg3.push_back(ch.degree);
    CHECK(deg3 == std::vector<long>{1, 21, 45, 45, 49, 49, 55, 99, 210, 231});
}

TEST_CASE("value conductors divide the class element order") {
    const auto& t = table();
    for (const auto& ch : t.ordinary)
        for (size_t c = 0; c < ch.values.size(); ++c)
            CHECK(t.classes[c].element_order % ch.values[c].conductor() == 0);
}

TEST_CASE("missing or malformed datasets are rejected") {
    CHECK_THROWS_AS(load_dataset("/nonexistent/nowhere.json"), DatasetError);

    std::string tmp = "bad_dataset_test.json";
    {
        std::ofstream out(tmp);
        out << "{\"group\": {\"name\": \"X\", \"order\": 7, \"exponent\": 7}}";
    }
    CHECK_THROWS_AS(load_dataset(tmp), DatasetError);
    std::remove(tmp.c_str());
}
