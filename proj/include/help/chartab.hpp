// Character table data model and JSON ingestion with eager validation.

#pragma once

#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "help/cyclotomic.hpp"

namespace help {

struct DatasetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConjClass {
    std::string name;
    long element_order = 0;
    long size = 0;
};

enum class CharKind { ordinary, brauer };

struct Character {
    std::string id;
    CharKind kind = CharKind::ordinary;
    long prime = 0;  // nonzero for Brauer characters
    long degree = 0;
    // one value per class; for Brauer characters, per p-regular class in the
    // order given by the table's class sublist
    std::vector<CycNum> values;
};

struct BrauerTable {
    long prime = 0;
    std::vector<int> class_indices;  // into CharacterTable::classes
    std::vector<Character> characters;
};

struct CharacterTable {
    std::string group_name;
    long group_order = 0;
    long exponent = 0;
    std::vector<ConjClass> classes;
    std::map<long, std::vector<int>> power_maps;  // prime -> class image index
    std::vector<Character> ordinary;
    std::map<long, BrauerTable> brauer;

    int class_index(const std::string& name) const {
        for (size_t i = 0; i < classes.size(); ++i)
            if (classes[i].name == name) return static_cast<int>(i);
        throw DatasetError("unknown class name: " + name);
    }
};

inline std::vector<int> p_regular_classes(const CharacterTable& t, long p) {
    std::vector<int> out;
    for (size_t i = 0; i < t.classes.size(); ++i)
        if (t.classes[i].element_order % p != 0) out.push_back(static_cast<int>(i));
    return out;
}

// non-identity classes with element order dividing k (the variables left by
// the order-filtering proposition; the identity class never carries a
// partial augmentation)
inline std::vector<int> classes_of_order_dividing(const CharacterTable& t, long k) {
    std::vector<int> out;
    for (size_t i = 0; i < t.classes.size(); ++i) {
        long m = t.classes[i].element_order;
        if (m > 1 && k % m == 0) out.push_back(static_cast<int>(i));
    }
    return out;
}

namespace detail {

inline CycNum parse_value(const nlohmann::json& v) {
    if (v.is_number_integer())
        return CycNum(Rational(static_cast<long>(v.get<long long>())));
    if (!v.is_object() || !v.contains("n") || !v.contains("coeffs"))
        throw DatasetError("character value must be an integer or {n, coeffs}");
    long n = v["n"].get<long>();
    std::vector<std::pair<long, Rational>> terms;
    for (const auto& [key, coeff] : v["coeffs"].items())
        terms.emplace_back(std::stol(key),
                           Rational(static_cast<long>(coeff.get<long long>())));
    return CycNum::from_coeffs(n, terms);
}

inline Character parse_character(const nlohmann::json& j, CharKind kind,
                                 long prime, size_t nvalues,
                                 const std::string& fallback_id) {
    Character ch;
    ch.kind = kind;
    ch.prime = prime;
    ch.id = j.contains("id") ? j["id"].get<std::string>() : fallback_id;
    ch.degree = j.at("degree").get<long>();
    for (const auto& v : j.at("values")) ch.values.push_back(parse_value(v));
    if (ch.values.size() != nvalues)
        throw DatasetError(ch.id + ": expected " + std::to_string(nvalues) +
                           " values, got " + std::to_string(ch.values.size()));
    return ch;
}

}  // namespace detail

struct OrthogonalityReport {
    bool ok = true;
    std::string first_failure;
};

inline OrthogonalityReport validate_orthogonality(const CharacterTable& t) {
    OrthogonalityReport rep;
    for (size_t i = 0; i < t.ordinary.size(); ++i) {
        for (size_t j = 0; j <= i; ++j) {
            CycNum acc;
            for (size_t c = 0; c < t.classes.size(); ++c) {
                CycNum prod = mul(t.ordinary[i].values[c],
                                  t.ordinary[j].values[c].galois(-1));
                acc = add(acc, scale(prod, Rational(t.classes[c].size)));
            }
            Rational want = (i == j) ? Rational(t.group_order) : Rational(0);
            if (!acc.is_rational() || acc.rational_value() != want) {
                rep.ok = false;
                rep.first_failure = t.ordinary[i].id + " x " + t.ordinary[j].id;
                return rep;
            }
        }
    }
    return rep;
}

inline void validate_table(const CharacterTable& t) {
    long size_sum = 0, lcm = 1;
    for (const auto& c : t.classes) {
        size_sum += c.size;
        lcm = std::lcm(lcm, c.element_order);
        if (c.element_order < 1 || c.size < 1)
            throw DatasetError("class " + c.name + ": bad order or size");
        if (t.exponent % c.element_order != 0)
            throw DatasetError("class " + c.name +
                               ": order does not divide exponent");
    }
    if (size_sum != t.group_order)
        throw DatasetError("class sizes sum to " + std::to_string(size_sum) +
                           ", expected " + std::to_string(t.group_order));
    if (lcm != t.exponent)
        throw DatasetError("lcm of element orders " + std::to_string(lcm) +
                           " != declared exponent");

    for (const auto& [p, images] : t.power_maps) {
        if (images.size() != t.classes.size())
            throw DatasetError("power map " + std::to_string(p) + ": bad length");
        for (size_t i = 0; i < images.size(); ++i) {
            long m = t.classes[i].element_order;
            long want = m / std::gcd(m, p);
            if (t.classes[images[i]].element_order != want)
                throw DatasetError("power map " + std::to_string(p) + " at " +
                                   t.classes[i].name + ": image order mismatch");
        }
    }

    auto check_char = [&](const Character& ch, const std::vector<int>& idx) {
        if (ch.values[0] != CycNum(Rational(ch.degree)))
            throw DatasetError(ch.id + ": value at identity != degree");
        for (size_t v = 0; v < ch.values.size(); ++v) {
            long m = t.classes[idx[v]].element_order;
            // conductor discipline: the value must live in Q(zeta_m)
            if (m % ch.values[v].conductor() != 0)
                throw DatasetError(ch.id + " at " + t.classes[idx[v]].name +
                                   ": conductor does not divide element order");
        }
    };
    std::vector<int> all(t.classes.size());
    std::iota(all.begin(), all.end(), 0);
    for (const auto& ch : t.ordinary) check_char(ch, all);
    for (const auto& [p, bt] : t.brauer) {
        if (bt.class_indices != p_regular_classes(t, p))
            throw DatasetError("Brauer table " + std::to_string(p) +
                               ": class list is not the p-regular sublist");
        for (const auto& ch : bt.characters) check_char(ch, bt.class_indices);
    }

    auto orth = validate_orthogonality(t);
    if (!orth.ok)
        throw DatasetError("orthogonality failed at " + orth.first_failure);
}

inline CharacterTable load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DatasetError("cannot open dataset: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw DatasetError(std::string("dataset parse error: ") + e.what());
    }

    CharacterTable t;
    try {
    t.group_name = j.at("group").at("name").get<std::string>();
    t.group_order = j.at("group").at("order").get<long>();
    t.exponent = j.at("group").at("exponent").get<long>();

    for (const auto& c : j.at("classes"))
        t.classes.push_back({c.at("name").get<std::string>(),
                             c.at("order").get<long>(), c.at("size").get<long>()});

    for (const auto& [key, images] : j.at("power_maps").items()) {
        std::vector<int> v;
        for (const auto& i : images) v.push_back(i.get<int>());
        t.power_maps[std::stol(key)] = v;
    }

    size_t nc = t.classes.size();
    int auto_id = 1;
    for (const auto& cj : j.at("ordinary"))
        t.ordinary.push_back(detail::parse_character(
            cj, CharKind::ordinary, 0, nc, "chi_" + std::to_string(auto_id++)));

    if (j.contains("brauer")) {
        for (const auto& [key, bj] : j.at("brauer").items()) {
            BrauerTable bt;
            bt.prime = std::stol(key);
            for (const auto& cn : bj.at("classes"))
                bt.class_indices.push_back(t.class_index(cn.get<std::string>()));
            int bid = 1;
            for (const auto& cj : bj.at("characters"))
                bt.characters.push_back(detail::parse_character(
                    cj, CharKind::brauer, bt.prime, bt.class_indices.size(),
                    "chi_" + std::to_string(bid++)));
            t.brauer[bt.prime] = std::move(bt);
        }
    }
    } catch (const nlohmann::json::exception& e) {
        throw DatasetError(std::string("dataset schema error: ") + e.what());
    }

    validate_table(t);
    return t;
}

}  // namespace help
