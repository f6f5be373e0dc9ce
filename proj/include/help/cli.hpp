// Command-line driver: check-order / spectrum / kimmerle /
// dump-constraints / verify, plus the report renderers (text, json, csv).

#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "help/analysis.hpp"
#include "help/chartab.hpp"

namespace help::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::string dataset = "data/m22.json";
    std::string format = "text";  // text | json | csv
    int workers = 1;
    long budget_cases = 0;   // 0 = unlimited
    double budget_secs = 0;  // 0 = unlimited
    std::string checkpoint = "";
};

// ---- rendering --------------------------------------------------------

inline std::string var_name(const CharacterTable& t, int class_idx) {
    return "v" + t.classes[class_idx].name;
}

// "(1/4)(10*v2a + 2*v4a + 2*v4b + 26) >= 0 in Z" for mu forms;
// congruences render as "(v2a + v4a) == 0 mod 2"
inline std::string render_constraint(const CharacterTable& t,
                                     const ConstraintSystem& sys,
                                     const Constraint& con) {
    std::ostringstream body;
    bool first = true;
    for (size_t i = 0; i < con.form.coeffs.size(); ++i) {
        long c = con.form.coeffs[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) body << "-";
        } else {
            body << (c < 0 ? " - " : " + ");
        }
        long a = c < 0 ? -c : c;
        if (a != 1) body << a << "*";
        body << var_name(t, sys.var_classes[i]);
        first = false;
    }
    if (con.form.constant != 0 || first) {
        if (!first) body << (con.form.constant < 0 ? " - " : " + ");
        else if (con.form.constant < 0) body << "-";
        body << (con.form.constant < 0 ? -con.form.constant
                                       : con.form.constant);
    }
    std::ostringstream out;
    out << con.tag << ": ";
    if (con.sign_required)
        out << "(1/" << con.modulus << ")(" << body.str() << ") >= 0 in Z";
    else
        out << "(" << body.str() << ") == 0 mod " << con.modulus;
    return out.str();
}

inline std::vector<std::string> tuple_header(const CharacterTable& t, long k) {
    std::vector<std::string> names;
    for (int ci : classes_of_order_dividing(t, k)) names.push_back(var_name(t, ci));
    return names;
}

inline std::string format_tuple(const AugTuple& tup) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < tup.nu.size(); ++i) {
        if (i) os << ",";
        os << " " << tup.nu[i];
    }
    os << " )";
    return os.str();
}

inline nlohmann::json report_json(const CharacterTable& t,
                                  const EliminationReport& rep) {
    nlohmann::json j;
    j["order"] = rep.order;
    j["case_count"] = rep.case_count;
    j["eliminated"] = rep.eliminated;
    j["all_trivial"] = rep.all_trivial;
    j["classes"] = tuple_header(t, rep.order);
    j["solutions"] = nlohmann::json::array();
    for (const auto& tup : rep.solutions.tuples) j["solutions"].push_back(tup.nu);
    return j;
}

inline void print_report(const CharacterTable& t, const EliminationReport& rep,
                         const std::string& format, std::ostream& os) {
    if (format == "json") {
        os << report_json(t, rep).dump(1) << "\n";
        return;
    }
    auto names = tuple_header(t, rep.order);
    if (format == "csv") {
        for (size_t i = 0; i < names.size(); ++i)
            os << (i ? "," : "") << names[i];
        os << "\n";
        for (const auto& tup : rep.solutions.tuples) {
            for (size_t i = 0; i < tup.nu.size(); ++i)
                os << (i ? "," : "") << tup.nu[i];
            os << "\n";
        }
        return;
    }
    os << "order " << rep.order << ": ";
    if (rep.eliminated) {
        os << "eliminated (0 solutions over " << rep.case_count << " cases)\n";
        return;
    }
    os << rep.solutions.tuples.size() << " solutions over " << rep.case_count
       << " cases" << (rep.all_trivial ? ", all trivial" : "") << "\n";
    os << "  columns: (";
    for (size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
    os << ")\n";
    for (const auto& tup : rep.solutions.tuples)
        os << "  " << format_tuple(tup) << "\n";
}

// ---- expected-tuple files ---------------------------------------------

inline std::vector<std::vector<long>> read_expected(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DatasetError("cannot open expected file: " + path);
    std::vector<std::vector<long>> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r'))
            line.pop_back();
        if (line.empty()) continue;
        std::vector<long> row;
        size_t pos = 0;
        while (pos <= line.size()) {
            size_t next = line.find(',', pos);
            row.push_back(std::stol(line.substr(pos, next - pos)));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        out.push_back(std::move(row));
    }
    return out;
}

// ---- commands ---------------------------------------------------------

inline int cmd_check_order(long k, const RunConfig& cfg,
                           const CharacterTable& t, std::ostream& os) {
    if (k < 1 || t.exponent % k != 0) {
        std::cerr << "error: " << k << " does not divide exp(G) = "
                  << t.exponent << "\n";
        return kExitUsage;
    }
    AdmissibleCache cache;
    if (k >= 24) {
        if (cfg.budget_cases <= 0 && cfg.budget_secs <= 0) {
            std::cerr << "error: order " << k
                      << " requires --budget-cases or --budget-secs\n";
            return kExitUsage;
        }
        std::string ckpt = cfg.checkpoint.empty()
                               ? "help-order" + std::to_string(k) + ".checkpoint"
                               : cfg.checkpoint;
        auto res = budgeted_admissible(
            k, t, cache, cfg.workers, cfg.budget_cases, cfg.budget_secs, ckpt,
            [&](const BudgetedResult& r) {
                std::cerr << "order " << k << ": " << r.cases_done << "/"
                          << r.total_cases << " cases, "
                          << r.partial.tuples.size() << " tuples so far\n";
            });
        os << "order " << k << ": " << (res.completed ? "completed" : "budget hit")
           << " after " << res.cases_done << "/" << res.total_cases
           << " cases, " << res.partial.tuples.size()
           << " tuples found (checkpoint: " << ckpt << ")\n";
        return kExitOk;
    }
    auto rep = report(k, t, cache, cfg.workers);
    print_report(t, rep, cfg.format, os);
    std::cerr << "wall time: " << rep.wall_time << " s\n";
    return kExitOk;
}

inline int cmd_spectrum(const RunConfig& cfg, const CharacterTable& t,
                        std::ostream& os) {
    AdmissibleCache cache;
    auto spec = spectrum(t, cache, cfg.workers);
    if (cfg.format == "json") {
        nlohmann::json j;
        for (const auto& [k, st] : spec) j[std::to_string(k)] = to_string(st);
        os << j.dump(1) << "\n";
    } else if (cfg.format == "csv") {
        os << "order,status\n";
        for (const auto& [k, st] : spec) os << k << "," << to_string(st) << "\n";
    } else {
        for (const auto& [k, st] : spec)
            os << "  " << k << ": " << to_string(st) << "\n";
    }
    return kExitOk;
}

inline int cmd_kimmerle(const RunConfig& cfg, const CharacterTable& t,
                        std::ostream& os) {
    AdmissibleCache cache;
    auto gg = prime_graph_G(t);
    auto gv = prime_graph_VZG(t, cache, cfg.workers);
    auto fmt = [](const PrimeGraph& g) {
        std::ostringstream s;
        s << "vertices {";
        bool f = true;
        for (long p : g.vertices) s << (f ? "" : ",") << p, f = false;
        s << "}, edges {";
        f = true;
        for (auto& [p, q] : g.edges)
            s << (f ? "" : ",") << "(" << p << "," << q << ")", f = false;
        s << "}";
        return s.str();
    };
    bool pass = (gg == gv);
    if (pass)
        os << "PASS: " << fmt(gg) << " on both sides\n";
    else
        os << "FAIL: G has " << fmt(gg) << " but V(ZG) has " << fmt(gv) << "\n";
    return pass ? kExitOk : kExitVerifyFail;
}

inline int cmd_dump_constraints(long k, long case_index, const RunConfig& cfg,
                                const CharacterTable& t, std::ostream& os) {
    if (k < 2 || t.exponent % k != 0) {
        std::cerr << "error: " << k << " does not divide exp(G) = "
                  << t.exponent << "\n";
        return kExitUsage;
    }
    AdmissibleCache cache;
    auto cp = cache.case_product(k, t, cfg.workers);
    if (cp.total == 0) {
        os << "order " << k << ": a proper divisor is already eliminated; "
           << "no systems are built\n";
        return kExitOk;
    }
    if (case_index < 0 || case_index >= cp.total) {
        std::cerr << "error: case index " << case_index << " out of range [0,"
                  << cp.total << ")\n";
        return kExitUsage;
    }
    auto kase = cp.assignment(k, case_index);
    os << "order " << k << ", case " << case_index << " of " << cp.total << "\n";
    for (const auto& [d, tup] : kase.choices)
        os << "  u^" << d << " (order " << k / d << ") -> "
           << format_tuple(tup) << "\n";
    auto sys = build_system(t, k, kase);
    if (sys.infeasible) {
        os << "infeasible at " << sys.infeasible_tag << "\n";
        return kExitOk;
    }
    for (const auto& con : sys.constraints)
        os << "  " << render_constraint(t, sys, con) << "\n";
    return kExitOk;
}

inline int cmd_verify(long k, const std::string& expected_path,
                      const RunConfig& cfg, const CharacterTable& t,
                      std::ostream& os) {
    namespace fs = std::filesystem;
    fs::path expdir = fs::path(cfg.dataset).parent_path() / "expected";
    std::vector<std::pair<long, std::string>> jobs;
    if (k > 0) {
        std::string path = expected_path.empty()
                               ? (expdir / ("order_" + std::to_string(k) +
                                            ".txt")).string()
                               : expected_path;
        jobs.emplace_back(k, path);
    } else {
        if (!fs::is_directory(expdir)) {
            std::cerr << "error: no expected-file directory at " << expdir
                      << "\n";
            return kExitUsage;
        }
        for (const auto& e : fs::directory_iterator(expdir)) {
            auto name = e.path().filename().string();
            if (name.rfind("order_", 0) == 0)
                jobs.emplace_back(std::stol(name.substr(6)),
                                  e.path().string());
        }
        std::sort(jobs.begin(), jobs.end());
    }

    AdmissibleCache cache;
    bool all_ok = true;
    for (const auto& [order, path] : jobs) {
        auto expect = read_expected(path);
        std::set<std::vector<long>> want(expect.begin(), expect.end());
        std::set<std::vector<long>> got;
        for (const auto& tup : cache.admissible(order, t, cfg.workers).tuples)
            got.insert(tup.nu);
        if (want == got) {
            os << "order " << order << ": PASS (" << got.size()
               << " tuples)\n";
            continue;
        }
        all_ok = false;
        os << "order " << order << ": FAIL\n";
        for (const auto& row : want)
            if (!got.count(row)) {
                os << "  missing:";
                for (long v : row) os << " " << v;
                os << "\n";
            }
        for (const auto& row : got)
            if (!want.count(row)) {
                os << "  extra:";
                for (long v : row) os << " " << v;
                os << "\n";
            }
    }
    return all_ok ? kExitOk : kExitVerifyFail;
}

// ---- entry point ------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& os = std::cout) {
    CLI::App app{"Torsion-unit order checker for integral group rings (M22 "
                 "dataset bundled)"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--dataset", cfg.dataset, "character table JSON file")
        ->envname("HELP_DATASET")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format: text|json|csv")
        ->envname("HELP_FORMAT")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--workers", cfg.workers, "worker thread count")
        ->envname("HELP_WORKERS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--budget-cases", cfg.budget_cases,
                   "case budget for gated runs (0 = unlimited)")
        ->envname("HELP_BUDGET_CASES");
    app.add_option("--budget-secs", cfg.budget_secs,
                   "wall-time budget in seconds for gated runs (0 = unlimited)")
        ->envname("HELP_BUDGET_SECS");
    app.add_option("--checkpoint", cfg.checkpoint,
                   "checkpoint file for gated runs")
        ->envname("HELP_CHECKPOINT");

    long k_check = 0, k_dump = 0, k_verify = 0, case_index = 0;
    std::string expected_path;

    auto* c_check = app.add_subcommand("check-order",
                                       "admissible tuples for one order");
    c_check->add_option("k", k_check, "unit order")->required();
    auto* c_spec = app.add_subcommand("spectrum",
                                      "status of every divisor of exp(G)");
    auto* c_kim = app.add_subcommand("kimmerle",
                                     "compare prime graphs of G and V(ZG)");
    auto* c_dump = app.add_subcommand("dump-constraints",
                                      "print one case's constraint system");
    c_dump->add_option("k", k_dump, "unit order")->required();
    c_dump->add_option("--case", case_index, "case index (default 0)");
    auto* c_ver = app.add_subcommand("verify",
                                     "diff computed sets against expected files");
    c_ver->add_option("--order", k_verify, "restrict to one order");
    c_ver->add_option("--expected", expected_path, "expected-tuple file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    CharacterTable table;
    try {
        table = load_dataset(cfg.dataset);
    } catch (const std::exception& e) {
        std::cerr << "dataset error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (c_check->parsed()) return cmd_check_order(k_check, cfg, table, os);
        if (c_spec->parsed()) return cmd_spectrum(cfg, table, os);
        if (c_kim->parsed()) return cmd_kimmerle(cfg, table, os);
        if (c_dump->parsed())
            return cmd_dump_constraints(k_dump, case_index, cfg, table, os);
        if (c_ver->parsed())
            return cmd_verify(k_verify, expected_path, cfg, table, os);
    } catch (const DatasetError& e) {
        std::cerr << "dataset error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace help::cli
