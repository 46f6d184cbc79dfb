// qplab: enumerate constrained partitions, verify identities from the
// registry, run verification suites and reproduce the reference tables.

#include "qplab/harness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

namespace {

using namespace qplab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    std::string output = "text";
    int jobs = 1;
    std::uint64_t seed = 0xB6;
    bool json() const { return output == "json"; }
};

std::uint64_t env_seed_fallback() {
    if (const char* env = std::getenv("QPLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            // leave the default on malformed values
        }
    }
    return 0xB6;
}

// --filter i=1,j=1 (repeatable); only the documented keys are accepted here
bool parse_filters(const std::vector<std::string>& raw, PartitionConstraints& c,
                   std::string& error) {
    static const std::set<std::string> allowed = {"i", "j", "m", "bg", "alt", "c1mod4", "c3mod4"};
    for (const std::string& group : raw) {
        std::size_t start = 0;
        while (start <= group.size()) {
            const std::size_t comma = group.find(',', start);
            const std::string item =
                group.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            start = comma == std::string::npos ? group.size() + 1 : comma + 1;
            if (item.empty())
                continue;
            const std::size_t eq = item.find('=');
            if (eq == std::string::npos) {
                error = "malformed filter '" + item + "' (expected key=value)";
                return false;
            }
            const std::string key = item.substr(0, eq);
            if (!allowed.count(key)) {
                error = "unknown filter key '" + key + "'";
                return false;
            }
            int value = 0;
            try {
                value = std::stoi(item.substr(eq + 1));
            } catch (...) {
                error = "malformed filter value in '" + item + "'";
                return false;
            }
            c.filter(*stat_key_from_name(key), value);
        }
    }
    return true;
}

int cmd_enumerate(const GlobalOpts& g, const PartitionConstraints& c, const std::string& emit,
                  const std::string& weight) {
    if (!c.finite_universe()) {
        std::cerr << "error: constraints describe an infinite universe\n";
        return kExitUsage;
    }
    if (emit == "list" || emit == "count") {
        std::vector<Partition> all = enumerate_all(c);
        if (g.json()) {
            nlohmann::json j;
            j["count"] = all.size();
            if (emit == "list") {
                j["partitions"] = nlohmann::json::array();
                for (const auto& p : all)
                    j["partitions"].push_back(p.to_string());
            }
            std::cout << j.dump(2) << '\n';
        } else if (emit == "count") {
            std::cout << all.size() << '\n';
        } else {
            for (const auto& p : all)
                std::cout << p.to_string() << '\n';
        }
        return kExitPass;
    }
    // gf
    WeightKind kind = WeightKind::Norm;
    if (weight == "q")
        kind = WeightKind::Norm;
    else if (weight == "qtz")
        kind = WeightKind::OddTZ;
    else if (weight == "bg")
        kind = WeightKind::BgT;
    else if (weight == "alt")
        kind = WeightKind::AltZ;
    else if (weight == "boulet")
        kind = WeightKind::Boulet;
    else {
        std::cerr << "error: unknown weight '" << weight << "'\n";
        return kExitUsage;
    }
    const LaurentPoly gf = gf_enumerated(c, kind);
    if (g.json())
        std::cout << nlohmann::json{{"gf", gf.to_string()}}.dump(2) << '\n';
    else
        std::cout << gf.to_string() << '\n';
    return kExitPass;
}

void print_report_text(const harness::VerificationReport& r) {
    std::cout << "[" << harness::status_name(r.status) << "] " << r.instance.key();
    if (r.status == harness::Status::Error) {
        std::cout << " : " << r.error_message << '\n';
        return;
    }
    if (r.first_discrepancy) {
        std::cout << " : first discrepancy at " << r.first_discrepancy->monomial << " (lhs "
                  << r.first_discrepancy->lhs << ", rhs " << r.first_discrepancy->rhs << ")";
    }
    std::cout << '\n';
}

int cmd_verify(const GlobalOpts& g, harness::IdentityInstance inst) {
    const harness::VerificationReport r = harness::verify(inst);
    if (g.json())
        std::cout << harness::report_to_json(r) << '\n';
    else
        print_report_text(r);
    switch (r.status) {
    case harness::Status::Pass:
        return kExitPass;
    case harness::Status::Fail:
        return kExitFail;
    case harness::Status::Error:
        return kExitUsage;
    }
    return kExitUsage;
}

int cmd_suite(const GlobalOpts& g, const std::string& name, const std::string& report_path) {
    std::vector<harness::VerificationReport> reports;
    harness::SuiteSummary summary;
    try {
        auto [rs, sm] = harness::run_suite(name, g.jobs);
        reports = std::move(rs);
        summary = sm;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (g.json()) {
        std::cout << harness::reports_to_json(reports, summary) << '\n';
    } else {
        for (const auto& r : reports)
            print_report_text(r);
        std::cout << "suite '" << name << "': " << summary.pass << " pass, " << summary.fail
                  << " fail, " << summary.error << " error\n";
    }
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "error: cannot write report to " << report_path << '\n';
            return kExitUsage;
        }
        out << harness::reports_to_json(reports, summary) << '\n';
    }
    return summary.fail == 0 && summary.error == 0 ? kExitPass : kExitFail;
}

int cmd_list(const GlobalOpts& g) {
    const auto& infos = harness::list_identities();
    if (g.json()) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& info : infos) {
            nlohmann::json e;
            e["id"] = info.id;
            e["anchor"] = info.anchor;
            e["params"] = info.params;
            e["modes"] = nlohmann::json::array();
            for (auto m : info.modes)
                e["modes"].push_back(harness::mode_name(m));
            j.push_back(e);
        }
        std::cout << j.dump(2) << '\n';
        return kExitPass;
    }
    for (const auto& info : infos) {
        std::cout << info.id << "  [";
        for (std::size_t i = 0; i < info.params.size(); ++i)
            std::cout << (i ? "," : "") << info.params[i];
        std::cout << "]  modes:";
        for (auto m : info.modes)
            std::cout << ' ' << harness::mode_name(m);
        std::cout << "  " << info.anchor << '\n';
    }
    return kExitPass;
}

// ---------------------------------------------------------------------------
// reference tables

struct TableList {
    std::string label;
    PartitionConstraints constraints;
    std::vector<std::string> expected; // from the source tables, order-free
};

int print_table_lists(const GlobalOpts& g, const std::string& title,
                      const std::vector<TableList>& lists) {
    bool ok = true;
    nlohmann::json j;
    j["table"] = title;
    j["lists"] = nlohmann::json::array();
    if (!g.json())
        std::cout << title << '\n';
    for (const auto& tl : lists) {
        const std::vector<Partition> got = enumerate_all(tl.constraints);
        std::set<std::string> got_set, want_set(tl.expected.begin(), tl.expected.end());
        for (const auto& p : got)
            got_set.insert(p.to_string());
        const bool match = got_set == want_set;
        ok = ok && match;
        if (g.json()) {
            nlohmann::json e;
            e["label"] = tl.label;
            e["count"] = got.size();
            e["partitions"] = nlohmann::json::array();
            for (const auto& p : got)
                e["partitions"].push_back(p.to_string());
            e["matches_reference"] = match;
            j["lists"].push_back(e);
        } else {
            std::cout << "  " << tl.label << " = " << got.size() << " : ";
            for (std::size_t i = 0; i < got.size(); ++i)
                std::cout << (i ? ", " : "") << got[i].to_string();
            std::cout << '\n';
            if (!match)
                std::cout << "  MISMATCH with the reference list for " << tl.label << '\n';
        }
    }
    if (g.json())
        std::cout << j.dump(2) << '\n';
    return ok ? kExitPass : kExitFail;
}

PartitionConstraints table_constraints(std::optional<int> max_part, std::optional<int> max_parts,
                                       int norm, bool distinct,
                                       std::initializer_list<std::pair<StatKey, int>> filters) {
    PartitionConstraints c;
    c.max_part = max_part;
    c.max_parts = max_parts;
    c.fixed_norm = norm;
    c.distinct = distinct;
    for (const auto& [k, v] : filters)
        c.filter(k, v);
    return c;
}

int cmd_table(const GlobalOpts& g, const std::string& name) {
    if (name == "table2") {
        return print_table_lists(
            g, "p(1,1,14) and p'(1,1,14)",
            {TableList{"p(1,1,14)",
                       table_constraints({}, {}, 14, true,
                                         {{StatKey::OddIndexedOdd, 1}, {StatKey::EvenIndexedOdd, 1}}),
                       {"(13,1)", "(11,3)", "(10,3,1)", "(9,5)", "(9,3,2)", "(8,5,1)", "(7,5,2)",
                        "(7,4,2,1)", "(6,5,3)", "(6,4,3,1)"}},
             TableList{"p'(1,1,14)",
                       table_constraints({}, {}, 14, true,
                                         {{StatKey::C1Mod4, 1}, {StatKey::C3Mod4, 1}}),
                       {"(11,2,1)", "(10,3,1)", "(9,3,2)", "(8,3,2,1)", "(7,6,1)", "(7,5,2)",
                        "(7,4,2,1)", "(6,5,3)", "(6,4,3,1)", "(5,4,3,2)"}}});
    }
    if (name == "table6") {
        return print_table_lists(
            g, "A_3(10,2) and B_3(10,2)",
            {TableList{"A_3(10,2)",
                       table_constraints({}, 3, 10, false, {{StatKey::OddParts, 2}}),
                       {"(9,1)", "(8,1,1)", "(7,3)", "(7,2,1)", "(6,3,1)", "(5,5)", "(5,4,1)",
                        "(5,3,2)", "(4,3,3)"}},
             TableList{"B_3(10,2)", table_constraints(3, {}, 10, false, {{StatKey::AltSum, 2}}),
                       {"(3,3,3,1)", "(3,3,2,1,1)", "(3,2,2,2,1)", "(3,2,2,1,1,1)",
                        "(3,2,1,1,1,1,1)", "(3,1,1,1,1,1,1,1)", "(2,2,2,2,2)", "(2,2,2,1,1,1,1)",
                        "(2,1,1,1,1,1,1,1,1)"}}});
    }
    if (name == "table7") {
        return print_table_lists(
            g, "A_{5,3}(10,2) and B_{3,5}(10,2)",
            {TableList{"A_{5,3}(10,2)",
                       table_constraints(5, 3, 10, false, {{StatKey::OddParts, 2}}),
                       {"(5,5)", "(5,4,1)", "(5,3,2)", "(4,3,3)"}},
             TableList{"B_{3,5}(10,2)",
                       table_constraints(3, 5, 10, false, {{StatKey::AltSum, 2}}),
                       {"(3,3,3,1)", "(3,3,2,1,1)", "(3,2,2,2,1)", "(2,2,2,2,2)"}}});
    }
    if (name == "table8") {
        struct Row {
            int bound, i, j, m;
            std::string expected_poly;
            std::vector<std::string> expected_parts;
        };
        const std::vector<Row> rows = {
            {7, 0, 1, 2, "q^9 + q^11 + q^13 + q^15", {"(4,3,2)", "(6,3,2)", "(6,5,2)", "(6,5,4)"}},
            {7, 1, 0, 1, "q^5 + q^7 + 2*q^9 + q^11 + q^13",
             {"(3,2)", "(5,2)", "(5,4)", "(7,2)", "(7,4)", "(7,6)"}},
            {6, 2, 0, 1, "q^6 + q^8 + q^10 + q^12", {"(3,2,1)", "(5,2,1)", "(5,4,1)", "(5,4,3)"}},
        };
        bool ok = true;
        nlohmann::json j;
        j["table"] = "refined distinct-part generating functions";
        j["rows"] = nlohmann::json::array();
        for (const auto& row : rows) {
            const LaurentPoly poly =
                closed_forms::refined_distinct(row.bound, row.i, row.j, row.m);
            PartitionConstraints c;
            c.max_part = row.bound;
            c.distinct = true;
            c.filter(StatKey::OddIndexedOdd, row.i)
                .filter(StatKey::EvenIndexedOdd, row.j)
                .filter(StatKey::EvenParts, row.m);
            const std::vector<Partition> parts = enumerate_all(c);
            std::set<std::string> got, want(row.expected_parts.begin(), row.expected_parts.end());
            for (const auto& p : parts)
                got.insert(p.to_string());
            const bool match =
                got == want && poly == LaurentPoly::parse(row.expected_poly) &&
                poly == gf_enumerated(c, WeightKind::Norm);
            ok = ok && match;
            std::ostringstream label;
            label << "P~_" << row.bound << "(" << row.i << "," << row.j << "," << row.m << ",q)";
            if (g.json()) {
                nlohmann::json e;
                e["label"] = label.str();
                e["poly"] = poly.to_string();
                e["partitions"] = nlohmann::json::array();
                for (const auto& p : parts)
                    e["partitions"].push_back(p.to_string());
                e["matches_reference"] = match;
                j["rows"].push_back(e);
            } else {
                std::cout << label.str() << " = " << poly.to_string() << " : ";
                for (std::size_t i = 0; i < parts.size(); ++i)
                    std::cout << (i ? ", " : "") << parts[i].to_string();
                std::cout << '\n';
                if (!match)
                    std::cout << "  MISMATCH with the reference row for " << label.str() << '\n';
            }
        }
        if (g.json())
            std::cout << j.dump(2) << '\n';
        return ok ? kExitPass : kExitFail;
    }
    std::cerr << "error: unknown table '" << name << "'\n";
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series and partition identity workbench"};
    app.require_subcommand(1);

    // test hook: lets the exit-code contract be exercised with a real failure
    if (const char* mutate = std::getenv("QPLAB_TEST_MUTATE"); mutate && mutate[0] == '1')
        closed_forms::set_test_mutation(true);

    GlobalOpts g;
    g.seed = env_seed_fallback();
    app.add_option("--output", g.output, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", g.jobs, "worker threads for suites");
    app.add_option("--seed", g.seed, "seed for rational-point verification");

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list constrained partitions");
    enumerate_cmd->fallthrough();
    PartitionConstraints constraints;
    int opt_max_part = -1, opt_max_parts = -1, opt_norm = -1, opt_max_norm = -1;
    bool opt_distinct = false, opt_gap = false;
    std::vector<std::string> opt_filters;
    std::string opt_emit = "list", opt_weight = "q";
    enumerate_cmd->add_option("--max-part", opt_max_part, "largest part bound");
    enumerate_cmd->add_option("--max-parts", opt_max_parts, "number of parts bound");
    enumerate_cmd->add_option("--norm", opt_norm, "exact norm");
    enumerate_cmd->add_option("--max-norm", opt_max_norm, "norm bound");
    enumerate_cmd->add_flag("--distinct", opt_distinct, "distinct parts only");
    enumerate_cmd->add_flag("--gollnitz-gap", opt_gap,
                            "parts > 1, gaps >= 2, no consecutive odd parts");
    enumerate_cmd->add_option("--filter", opt_filters,
                              "stat filter key=value (i,j,m,bg,alt,c1mod4,c3mod4)");
    enumerate_cmd->add_option("--emit", opt_emit, "list, count or gf")
        ->check(CLI::IsMember({"list", "count", "gf"}));
    enumerate_cmd->add_option("--weight", opt_weight, "gf weight: q, qtz, bg, alt, boulet")
        ->check(CLI::IsMember({"q", "qtz", "bg", "alt", "boulet"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify one identity instance");
    verify_cmd->fallthrough();
    std::string opt_id, opt_mode;
    std::vector<std::string> opt_params;
    int opt_cutoff = 0, opt_points = 20;
    verify_cmd->add_option("--id", opt_id, "identity id (see `qplab list`)")->required();
    verify_cmd->add_option("--param", opt_params, "identity parameter key=value");
    verify_cmd->add_option("--mode", opt_mode, "exact, truncated or rational");
    verify_cmd->add_option("--cutoff", opt_cutoff, "truncation cutoff");
    verify_cmd->add_option("--points", opt_points, "rational points to test");

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "run a verification suite");
    suite_cmd->fallthrough();
    std::string opt_suite = "default", opt_report;
    suite_cmd->add_option("--name", opt_suite, "smoke, default or full");
    suite_cmd->add_option("--report", opt_report, "write the JSON report to this path");

    // table
    auto* table_cmd = app.add_subcommand("table", "reproduce a reference table");
    table_cmd->fallthrough();
    std::string opt_table;
    table_cmd->add_option("name", opt_table, "table2, table6, table7 or table8")->required();

    // list
    app.add_subcommand("list", "list the identity registry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return kExitPass;
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (enumerate_cmd->parsed()) {
            if (opt_max_part >= 0)
                constraints.max_part = opt_max_part;
            if (opt_max_parts >= 0)
                constraints.max_parts = opt_max_parts;
            if (opt_norm >= 0)
                constraints.fixed_norm = opt_norm;
            if (opt_max_norm >= 0)
                constraints.max_norm = opt_max_norm;
            constraints.distinct = opt_distinct;
            constraints.gollnitz_gap = opt_gap;
            std::string err;
            if (!parse_filters(opt_filters, constraints, err)) {
                std::cerr << "error: " << err << '\n';
                return kExitUsage;
            }
            return cmd_enumerate(g, constraints, opt_emit, opt_weight);
        }
        if (verify_cmd->parsed()) {
            harness::IdentityInstance inst;
            inst.id = opt_id;
            inst.cutoff = opt_cutoff;
            inst.points = opt_points;
            inst.seed = g.seed;
            for (const std::string& kv : opt_params) {
                const std::size_t eq = kv.find('=');
                if (eq == std::string::npos) {
                    std::cerr << "error: malformed --param '" << kv << "'\n";
                    return kExitUsage;
                }
                try {
                    inst.params[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
                } catch (...) {
                    std::cerr << "error: malformed --param value in '" << kv << "'\n";
                    return kExitUsage;
                }
            }
            if (!opt_mode.empty()) {
                const auto mode = harness::mode_from_name(opt_mode);
                if (!mode) {
                    std::cerr << "error: unknown mode '" << opt_mode << "'\n";
                    return kExitUsage;
                }
                inst.mode = *mode;
            } else if (const auto* info = harness::find_identity(opt_id)) {
                inst.mode = info->modes.front();
            }
            return cmd_verify(g, inst);
        }
        if (suite_cmd->parsed())
            return cmd_suite(g, opt_suite, opt_report);
        if (table_cmd->parsed())
            return cmd_table(g, opt_table);
        return cmd_list(g);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitFail;
    }
}
