// chaincode — batch CLI for cyclic codes over F_q + uF_q (u^2 = 0).
//
// Subcommands: factor, enumerate, classify, dual, distance, table, verify.
// Exit codes: 0 success, 2 validation error, 3 budget exceeded,
//             4 theorem/oracle or golden-table mismatch (--strict, or verify).

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chaincode/chaincode.hpp"

namespace cc = chaincode;
using nlohmann::json;

namespace {

constexpr std::uint64_t kMaxBudget = 1ull << 24;

struct RunConfig {
    int n = 0;
    std::string field_spec = "GF(2)";
    std::string code_literal;
    std::string example;
    bool as_json = false;
    bool as_csv = false;
    bool oracle = false;
    bool strict = false;
    std::uint64_t budget = kMaxBudget;
};

std::uint64_t default_budget() {
    if (const char* env = std::getenv("CHAINCODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return kMaxBudget;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

json code_json(const cc::CyclicCode& C) {
    return json{{"n", C.n()},
                {"field", C.field().description()},
                {"g", cc::to_string(C.g())},
                {"p", cc::to_string(C.p())},
                {"a", cc::to_string(C.a())},
                {"cardinality", C.cardinality()}};
}

json distance_json(const cc::DistanceReport& r) {
    json j{{"k", r.k},
           {"mds", r.mds},
           {"brute_force", r.brute_force},
           {"cu_generator", cc::to_string(r.cu_generator)},
           {"torsion_generator", cc::to_string(r.torsion_generator)},
           {"torsion_matches", r.torsion_matches}};
    if (r.d)
        j["d"] = *r.d;
    else
        j["d"] = nullptr; // zero code: infinite distance
    return j;
}

json verdict_json(const cc::ReversibilityVerdict& v) {
    json j{{"reversible", v.reversible},
           {"branch", cc::branch_name(v.branch)},
           {"g_self_reciprocal", v.g_self_reciprocal},
           {"a_self_reciprocal", v.a_self_reciprocal},
           {"notes", v.notes}};
    j["p_condition"] = v.p_condition ? json(*v.p_condition) : json(nullptr);
    j["exponent_i"] = v.exponent_i ? json(*v.exponent_i) : json(nullptr);
    j["scalar_b"] = v.scalar_b ? json(*v.scalar_b) : json(nullptr);
    return j;
}

cc::CyclicCode code_from_config(const RunConfig& cfg, const cc::Field& f) {
    if (cfg.code_literal.empty()) cc::fail(cc::errc::parse_error, "--code is required");
    if (cfg.n <= 0) cc::fail(cc::errc::parse_error, "--n must be positive");
    return cc::canonicalize_ideal(cc::parse_generator_list(f, cfg.code_literal), cfg.n, f);
}

int cmd_factor(const RunConfig& cfg) {
    cc::Field f = cc::parse_field(cfg.field_spec);
    cc::Factorization fact = cc::factor_xn_minus_1(cfg.n, f);
    if (cfg.as_json) {
        json factors = json::array();
        for (const auto& [poly, mult] : fact.factors)
            factors.push_back({{"poly", cc::to_string(poly)}, {"mult", mult}});
        std::cout << json{{"n", fact.n}, {"field", f.description()}, {"factors", factors}}.dump()
                  << "\n";
    } else {
        for (const auto& [poly, mult] : fact.factors)
            std::cout << "(" << cc::to_string(poly) << ")^" << mult << "\n";
    }
    return 0;
}

int cmd_enumerate(const RunConfig& cfg) {
    cc::Field f = cc::parse_field(cfg.field_spec);
    auto codes = cc::enumerate_codes(cfg.n, f);
    if (cfg.as_json) {
        json arr = json::array();
        for (const auto& C : codes) arr.push_back(code_json(C));
        std::cout << arr.dump() << "\n";
    } else if (cfg.as_csv) {
        std::cout << "n,field,g,p,a,cardinality\n";
        for (const auto& C : codes)
            std::cout << C.n() << "," << csv_quote(f.description()) << ","
                      << csv_quote(cc::to_string(C.g())) << "," << csv_quote(cc::to_string(C.p()))
                      << "," << csv_quote(cc::to_string(C.a())) << "," << C.cardinality() << "\n";
    } else {
        for (const auto& C : codes)
            std::cout << cc::code_display(C) << "  |C| = " << C.cardinality() << "\n";
        std::cout << "total: " << codes.size() << " codes\n";
    }
    return 0;
}

int cmd_classify(const RunConfig& cfg) {
    cc::Field f = cc::parse_field(cfg.field_spec);
    auto classified = cc::classify_all(cfg.n, f);
    int reversible = 0, disagreements = 0;
    json arr = json::array();
    if (cfg.as_csv) std::cout << "generators,k,d,MDS,reversible,flags\n";
    for (const auto& [C, v] : classified) {
        cc::DistanceReport rep = cc::min_distance(C, cfg.budget);
        reversible += v.reversible;
        std::string flags;
        if (cfg.oracle) {
            bool o = cc::is_reversible_basis_oracle(C);
            if (C.cardinality_exponent() >= 0 &&
                C.cardinality() <= cfg.budget)
                o = cc::is_reversible_oracle(C, cfg.budget);
            if (o != v.reversible) {
                ++disagreements;
                flags = "THEOREM/ORACLE DISAGREEMENT";
            }
        }
        std::string d_str = rep.d ? std::to_string(*rep.d) : std::string("inf");
        if (cfg.as_json) {
            json row = code_json(C);
            row["verdict"] = verdict_json(v);
            row["k"] = rep.k;
            row["d"] = rep.d ? json(*rep.d) : json(nullptr);
            row["mds"] = rep.mds;
            if (!flags.empty()) row["flags"] = flags;
            arr.push_back(std::move(row));
        } else if (cfg.as_csv) {
            std::cout << csv_quote(cc::code_display(C)) << "," << rep.k << "," << d_str << ","
                      << (rep.mds ? "*" : "-") << "," << (v.reversible ? "yes" : "no") << ","
                      << csv_quote(flags) << "\n";
        } else {
            std::cout << cc::code_display(C) << "  k=" << rep.k << " d=" << d_str
                      << (rep.mds ? " MDS" : "") << "  reversible=" << (v.reversible ? "yes" : "no")
                      << " [" << cc::branch_name(v.branch) << "]";
            if (!flags.empty()) std::cout << "  " << flags;
            std::cout << "\n";
        }
    }
    if (cfg.as_json)
        std::cout << arr.dump() << "\n";
    else if (!cfg.as_csv)
        std::cout << "reversible: " << reversible << " of " << classified.size() << "\n";
    if (disagreements && cfg.strict) return 4;
    return 0;
}

int cmd_dual(const RunConfig& cfg) {
    cc::Field f = cc::parse_field(cfg.field_spec);
    cc::CyclicCode C = code_from_config(cfg, f);
    cc::DualReport rep = cc::dual(C);
    bool oracle_ok = true;
    if (cfg.oracle) {
        cc::LinearSpan lit = cc::dual_oracle(C, cfg.budget);
        oracle_ok = lit == rep.dual.span();
    }
    bool product_ok = C.cardinality_exponent() + rep.dual.cardinality_exponent() == 2 * C.n();
    if (cfg.as_json) {
        json ann = json::array();
        for (const auto& g : rep.annihilator) ann.push_back(cc::to_string(g));
        json j{{"code", code_json(C)},
               {"dual", code_json(rep.dual)},
               {"annihilator", ann},
               {"method", cc::dual_method_name(rep.method)},
               {"formula_verified", rep.formula_verified},
               {"cardinality_product_ok", product_ok},
               {"dual_reversible", rep.dual_reversible},
               {"dual_reversible_reason", rep.dual_reversible_reason}};
        if (cfg.oracle) j["oracle_agrees"] = oracle_ok;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "code:  " << cc::code_display(C) << "\n";
        std::cout << "dual:  " << cc::code_display(rep.dual) << "\n";
        std::cout << "method: " << cc::dual_method_name(rep.method)
                  << "  formula_verified: " << (rep.formula_verified ? "yes" : "no") << "\n";
        std::cout << "|C|*|C_dual| = q^" << C.cardinality_exponent() + rep.dual.cardinality_exponent()
                  << " (expect q^" << 2 * C.n() << "): " << (product_ok ? "ok" : "FAIL") << "\n";
        std::cout << "dual reversible: " << (rep.dual_reversible ? "yes" : "no") << " ("
                  << rep.dual_reversible_reason << ")\n";
        if (cfg.oracle)
            std::cout << "oracle: " << (oracle_ok ? "agrees" : "DISAGREES") << "\n";
    }
    if ((!oracle_ok || !product_ok) && cfg.strict) return 4;
    return 0;
}

int cmd_distance(const RunConfig& cfg) {
    cc::Field f = cc::parse_field(cfg.field_spec);
    cc::CyclicCode C = code_from_config(cfg, f);
    cc::DistanceReport rep = cc::min_distance(C, cfg.budget);
    bool oracle_ok = true;
    std::optional<int> od;
    if (cfg.oracle) {
        od = cc::min_distance_oracle(C, cfg.budget);
        oracle_ok = od == rep.d;
    }
    if (cfg.as_json) {
        json j{{"code", code_json(C)}, {"report", distance_json(rep)}};
        if (cfg.oracle) {
            j["oracle_d"] = od ? json(*od) : json(nullptr);
            j["oracle_agrees"] = oracle_ok;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "code: " << cc::code_display(C) << "\n";
        std::cout << "k = " << rep.k << ", d = " << (rep.d ? std::to_string(*rep.d) : "inf")
                  << (rep.mds ? " (MDS)" : "") << "\n";
        std::cout << "torsion generator: " << cc::to_string(rep.torsion_generator)
                  << (rep.torsion_matches ? "" : "  [differs from a(x)]") << "\n";
        if (cfg.oracle)
            std::cout << "oracle d = " << (od ? std::to_string(*od) : "inf") << " ("
                      << (oracle_ok ? "agrees" : "DISAGREES") << ")\n";
    }
    if (!oracle_ok && cfg.strict) return 4;
    return 0;
}

int cmd_table(const RunConfig& cfg) {
    const cc::GoldenTable& table = cc::golden_table(cfg.example);
    auto rows = cc::diff_table(table, cfg.budget);
    int mismatches = 0;
    if (cfg.as_json) {
        json arr = json::array();
        for (const auto& r : rows) {
            const char* status = r.status == cc::RowStatus::Match      ? "MATCH"
                                 : r.status == cc::RowStatus::Flagged  ? "FLAGGED"
                                                                       : "MISMATCH";
            mismatches += r.status == cc::RowStatus::Mismatch;
            json row{{"generators", r.golden->generators},
                     {"published", {{"k", r.golden->k}, {"d", r.golden->d}, {"mds", r.golden->mds}}},
                     {"computed",
                      {{"k", r.computed.k},
                       {"d", r.computed.d ? json(*r.computed.d) : json(nullptr)},
                       {"mds", r.computed.mds}}},
                     {"reversible", r.reversible},
                     {"status", status},
                     {"detail", r.detail},
                     {"code", code_json(r.code)}};
            arr.push_back(std::move(row));
        }
        std::cout << json{{"example", table.id},
                          {"n", table.n},
                          {"field", table.field_spec},
                          {"rows", arr}}
                         .dump()
                  << "\n";
    } else if (cfg.as_csv) {
        std::cout << "generators,k,d,MDS,reversible,flags\n";
        for (const auto& r : rows) {
            mismatches += r.status == cc::RowStatus::Mismatch;
            const char* status = r.status == cc::RowStatus::Match      ? ""
                                 : r.status == cc::RowStatus::Flagged  ? "FLAGGED"
                                                                       : "MISMATCH";
            std::string flags = status;
            if (!r.detail.empty()) flags += (flags.empty() ? "" : ": ") + r.detail;
            std::cout << csv_quote(r.golden->generators) << "," << r.computed.k << ","
                      << (r.computed.d ? std::to_string(*r.computed.d) : "inf") << ","
                      << (r.computed.mds ? "*" : "-") << "," << (r.reversible ? "yes" : "no") << ","
                      << csv_quote(flags) << "\n";
        }
    } else {
        std::cout << "Example " << table.id << " (n = " << table.n << ", " << table.field_spec
                  << ")\n";
        for (const auto& r : rows) {
            const char* status = r.status == cc::RowStatus::Match      ? "MATCH"
                                 : r.status == cc::RowStatus::Flagged  ? "FLAGGED"
                                                                       : "MISMATCH";
            mismatches += r.status == cc::RowStatus::Mismatch;
            std::cout << status << "  " << r.golden->generators << "  k=" << r.computed.k
                      << " d=" << (r.computed.d ? std::to_string(*r.computed.d) : "inf")
                      << (r.computed.mds ? " MDS" : "");
            if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
            std::cout << "\n";
        }
    }
    if (mismatches && cfg.strict) return 4;
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    cc::Field f = cc::parse_field(cfg.field_spec);
    auto codes = cc::enumerate_codes(cfg.n, f);
    int n = cfg.n;

    int rev_total = 0, rev_pass = 0;
    int dist_total = 0, dist_pass = 0;
    int dual_total = 0, dual_pass = 0;
    int double_total = 0, double_pass = 0;

    for (const auto& C : codes) {
        // reversibility: theorem vs both oracles
        bool thm = cc::is_reversible(C).reversible;
        bool basis = cc::is_reversible_basis_oracle(C);
        bool ok = thm == basis;
        if (ok && C.cardinality_exponent() < 63 && C.cardinality() <= cfg.budget)
            ok = thm == cc::is_reversible_oracle(C, cfg.budget);
        ++rev_total;
        rev_pass += ok;

        // distance: torsion-code distance vs brute force over R
        std::uint64_t words = 1;
        bool in_budget = true;
        for (int i = 0; i < C.cardinality_exponent() && in_budget; ++i) {
            if (words > cfg.budget / f.size()) in_budget = false;
            words *= f.size();
        }
        if (in_budget) {
            cc::DistanceReport rep = cc::min_distance(C, cfg.budget);
            std::optional<int> od = cc::min_distance_oracle(C, cfg.budget);
            ++dist_total;
            dist_pass += rep.d == od;
        }

        // duality: formula-or-nullspace dual, orthogonality, cardinality product
        cc::DualReport dr = cc::dual(C);
        bool dok = cc::codes_orthogonal(C, dr.dual) &&
                   C.cardinality_exponent() + dr.dual.cardinality_exponent() == 2 * n;
        ++dual_total;
        dual_pass += dok;

        cc::DualReport ddr = cc::dual(dr.dual);
        ++double_total;
        double_pass += ddr.dual == C;
    }

    bool all_pass = rev_pass == rev_total && dist_pass == dist_total && dual_pass == dual_total &&
                    double_pass == double_total;
    if (cfg.as_json) {
        std::cout << json{{"n", n},
                          {"field", f.description()},
                          {"codes", codes.size()},
                          {"reversibility_equivalence", {{"pass", rev_pass}, {"total", rev_total}}},
                          {"distance_equality", {{"pass", dist_pass}, {"total", dist_total}}},
                          {"dual_orthogonality_and_cardinality",
                           {{"pass", dual_pass}, {"total", dual_total}}},
                          {"double_dual_identity", {{"pass", double_pass}, {"total", double_total}}},
                          {"all_pass", all_pass}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "n = " << n << ", " << f.description() << ": " << codes.size() << " codes\n";
        std::cout << "reversibility equivalence " << rev_pass << "/" << rev_total << "\n";
        std::cout << "distance equality " << dist_pass << "/" << dist_total << "\n";
        std::cout << "dual orthogonality + cardinality product " << dual_pass << "/" << dual_total
                  << "\n";
        std::cout << "double dual identity " << double_pass << "/" << double_total << "\n";
        std::cout << (all_pass ? "PASS" : "FAIL") << "\n";
    }
    return all_pass ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic codes over F_q + uF_q (u^2 = 0)"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.budget = default_budget();

    auto add_common = [&](CLI::App* sub, bool needs_n, bool needs_code) {
        if (needs_n) sub->add_option("--n", cfg.n, "code length")->required();
        sub->add_option("--field", cfg.field_spec, "base field, e.g. GF(2) or GF(4;x^2+x+1)");
        if (needs_code) sub->add_option("--code", cfg.code_literal, "generator list over R")->required();
        sub->add_flag("--json", cfg.as_json, "JSON output");
        sub->add_flag("--csv", cfg.as_csv, "CSV output");
        sub->add_flag("--oracle", cfg.oracle, "cross-validate with brute-force oracle");
        sub->add_flag("--strict", cfg.strict, "exit 4 on any mismatch");
        sub->add_option("--budget", cfg.budget, "enumeration cap (<= 2^24)");
    };

    add_common(app.add_subcommand("factor", "factor x^n - 1 over F_q"), true, false);
    add_common(app.add_subcommand("enumerate", "list all cyclic codes of length n over R"), true,
               false);
    add_common(app.add_subcommand("classify", "reversibility + distance for every code"), true,
               false);
    add_common(app.add_subcommand("dual", "annihilator and dual of one code"), true, true);
    add_common(app.add_subcommand("distance", "minimum Hamming distance of one code"), true, true);
    auto* tab = app.add_subcommand("table", "reproduce a published example table");
    tab->add_option("--example", cfg.example, "example id, 6.1 .. 6.7")->required();
    add_common(tab, false, false);
    add_common(app.add_subcommand("verify", "run every theorem-vs-oracle suite"), true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (cfg.budget > kMaxBudget) cc::fail(cc::errc::budget_exceeded, "budget exceeds 2^24");
        if (app.got_subcommand("factor")) return cmd_factor(cfg);
        if (app.got_subcommand("enumerate")) return cmd_enumerate(cfg);
        if (app.got_subcommand("classify")) return cmd_classify(cfg);
        if (app.got_subcommand("dual")) return cmd_dual(cfg);
        if (app.got_subcommand("distance")) return cmd_distance(cfg);
        if (app.got_subcommand("table")) return cmd_table(cfg);
        if (app.got_subcommand("verify")) return cmd_verify(cfg);
    } catch (const cc::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == cc::errc::budget_exceeded ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
