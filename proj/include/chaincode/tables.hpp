#pragma once

#include <string>
#include <vector>

#include "chaincode/distance.hpp"
#include "chaincode/io.hpp"
#include "chaincode/reversibility.hpp"

namespace chaincode {

/// One published table row, kept verbatim (including the source's internal
/// inconsistencies; the diff layer, not the data, carries the adjudication).
struct GoldenRow {
    const char* generators;
    int k;
    int d;
    bool mds;
    const char* known_flag; // non-null: documented discrepancy, diff prints FLAGGED
};

struct GoldenTable {
    const char* id;
    int n;
    const char* field_spec;
    std::vector<GoldenRow> rows;
};

inline const std::vector<GoldenTable>& golden_tables() {
    static const std::vector<GoldenTable> tables = {
        {"6.1", 4, "GF(3)",
         {
             {"1", 4, 1, true, nullptr},
             {"x+1", 3, 2, true, nullptr},
             {"x^2+1", 2, 2, false, nullptr},
             {"(x+1)(x^2+1)", 1, 4, true, nullptr},
             {"x+1, u", 4, 1, true, nullptr},
             {"x^2+1, u", 4, 1, true, nullptr},
             {"(x+1)(x^2+1), u", 4, 1, true, nullptr},
             {"(x+1)(x^2+1), u(x+1)", 3, 2, true, nullptr},
             {"(x+1)(x^2+1), u(x^2+1)", 2, 2, false, nullptr},
         }},
        {"6.2", 5, "GF(2)",
         {
             {"1", 5, 1, true, nullptr},
             {"(u+1)(x+1)", 4, 2, true, nullptr},
             {"(u+1)(x^4+x^3+x^2+x+1)", 1, 5, true, nullptr},
             {"x+1+u", 4, 1, false, "published k inconsistent with k = n - deg a (canonical a = 1 gives k = 5)"},
             {"x^4+x^3+x^2+x+1+u", 4, 1, false,
              "published k inconsistent with k = n - deg a (canonical a = 1 gives k = 5)"},
         }},
        {"6.3", 6, "GF(3)",
         {
             {"1", 6, 1, true, nullptr},
             {"x+1", 5, 2, true, nullptr},
             {"(x+1)^2", 4, 2, false, nullptr},
             {"(x+1)^3", 3, 2, false, nullptr},
             {"(x+2)^2", 4, 2, false, nullptr},
             {"x+1, u", 6, 1, true, nullptr},
             {"(x+1)^2, u", 6, 1, true, nullptr},
             {"(x+1)^3, u", 6, 1, true, nullptr},
             {"(x+1)^2, u(x+1)", 5, 2, true, nullptr},
             {"(x+1)^3, u(x+1)", 5, 2, true, nullptr},
             {"(x+1)^3, u(x+1)^2", 4, 2, false, nullptr},
             {"(x+2)^2, u", 6, 2, false, nullptr},
         }},
        {"6.4", 4, "GF(2)",
         {
             {"1", 4, 1, true, nullptr},
             {"x+1", 3, 2, true, nullptr},
             {"x+1, u", 4, 1, true, nullptr},
             {"x+1+u", 3, 2, true, nullptr},
             {"x^2+1", 2, 2, false, nullptr},
             {"x^2+1, u", 4, 1, true, nullptr},
             {"x^2+1, u(x+1)", 3, 2, true, nullptr},
             {"x^2+1+u", 2, 2, false, nullptr},
             {"x^2+1+u, u(x+1)", 3, 2, true, nullptr},
             {"x^2+1+u(x+1)", 2, 2, false, nullptr},
             {"x^2+1+u, u(x+1)", 3, 2, true, nullptr},
             {"x^3+1", 1, 2, false, nullptr},
             {"x^3+1, u", 4, 1, true, nullptr},
             {"x^3+1+u, u(x+1)", 3, 2, true, nullptr},
             {"x^3+1+u(x+1), u(x^2+1)", 2, 2, false, nullptr},
             {"x^3+1, u(x+1)", 3, 2, true, nullptr},
             {"x^3+1, u(x^2+1)", 2, 2, false, nullptr},
         }},
        {"6.5", 6, "GF(2)",
         {
             {"1", 6, 1, true, nullptr},
             {"x+1", 5, 2, true, nullptr},
             {"x+1+u", 5, 2, true, nullptr},
             {"x^2+1", 4, 2, false, nullptr},
             {"x^2+1, u", 6, 1, true, nullptr},
             {"x^2+1, u(x+1)", 5, 2, true, nullptr},
             {"x^2+x+1", 4, 2, false, nullptr},
             {"x^2+x+1, u", 6, 1, true, nullptr},
             {"x^3+1", 3, 2, false, nullptr},
             {"x^3+1, u", 6, 1, true, nullptr},
             {"x^3+1, u(x+1)", 5, 2, true, nullptr},
             {"x^3+1+u, u(x+1)", 5, 2, true, nullptr},
         }},
        {"6.6", 7, "GF(2)",
         {
             {"1", 7, 1, true, nullptr},
             {"(1+u)(x+1)", 6, 2, true, nullptr},
             {"(x+1), u", 7, 1, true, nullptr},
             {"x^6+x^5+x^4+x^3+x^2+x+1", 1, 7, true, nullptr},
             {"x^6+x^5+x^4+x^3+x^2+x+1, u", 7, 1, true, nullptr},
         }},
        {"6.7", 10, "GF(5)",
         {
             {"1", 10, 1, true, nullptr},
             {"(x+1)^1", 9, 2, true, nullptr},
             {"(x+1)^2", 8, 2, false, nullptr},
             {"(x+1)^3", 7, 2, false, nullptr},
             {"(x+1)^4", 6, 2, false, nullptr},
             {"(x+1)^5", 5, 2, false, nullptr},
             {"(x+4)^2", 8, 2, false, nullptr},
             {"(x+4)^4", 6, 2, false, nullptr},
             {"x+1, u", 10, 1, true, nullptr},
             {"(x+1)^2, u", 10, 1, true, nullptr},
             {"(x+1)^2, u(x+1)", 9, 2, true, nullptr},
             {"(x+1)^3, u", 10, 1, true, nullptr},
             {"(x+1)^3, u(x+1)", 9, 2, true, nullptr},
             {"(x+1)^3, u(x+1)^2", 8, 2, false, nullptr},
             {"(x+1)^4, u", 10, 1, true, nullptr},
             {"(x+1)^4, u(x+1)", 9, 2, true, nullptr},
             {"(x+4)^2, u", 10, 1, true, nullptr},
             {"(x+1)^2+u*x", 8, 2, false, nullptr},
             {"(x+4)^2+u*x", 8, 2, false, nullptr},
             {"(x+1)(x+4)^2", 7, 3, false, nullptr},
             {"(x+1)^2(x+4)^2", 6, 3, false, nullptr},
             {"(x+1)^3(x+4)^2", 5, 4, false, nullptr},
             {"(x+1)^4(x+4)^2", 4, 5, false, nullptr},
             {"(x+1)^5(x+4)^2", 3, 6, false, nullptr},
             {"(x+1)(x+4)^4", 5, 4, false, nullptr},
             {"(x+1)^2(x+4)^4", 4, 5, false, nullptr},
             {"(x+1)^3(x+4)^4", 3, 5, false, nullptr},
             {"(x+1)^4(x+4)^4", 2, 5, false, nullptr},
             {"(x+1)^5(x+4)^4", 1, 10, true, nullptr},
             {"(x+1)^4+u*x^2, u", 10, 1, true, nullptr},
             {"(x+1)^4+u*x^2, u(x+1)", 9, 2, true, nullptr},
             {"(x+1)^2+u*x, u(x+1)^2", 8, 2, false, nullptr},
             {"(x+1)^2(x+4)^2+u(x^3+x)", 6, 3, false, nullptr},
             {"(x+1)^2(x+4)^2+u(x^3+x^2+x)", 6, 3, false, nullptr},
             {"(x+1)(x+4)^2+u(x^2+x)", 7, 3, false, nullptr},
         }},
    };
    return tables;
}

enum class RowStatus { Match, Mismatch, Flagged };

struct TableDiffRow {
    const GoldenRow* golden;
    CyclicCode code;
    DistanceReport computed;
    bool reversible;
    RowStatus status;
    std::string detail;
};

inline const GoldenTable& golden_table(const std::string& id) {
    for (const auto& t : golden_tables())
        if (id == t.id) return t;
    fail(errc::parse_error, "unknown example id '" + id + "' (expected 6.1 .. 6.7)");
}

/// Recompute one published table from first principles and diff it.
inline std::vector<TableDiffRow> diff_table(const GoldenTable& table, std::uint64_t budget = 1ull << 24) {
    Field f = parse_field(table.field_spec);
    std::vector<TableDiffRow> out;
    for (const GoldenRow& row : table.rows) {
        CyclicCode code = canonicalize_ideal(parse_generator_list(f, row.generators), table.n, f);
        DistanceReport rep = min_distance(code, budget);
        bool rev = is_reversible(code).reversible;
        std::string detail;
        bool k_ok = rep.k == row.k;
        bool d_ok = rep.d.has_value() && *rep.d == row.d;
        bool mds_ok = rep.mds == row.mds;
        if (!k_ok) detail += "k: published " + std::to_string(row.k) + " vs computed " + std::to_string(rep.k) + "; ";
        if (!d_ok)
            detail += "d: published " + std::to_string(row.d) + " vs computed " +
                      (rep.d ? std::to_string(*rep.d) : std::string("inf")) + "; ";
        if (!mds_ok)
            detail += std::string("MDS: published ") + (row.mds ? "*" : "-") + " vs computed " +
                      (rep.mds ? "*" : "-") + "; ";
        RowStatus status = (k_ok && d_ok && mds_ok) ? RowStatus::Match
                           : row.known_flag         ? RowStatus::Flagged
                                                    : RowStatus::Mismatch;
        if (row.known_flag) detail += row.known_flag;
        out.push_back({&row, std::move(code), std::move(rep), rev, status, std::move(detail)});
    }
    return out;
}

} // namespace chaincode
