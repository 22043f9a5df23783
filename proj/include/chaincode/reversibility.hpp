#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chaincode/code.hpp"

namespace chaincode {

enum class ReversibilityBranch { CoprimeThm36, TwoGenThm37, SingleGenThm38, OracleOnly };

inline const char* branch_name(ReversibilityBranch b) {
    switch (b) {
    case ReversibilityBranch::CoprimeThm36: return "CoprimeThm36";
    case ReversibilityBranch::TwoGenThm37: return "TwoGenThm37";
    case ReversibilityBranch::SingleGenThm38: return "SingleGenThm38";
    case ReversibilityBranch::OracleOnly: return "OracleOnly";
    }
    return "?";
}

struct ReversibilityVerdict {
    bool reversible = false;
    ReversibilityBranch branch = ReversibilityBranch::OracleOnly;
    bool g_self_reciprocal = false;
    bool a_self_reciprocal = false;
    std::optional<bool> p_condition;  // absent when vacuous (p = 0)
    std::optional<int> exponent_i;    // i = deg g - deg p, when p != 0
    std::optional<int> scalar_b;      // single-generator witness b, element index
    std::vector<std::string> notes;
};

/// Self-reciprocality up to a unit: f* = c*f for some nonzero scalar c.
/// For monic f with f(0) != 0 this is monic(f*) == f. Generators of equal
/// ideals differ by units, so this is the reading under which the
/// field-level criterion is exact in odd characteristic as well.
inline bool is_self_reciprocal_up_to_unit(const Poly& f) {
    return reciprocal(f).monic() == f;
}

/// Theorem-route reversibility decision on a canonical code.
///
/// All branches reduce to the same three checks: g and a self-reciprocal up
/// to a unit, and (when p != 0) a | (x^i p* - g(0) p) with
/// i = deg g - deg p. Over F_2 the last condition is literally the
/// a | (x^i p* - p) of the two-generator criterion, and for a = g it covers
/// both alternatives of the single-generator criterion (the difference is
/// then a constant multiple of g or zero).
inline ReversibilityVerdict is_reversible(const CyclicCode& C) {
    ReversibilityVerdict v;
    const Field& f = C.field();
    v.branch = C.coprime_case()          ? ReversibilityBranch::CoprimeThm36
               : C.single_generator()    ? ReversibilityBranch::SingleGenThm38
                                         : ReversibilityBranch::TwoGenThm37;
    v.g_self_reciprocal = is_self_reciprocal_up_to_unit(C.g());
    v.a_self_reciprocal = is_self_reciprocal_up_to_unit(C.a());
    if (f.characteristic() != 2 &&
        (v.g_self_reciprocal != is_self_reciprocal(C.g()) || v.a_self_reciprocal != is_self_reciprocal(C.a())))
        v.notes.push_back("self-reciprocality holds up to a unit scalar only");
    if (C.n() % 2 == 0 && C.coprime_case())
        v.notes.push_back("even length but gcd(n,q)=1: coprime-case criterion applies");

    bool p_ok = true;
    if (C.p().is_zero()) {
        v.notes.push_back("p = 0: p-condition vacuous");
    } else {
        int i = C.g().deg() - C.p().deg();
        v.exponent_i = i;
        FieldElement g0 = C.g().coeff(0);
        Poly delta = reciprocal(C.p()).shifted(i) - C.p().scaled(g0);
        p_ok = divides(C.a(), delta);
        v.p_condition = p_ok;
        if (C.single_generator() && p_ok) {
            if (delta.is_zero()) {
                v.notes.push_back("p = x^i p* (single-generator case 1)");
            } else {
                Poly quot = delta / C.g();
                if (quot.deg() == 0) v.scalar_b = quot.coeff_index(0);
            }
        }
    }

    v.reversible = v.g_self_reciprocal && v.a_self_reciprocal && p_ok;
    return v;
}

/// Direct transcription of the definition: every codeword's reversal is a
/// codeword. Streams |C| words; BudgetExceeded when |C| > budget.
inline bool is_reversible_oracle(const CyclicCode& C, std::uint64_t budget = 1ull << 24) {
    bool ok = true;
    C.for_each_codeword(budget, [&](const std::vector<int>& vec) {
        if (!ok) return;
        Word w = vec_to_word(C.field(), vec);
        if (!C.contains(word_reverse(w))) ok = false;
    });
    return ok;
}

/// Linearity-based variant: reversal of every F_q-basis row lies in C.
/// Equivalent to the streaming oracle (reversal is F_q-linear) but cheap.
inline bool is_reversible_basis_oracle(const CyclicCode& C) {
    for (const auto& row : C.span().rows()) {
        Word w = vec_to_word(C.field(), row);
        if (!C.contains(word_reverse(w))) return false;
    }
    return true;
}

/// Field-level oracle: is the q-ary cyclic code <f> of length n reversible?
inline bool field_code_reversible_oracle(const Poly& f, int n) {
    const Field& fld = f.field();
    LinearSpan span(fld, n);
    for (int i = 0; i < n; ++i) {
        Poly row = f.shifted(i);
        std::vector<int> v(n, 0);
        for (int d = 0; d <= row.deg(); ++d) v[d % n] = fld.add(v[d % n], row.coeff_index(d));
        span.insert(std::move(v));
    }
    for (const auto& row : span.rows()) {
        std::vector<int> rev(row.rbegin(), row.rend());
        if (!span.contains(rev)) return false;
    }
    return true;
}

/// Every canonical code of length n, annotated with its verdict.
inline std::vector<std::pair<CyclicCode, ReversibilityVerdict>> classify_all(int n, const Field& field) {
    std::vector<std::pair<CyclicCode, ReversibilityVerdict>> out;
    for (const CyclicCode& c : enumerate_codes(n, field)) out.emplace_back(c, is_reversible(c));
    return out;
}

} // namespace chaincode
