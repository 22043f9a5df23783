#pragma once

#include <string>
#include <vector>

#include "chaincode/reversibility.hpp"

namespace chaincode {

enum class DualMethod { OddProp43, EvenThm46Case1, EvenThm46Case2, OracleOnly };

inline const char* dual_method_name(DualMethod m) {
    switch (m) {
    case DualMethod::OddProp43: return "OddProp43";
    case DualMethod::EvenThm46Case1: return "EvenThm46Case1";
    case DualMethod::EvenThm46Case2: return "EvenThm46Case2";
    case DualMethod::OracleOnly: return "OracleOnly";
    }
    return "?";
}

struct DualReport {
    std::vector<RPoly> annihilator;  // generator list over R (empty for OracleOnly)
    CyclicCode dual;
    DualMethod method;
    bool formula_verified;           // closed form agreed with the null-space dual
    bool dual_reversible;
    std::string dual_reversible_reason;
};

/// m2 = p * ((x^n - 1)/g) / a; exact by the canonical torsion condition.
inline Poly m2_of(const CyclicCode& C) {
    Poly h = Poly::xn_minus_1(C.field(), C.n()) / C.g();
    return (C.p() * h) / C.a();
}

/// Closed-form annihilator generators, where a closed form is known:
/// coprime lengths for any q, even lengths over F_2. Throws OutOfPaperScope
/// otherwise.
inline std::pair<std::vector<RPoly>, DualMethod> annihilator(const CyclicCode& C) {
    const Field& f = C.field();
    Poly xn1 = Poly::xn_minus_1(f, C.n());
    Poly ha = xn1 / C.a();
    Poly hg = xn1 / C.g();
    if (C.coprime_case())
        return {{RPoly(ha), RPoly(Poly::zero(f), hg)}, DualMethod::OddProp43};
    if (f.size() == 2) {
        Poly m2 = m2_of(C);
        if (C.single_generator()) return {{RPoly(hg, m2)}, DualMethod::EvenThm46Case2};
        return {{RPoly(ha, m2), RPoly(Poly::zero(f), hg)}, DualMethod::EvenThm46Case1};
    }
    fail(errc::out_of_paper_scope, "no closed-form annihilator for non-coprime length over F_q, q != 2");
}

/// All w in R^n with w.c = 0 for every c in C, as an F_q row space
/// (2n columns). Exact: orthogonality to the basis rows is orthogonality
/// to the code.
inline LinearSpan dual_null_space(const CyclicCode& C) {
    const Field& f = C.field();
    int n = C.n();
    std::vector<std::vector<int>> constraints;
    for (const auto& row : C.span().rows()) {
        // w.c = sum wa*ca + u( sum wa*cb + wb*ca )
        std::vector<int> r1(2 * n, 0), r2(2 * n, 0);
        for (int i = 0; i < n; ++i) {
            r1[i] = row[i];                // ca against wa
            r2[i] = row[n + i];            // cb against wa
            r2[n + i] = row[i];            // ca against wb
        }
        constraints.push_back(std::move(r1));
        constraints.push_back(std::move(r2));
    }
    return null_space(f, constraints, 2 * n);
}

/// Literal transcription of the dual definition: stream all q^{2n} words of
/// R^n, keep those orthogonal to every basis row of C.
inline LinearSpan dual_oracle(const CyclicCode& C, std::uint64_t budget = 1ull << 24) {
    const Field& f = C.field();
    int n = C.n();
    long double total = 1;
    for (int i = 0; i < 2 * n; ++i) total *= static_cast<long double>(f.size());
    if (total > static_cast<long double>(budget)) fail(errc::budget_exceeded, "dual oracle exceeds budget");

    std::vector<Word> basis;
    for (const auto& row : C.span().rows()) basis.push_back(vec_to_word(f, row));

    LinearSpan out(f, 2 * n);
    std::vector<int> v(2 * n, 0);
    std::uint64_t count = static_cast<std::uint64_t>(total);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t x = code;
        for (int i = 0; i < 2 * n; ++i) {
            v[i] = static_cast<int>(x % f.size());
            x /= f.size();
        }
        Word w = vec_to_word(f, v);
        bool orth = true;
        for (const Word& c : basis)
            if (!inner_product(w, c).is_zero()) {
                orth = false;
                break;
            }
        if (orth) out.insert(v);
    }
    return out;
}

inline CyclicCode canonicalize_span(const LinearSpan& span, int n, const Field& f) {
    std::vector<RPoly> gens;
    for (const auto& row : span.rows())
        gens.emplace_back(Poly(f, std::vector<int>(row.begin(), row.begin() + n)),
                          Poly(f, std::vector<int>(row.begin() + n, row.end())));
    if (gens.empty()) gens.emplace_back(f); // zero ideal
    return canonicalize_ideal(gens, n, f);
}

inline bool codes_orthogonal(const CyclicCode& C, const CyclicCode& D) {
    for (const auto& rc : C.span().rows())
        for (const auto& rd : D.span().rows())
            if (!inner_product(vec_to_word(C.field(), rc), vec_to_word(D.field(), rd)).is_zero()) return false;
    return true;
}

namespace detail {

inline std::vector<RPoly> dual_generators_from_annihilator(const CyclicCode& C, DualMethod method) {
    // C-perp is the reciprocal image A(I)* of the annihilator ideal.
    const Field& f = C.field();
    Poly xn1 = Poly::xn_minus_1(f, C.n());
    Poly ha = xn1 / C.a();
    Poly hg = xn1 / C.g();
    switch (method) {
    case DualMethod::OddProp43:
        return {RPoly(reciprocal(ha)), RPoly(Poly::zero(f), reciprocal(hg))};
    case DualMethod::EvenThm46Case1: {
        Poly m2 = m2_of(C);
        Poly uterm = m2.is_zero() ? m2 : reciprocal(m2).shifted(ha.deg() - m2.deg());
        return {RPoly(reciprocal(ha), uterm), RPoly(Poly::zero(f), reciprocal(hg))};
    }
    case DualMethod::EvenThm46Case2: {
        Poly m2 = m2_of(C);
        Poly uterm = m2.is_zero() ? m2 : reciprocal(m2).shifted(hg.deg() - m2.deg());
        return {RPoly(reciprocal(hg), uterm)};
    }
    case DualMethod::OracleOnly: break;
    }
    return {};
}

} // namespace detail

inline DualReport dual(const CyclicCode& C) {
    const Field& f = C.field();
    int n = C.n();

    LinearSpan exact = dual_null_space(C);
    CyclicCode exact_dual = canonicalize_span(exact, n, f);

    DualReport report{{}, exact_dual, DualMethod::OracleOnly, false, false, {}};
    try {
        auto [ann, method] = annihilator(C);
        auto gens = detail::dual_generators_from_annihilator(C, method);
        CyclicCode formula_dual = canonicalize_ideal(gens, n, f);
        report.annihilator = std::move(ann);
        report.method = method;
        report.formula_verified = formula_dual.span() == exact_dual.span();
        if (!report.formula_verified) report.method = DualMethod::OracleOnly;
    } catch (const error& e) {
        if (e.code() != errc::out_of_paper_scope) throw;
    }

    // dual reversibility: theorem shortcuts, oracle fallback
    ReversibilityVerdict cv = is_reversible(C);
    if (C.coprime_case() && cv.reversible) {
        report.dual_reversible = true;
        report.dual_reversible_reason = "reversible coprime-case code: dual reversible (Thm 4.5)";
        // contract check, cheap
        if (!is_reversible_basis_oracle(report.dual))
            report.dual_reversible_reason += " [ORACLE DISAGREES]";
    } else if (!C.coprime_case() && f.size() == 2 && !C.single_generator() && !C.p().is_zero() && cv.reversible) {
        Poly m2 = m2_of(C);
        Poly ha = Poly::xn_minus_1(f, n) / C.a();
        int i = ha.deg() - m2.deg();
        int j = reciprocal(ha).deg() - reciprocal(m2).deg() - i;
        bool cond = j >= 0 && divides(C.a(), reciprocal(C.p()) + C.p().shifted(j));
        if (cond) {
            report.dual_reversible = true;
            report.dual_reversible_reason = "Thm 4.7 sufficient condition holds";
            if (!is_reversible_basis_oracle(report.dual))
                report.dual_reversible_reason += " [ORACLE DISAGREES]";
        } else {
            report.dual_reversible = is_reversible_basis_oracle(report.dual);
            report.dual_reversible_reason = "oracle on the dual";
        }
    } else {
        report.dual_reversible = is_reversible_basis_oracle(report.dual);
        report.dual_reversible_reason = "oracle on the dual";
    }
    return report;
}

} // namespace chaincode
