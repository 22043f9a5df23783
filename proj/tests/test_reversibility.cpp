#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chaincode/io.hpp"
#include "chaincode/reversibility.hpp"

using namespace chaincode;

TEST_CASE("named verdicts") {
    Field f2 = field_new(2);

    CyclicCode C = code_new(5, f2, parse_poly(f2, "x+1"), Poly::zero(f2), Poly::one(f2));
    auto v = is_reversible(C);
    CHECK(v.reversible);
    CHECK(v.branch == ReversibilityBranch::CoprimeThm36);
    CHECK(v.g_self_reciprocal);
    CHECK(v.a_self_reciprocal);

    CyclicCode D = code_new(7, f2, parse_poly(f2, "x^3+x+1"), Poly::zero(f2),
                            parse_poly(f2, "x^3+x+1"));
    auto w = is_reversible(D);
    CHECK_FALSE(w.reversible);
    CHECK_FALSE(w.g_self_reciprocal);

    CyclicCode unit = code_new(4, f2, Poly::one(f2), Poly::zero(f2), Poly::one(f2));
    CHECK(is_reversible(unit).reversible);

    CyclicCode zero = code_new(4, f2, Poly::xn_minus_1(f2, 4), Poly::zero(f2),
                               Poly::xn_minus_1(f2, 4));
    CHECK(is_reversible(zero).reversible);
    CHECK(is_reversible_oracle(zero));
}

TEST_CASE("theorem vs oracle across the six length/field pairs") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{
             {4, 3}, {5, 2}, {4, 2}, {6, 2}, {6, 3}, {7, 2}}) {
        Field f = field_new(q);
        CAPTURE(n);
        CAPTURE(q);
        for (const auto& C : enumerate_codes(n, f)) {
            auto v = is_reversible(C);
            bool basis = is_reversible_basis_oracle(C);
            CHECK(v.reversible == basis);
            if (C.cardinality_exponent() < 16)
                CHECK(v.reversible == is_reversible_oracle(C));
        }
    }
}

TEST_CASE("reversible codes have reversible residue and torsion images") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}, {6, 2}, {7, 2}}) {
        Field f = field_new(q);
        for (const auto& C : enumerate_codes(n, f)) {
            if (!is_reversible(C).reversible) continue;
            CHECK(field_code_reversible_oracle(C.g(), n));
            CHECK(field_code_reversible_oracle(C.a(), n));
        }
    }
}

TEST_CASE("classify_all") {
    Field f2 = field_new(2), f3 = field_new(3);

    auto cls7 = classify_all(7, f2);
    auto find = [&](const auto& cls, const std::string& display) -> const ReversibilityVerdict* {
        for (const auto& [C, v] : cls)
            if (code_display(C) == display) return &v;
        return nullptr;
    };
    const auto* a = find(cls7, "x+1, u");
    const auto* b = find(cls7, "x^6+x^5+x^4+x^3+x^2+x+1");
    const auto* c = find(cls7, "x^6+x^5+x^4+x^3+x^2+x+1, u");
    REQUIRE(a);
    REQUIRE(b);
    REQUIRE(c);
    CHECK(a->reversible);
    CHECK(b->reversible);
    CHECK(c->reversible);

    // Example 6.1 rows all classify as reversible
    auto cls4 = classify_all(4, f3);
    for (const char* row : {"x+1", "x^2+1", "(x+1)(x^2+1)", "x+1, u", "x^2+1, u",
                            "(x+1)(x^2+1), u", "(x+1)(x^2+1), u(x+1)",
                            "(x+1)(x^2+1), u(x^2+1)"}) {
        CyclicCode C = canonicalize_ideal(parse_generator_list(f3, row), 4, f3);
        bool found = false;
        for (const auto& [D, v] : cls4)
            if (D == C) {
                found = true;
                CHECK(v.reversible);
            }
        CHECK(found);
    }

    // length 1: reversal is the identity, everything is reversible
    for (const auto& [C, v] : classify_all(1, f2)) CHECK(v.reversible);
}

TEST_CASE("all length-5 codes over F_2 + uF_2 are reversible") {
    Field f2 = field_new(2);
    auto codes = enumerate_codes(5, f2);
    CHECK(codes.size() == 9);
    for (const auto& C : codes) {
        CHECK(is_reversible(C).reversible);
        CHECK(is_reversible_oracle(C));
    }
}
