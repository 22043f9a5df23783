#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chaincode/distance.hpp"
#include "chaincode/io.hpp"

using namespace chaincode;

TEST_CASE("named distance values") {
    Field f3 = field_new(3), f2 = field_new(2);

    CyclicCode C = canonicalize_ideal(parse_generator_list(f3, "(x+1)(x^2+1)"), 4, f3);
    auto r = min_distance(C);
    CHECK(r.d == 4);
    CHECK(r.k == 1);
    CHECK(r.mds);

    CyclicCode D = canonicalize_ideal(parse_generator_list(f2, "x^6+x^5+x^4+x^3+x^2+x+1"), 7, f2);
    auto rd = min_distance(D);
    CHECK(rd.d == 7);
    CHECK(rd.k == 1);
    CHECK(rd.mds);

    CyclicCode unit = code_new(4, f2, Poly::one(f2), Poly::zero(f2), Poly::one(f2));
    CHECK(min_distance(unit).d == 1);

    CyclicCode zero = code_new(4, f2, Poly::xn_minus_1(f2, 4), Poly::zero(f2),
                               Poly::xn_minus_1(f2, 4));
    auto rz = min_distance(zero);
    CHECK_FALSE(rz.d.has_value()); // infinite sentinel
    CHECK_FALSE(min_distance_oracle(zero).has_value());
}

TEST_CASE("residue code generator and torsion oracle") {
    Field f3 = field_new(3), f2 = field_new(2);
    CyclicCode C = code_new(4, f3, parse_poly(f3, "(x+1)(x^2+1)"), Poly::zero(f3),
                            parse_poly(f3, "x+1"));
    auto [a, torsion] = residue_code(C);
    CHECK(a == parse_poly(f3, "x+1"));
    CHECK(torsion == a);

    CyclicCode unit = code_new(4, f2, Poly::one(f2), Poly::zero(f2), Poly::one(f2));
    CHECK(residue_code(unit).first == Poly::one(f2));

    // the canonical ideal's torsion is exactly <a> for every enumerated code
    for (auto [n, q] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}, {4, 2}, {6, 2}}) {
        Field f = field_new(q);
        for (const auto& E : enumerate_codes(n, f)) {
            auto rep = min_distance(E);
            CHECK(rep.torsion_matches);
            CHECK(rep.torsion_generator == E.a());
        }
    }
}

TEST_CASE("non-canonical single-generator input enlarges the torsion") {
    Field f2 = field_new(2);
    // <x+1+u> at n=5: u(1) is in the ideal closure, so d = 1, not d(<x+1>) = 2
    CyclicCode C = canonicalize_ideal(parse_generator_list(f2, "x+1+u"), 5, f2);
    auto rep = min_distance(C);
    CHECK(rep.torsion_generator == Poly::one(f2));
    CHECK(rep.d == 1);
    CHECK(min_distance_oracle(C) == 1);
}

TEST_CASE("residue distance equals brute force over R at the tabulated lengths") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}, {4, 2}, {6, 2}}) {
        Field f = field_new(q);
        CAPTURE(n);
        CAPTURE(q);
        for (const auto& C : enumerate_codes(n, f)) {
            auto rep = min_distance(C);
            CHECK(rep.d == min_distance_oracle(C));
        }
    }
}

TEST_CASE("mds determination") {
    CHECK(is_mds(2, 3, 4));
    CHECK_FALSE(is_mds(2, 2, 4));
    CHECK(is_mds(1, 4, 4));
    CHECK_FALSE(is_mds(std::nullopt, 0, 4));
}

TEST_CASE("weight monotonicity along divisor chains") {
    Field f2 = field_new(2);
    auto fact = factor_xn_minus_1(6, f2);
    auto divs = divisors(fact);
    for (const auto& a : divs) {
        for (const auto& b : divs) {
            if (a.deg() >= 6 || b.deg() >= 6 || !divides(a, b)) continue;
            // <b> subset of <a>, so d(<b>) >= d(<a>)
            auto da = field_code_min_weight(a, 6);
            auto db = field_code_min_weight(b, 6);
            REQUIRE(da.has_value());
            REQUIRE(db.has_value());
            CHECK(*db >= *da);
        }
    }
}

TEST_CASE("d bounded by the weight of the u a(x) generator row") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{4, 3}, {6, 2}, {7, 2}}) {
        Field f = field_new(q);
        for (const auto& C : enumerate_codes(n, f)) {
            auto rep = min_distance(C);
            if (!rep.d) continue;
            int wa = 0;
            for (int i = 0; i <= C.a().deg(); ++i) wa += !C.a().coeff(i).is_zero();
            CHECK(*rep.d <= wa);
        }
    }
}

TEST_CASE("budget enforcement") {
    Field f5 = field_new(5);
    CyclicCode C = code_new(10, f5, Poly::one(f5), Poly::zero(f5), Poly::one(f5));
    CHECK_THROWS_WITH_AS((void)min_distance(C, 100), doctest::Contains("BudgetExceeded"), error);
}
