#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "chaincode/factorization.hpp"
#include "chaincode/io.hpp"

using namespace chaincode;

namespace {
// multiset of (display string, multiplicity), order-insensitive
std::multiset<std::pair<std::string, int>> factor_multiset(const Factorization& f) {
    std::multiset<std::pair<std::string, int>> out;
    for (const auto& [poly, mult] : f.factors) out.insert({to_string(poly), mult});
    return out;
}
} // namespace

TEST_CASE("cyclotomic cosets") {
    auto c7 = cyclotomic_cosets(7, 2);
    REQUIRE(c7.size() == 3);
    CHECK(c7[0].members == std::vector<int>{0});
    CHECK(c7[1].members == std::vector<int>{1, 2, 4});
    CHECK(c7[2].members == std::vector<int>{3, 5, 6});

    auto c5 = cyclotomic_cosets(5, 2);
    REQUIRE(c5.size() == 2);
    CHECK(c5[0].members == std::vector<int>{0});
    CHECK(c5[1].members == std::vector<int>{1, 2, 3, 4});

    auto c1 = cyclotomic_cosets(1, 3);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].members == std::vector<int>{0});

    CHECK_THROWS_AS(cyclotomic_cosets(4, 2), error);

    // partition; sizes divide mult_order(q, m)
    for (auto [m, q] : std::vector<std::pair<int, int>>{{7, 2}, {15, 2}, {8, 3}, {13, 3}, {12, 5}}) {
        auto cosets = cyclotomic_cosets(m, q);
        int t = mult_order(q, m);
        std::set<int> seen;
        for (const auto& c : cosets) {
            CHECK(t % static_cast<int>(c.members.size()) == 0);
            for (int x : c.members) CHECK(seen.insert(x).second);
        }
        CHECK(static_cast<int>(seen.size()) == m);
    }
}

TEST_CASE("the seven golden factorizations") {
    Field f2 = field_new(2), f3 = field_new(3), f5 = field_new(5);
    using MS = std::multiset<std::pair<std::string, int>>;
    CHECK(factor_multiset(factor_xn_minus_1(4, f3)) ==
          MS{{"x+1", 1}, {"x+2", 1}, {"x^2+1", 1}});
    CHECK(factor_multiset(factor_xn_minus_1(5, f2)) == MS{{"x+1", 1}, {"x^4+x^3+x^2+x+1", 1}});
    CHECK(factor_multiset(factor_xn_minus_1(6, f3)) == MS{{"x+1", 3}, {"x+2", 3}});
    CHECK(factor_multiset(factor_xn_minus_1(4, f2)) == MS{{"x+1", 4}});
    CHECK(factor_multiset(factor_xn_minus_1(6, f2)) == MS{{"x+1", 2}, {"x^2+x+1", 2}});
    CHECK(factor_multiset(factor_xn_minus_1(7, f2)) ==
          MS{{"x+1", 1}, {"x^3+x+1", 1}, {"x^3+x^2+1", 1}});
    CHECK(factor_multiset(factor_xn_minus_1(10, f5)) == MS{{"x+1", 5}, {"x+4", 5}});
}

TEST_CASE("minimal polynomials") {
    Field f2 = field_new(2);
    auto c7 = cyclotomic_cosets(7, 2);
    Poly m1 = minimal_polynomial(c7[1], 7, f2);
    CHECK(m1.deg() == 3);
    CHECK(is_irreducible_oracle(m1));
    CHECK((m1 == parse_poly(f2, "x^3+x+1") || m1 == parse_poly(f2, "x^3+x^2+1")));

    Poly m0 = minimal_polynomial(c7[0], 7, f2);
    CHECK(m0 == parse_poly(f2, "x+1"));

    auto c5 = cyclotomic_cosets(5, 2);
    CHECK(minimal_polynomial(c5[1], 5, f2) == parse_poly(f2, "x^4+x^3+x^2+x+1"));
}

TEST_CASE("product identity and irreducibility oracle") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{
             {4, 3}, {5, 2}, {6, 3}, {4, 2}, {6, 2}, {7, 2}, {10, 5}, {15, 2}, {9, 3}, {12, 5}}) {
        Field f = field_new(q);
        Factorization fact = factor_xn_minus_1(n, f);
        Poly prod = Poly::one(f);
        for (const auto& [poly, mult] : fact.factors) {
            CHECK(poly.is_monic());
            CHECK(is_irreducible_oracle(poly));
            for (int i = 0; i < mult; ++i) prod = prod * poly;
        }
        CHECK(prod == Poly::xn_minus_1(f, n));
        // multiplicities all equal p^s where n = p^s m
        int ps = 1, m = n;
        while (m % f.characteristic() == 0) m /= f.characteristic(), ps *= f.characteristic();
        for (const auto& [poly, mult] : fact.factors) CHECK(mult == ps);
    }
}

TEST_CASE("factorization independent of subgroup generator choice") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{7, 2}, {5, 2}, {4, 3}, {13, 3}}) {
        Field f = field_new(q);
        CHECK(factor_multiset(factor_xn_minus_1(n, f, 0)) ==
              factor_multiset(factor_xn_minus_1(n, f, 1)));
    }
}

TEST_CASE("divisor lattice") {
    Field f3 = field_new(3), f5 = field_new(5), f2 = field_new(2);
    auto d1 = divisors(factor_xn_minus_1(4, f3));
    CHECK(d1.size() == 8);
    auto d2 = divisors(factor_xn_minus_1(10, f5));
    CHECK(d2.size() == 36);
    auto d3 = divisors(factor_xn_minus_1(1, f2));
    REQUIRE(d3.size() == 2);
    CHECK(d3[0] == Poly::one(f2));
    CHECK(d3[1] == parse_poly(f2, "x+1"));

    for (auto* divs : {&d1, &d2}) {
        std::set<std::string> seen;
        const Field& f = (*divs)[0].field();
        int n = divs == &d1 ? 4 : 10;
        for (const Poly& d : *divs) {
            CHECK(d.is_monic());
            CHECK(divides(d, Poly::xn_minus_1(f, n)));
            CHECK(seen.insert(to_string(d)).second); // pairwise distinct
        }
    }
}
