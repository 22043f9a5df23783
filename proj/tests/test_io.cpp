#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chaincode/io.hpp"
#include "chaincode/tables.hpp"

using namespace chaincode;

TEST_CASE("field spec parsing") {
    CHECK(parse_field("GF(2)").size() == 2);
    CHECK(parse_field("GF(5)").size() == 5);
    CHECK(parse_field("GF(4; x^2+x+1)").size() == 4);
    CHECK(parse_field("GF(2^2; x^2+x+1)").size() == 4);
    CHECK(parse_field("GF(9; x^2+1)").size() == 9);
    CHECK_THROWS_AS(parse_field("GF(6)"), error);
    CHECK_THROWS_AS(parse_field("GF(4)"), error); // extension needs a modulus
    CHECK_THROWS_AS(parse_field("F(2)"), error);
    // round trip through description()
    for (const char* s : {"GF(2)", "GF(3)", "GF(5)"}) {
        Field f = parse_field(s);
        CHECK(f.description() == s);
        CHECK(parse_field(f.description()) == f);
    }
    Field f4 = parse_field("GF(4; x^2+x+1)");
    CHECK(parse_field(f4.description()) == f4);
}

TEST_CASE("expression parsing over R[x]") {
    Field f2 = field_new(2), f3 = field_new(3);
    CHECK(parse_rpoly(f2, "x+1+u") == RPoly(parse_poly(f2, "x+1"), Poly::one(f2)));
    CHECK(parse_rpoly(f2, "(u+1)(x+1)") ==
          RPoly(parse_poly(f2, "x+1"), parse_poly(f2, "x+1")));
    CHECK(parse_rpoly(f2, "u(x^2+x)") == RPoly(Poly::zero(f2), parse_poly(f2, "x^2+x")));
    CHECK(parse_rpoly(f3, "(x+1)^3") == RPoly(parse_poly(f3, "x^3+3x^2+3x+1")));
    CHECK(parse_rpoly(f3, "2x + u*2") ==
          RPoly(parse_poly(f3, "2x"), parse_poly(f3, "2")));
    CHECK_THROWS_AS(parse_poly(f2, "x+u"), error);    // u is not allowed at the field layer
    CHECK_THROWS_AS(parse_rpoly(f2, "x+$"), error);
    CHECK_THROWS_AS(parse_rpoly(f2, "a"), error);     // 'a' needs an extension field

    Field f4 = parse_field("GF(4; x^2+x+1)");
    Poly g = parse_poly(f4, "x + a");
    CHECK(g.deg() == 1);
    CHECK(g.coeff(0).index() == f4.from_coords({0, 1}));
}

TEST_CASE("generator list parsing and display") {
    Field f2 = field_new(2), f3 = field_new(3);
    auto gens = parse_generator_list(f3, "(x+1)(x^2+1), u(x+1)");
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == RPoly(parse_poly(f3, "(x+1)(x^2+1)")));
    CHECK(gens[1] == RPoly(Poly::zero(f3), parse_poly(f3, "x+1")));

    // display strings round-trip through the parser, for every enumerated code
    for (auto [n, q] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}, {6, 2}, {4, 2}}) {
        Field f = field_new(q);
        for (const auto& C : enumerate_codes(n, f)) {
            CyclicCode back = canonicalize_ideal(parse_generator_list(f, code_display(C)), n, f);
            CHECK(back == C);
        }
    }
    CHECK(code_display(code_new(4, f2, Poly::one(f2), Poly::zero(f2), Poly::one(f2))) == "1");
}

TEST_CASE("golden tables are loadable and well-formed") {
    CHECK(golden_tables().size() == 7);
    for (const auto& t : golden_tables()) {
        Field f = parse_field(t.field_spec);
        for (const auto& row : t.rows) {
            auto gens = parse_generator_list(f, row.generators);
            CHECK(!gens.empty());
            CHECK_NOTHROW(canonicalize_ideal(gens, t.n, f));
        }
    }
    CHECK_THROWS_AS(golden_table("6.9"), error);
}

TEST_CASE("table diff statuses") {
    auto d61 = diff_table(golden_table("6.1"));
    CHECK(d61.size() == 9);
    for (const auto& r : d61) CHECK(r.status == RowStatus::Match);

    auto d62 = diff_table(golden_table("6.2"));
    int flagged = 0;
    for (const auto& r : d62) {
        CHECK(r.status != RowStatus::Mismatch);
        flagged += r.status == RowStatus::Flagged;
    }
    CHECK(flagged == 2);

    auto d66 = diff_table(golden_table("6.6"));
    CHECK(d66.size() == 5);
    for (const auto& r : d66) CHECK(r.status == RowStatus::Match);

    auto d65 = diff_table(golden_table("6.5"));
    for (const auto& r : d65) CHECK(r.status == RowStatus::Match);
}
