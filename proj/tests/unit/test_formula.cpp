#include <doctest.h>

#include "subanta/error.hpp"
#include "subanta/formula.hpp"

using namespace subanta;

TEST_CASE("parse the base selectors and stems") {
    Formula f = parse_formula("x' + @2");
    CHECK(f.base_prime);
    CHECK(f.chain.empty());
    REQUIRE(f.tail.size() == 1);
    CHECK(std::get<StemRef>(f.tail[0]).index == 2);
    CHECK(f.closure == Closure::none);
}

TEST_CASE("parse chains and closures") {
    Formula f = parse_formula("(x.d + @7 + @20).c");
    CHECK_FALSE(f.base_prime);
    REQUIRE(f.chain.size() == 1);
    CHECK(f.chain[0].kind == ChainOp::Kind::dirgha);
    REQUIRE(f.tail.size() == 2);
    CHECK(std::get<StemRef>(f.tail[0]).index == 7);
    CHECK(std::get<StemRef>(f.tail[1]).index == 20);
    CHECK(f.closure == Closure::natva);

    Formula y = parse_formula("(x + @19).y");
    CHECK(y.closure == Closure::junction_yan);
}

TEST_CASE("parse literals and multi-op chains") {
    Formula f = parse_formula("x.ll + \"ñ\"");
    REQUIRE(f.chain.size() == 2);
    CHECK(f.chain[0].kind == ChainOp::Kind::lopa);
    CHECK(f.chain[1].kind == ChainOp::Kind::lopa);
    REQUIRE(f.tail.size() == 1);
    CHECK(std::get<Literal>(f.tail[0]).value.str() == "ñ");

    Formula g = parse_formula("x.h1");
    REQUIRE(g.chain.size() == 2);
    CHECK(g.chain[0].kind == ChainOp::Kind::harden);
    CHECK(g.chain[1].kind == ChainOp::Kind::row_shift);
    CHECK(g.chain[1].row == 1);
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse_formula("  x'+@2 ") == parse_formula("x' + @2"));
    CHECK(parse_formula("( x.d+@7+@20 ) . c") == parse_formula("(x.d + @7 + @20).c"));
}

TEST_CASE("printing normalizes and round-trips") {
    for (const char* src : {
             "x + @1",
             "x' + @2",
             "x.d + @7 + @20",
             "(x' + @27).c",
             "(x + @19).y",
             "x.ll + \"ñ\"",
             "x.llld + \"n\"",
             "x'.a + @13",
             "x.h1",
         }) {
        Formula f = parse_formula(src);
        CHECK(to_string(f) == src);
        CHECK(parse_formula(to_string(f)) == f);
    }
}

TEST_CASE("parse failures carry positions") {
    CHECK_THROWS_AS(parse_formula("y + @1"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("x +"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("x' @2"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("x."), SyntaxError);
    CHECK_THROWS_AS(parse_formula("(x + @1)"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("(x + @1).z"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("x + \"unterminated"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("x + \"q\""), SyntaxError);  // bad literal char
    CHECK_THROWS_AS(parse_formula("x.q"), UnknownOpCodeError);
    CHECK_THROWS_AS(parse_formula("x + @38"), StemIndexOutOfRangeError);
    CHECK_THROWS_AS(parse_formula("x + @0"), StemIndexOutOfRangeError);

    try {
        parse_formula("x.q");
    } catch (const UnknownOpCodeError& e) {
        CHECK(e.position() == 2);
    }
}
