#include <doctest.h>

#include <sstream>

#include "common/test_support.hpp"
#include "subanta/error.hpp"
#include "subanta/lexicon.hpp"
#include "subanta/rules.hpp"

using namespace subanta;
using subanta::testing::data_file;

namespace {

std::map<std::string, std::set<Category>> shipped_index() {
    return load_xprime(data_file("xprime.tsv")).category_index();
}

}  // namespace

TEST_CASE("seed lexicon loads and categorizes every example word") {
    XPrimeTable xprime = load_xprime(data_file("xprime.tsv"));
    Lexicon lex = load_lexicon(data_file("lexicon.tsv"), xprime.category_index());

    // multi-category endings: i,ṛ (3 each), j,ś (2 each), t (4), n (7), s (5)
    CHECK(lex.size() == 26);

    for (const XPrimeRecipe& row : xprime.rows()) {
        CHECK(categorize(row.example_word, Gender::masculine, lex) == row.category);
    }
}

TEST_CASE("single-category endings resolve with an empty lexicon") {
    Lexicon lex(shipped_index());
    CHECK(categorize(tokenize("rāma"), Gender::masculine, lex) == kSoleCategory);
    CHECK(categorize(tokenize("guru"), Gender::masculine, lex) == kSoleCategory);
    CHECK(categorize(tokenize("suhṛd"), Gender::masculine, lex) == kSoleCategory);
}

TEST_CASE("multi-category endings need the lexicon") {
    Lexicon lex(shipped_index());
    CHECK_THROWS_AS(categorize(tokenize("kavi"), Gender::masculine, lex),
                    UnknownWordError);

    std::istringstream in("kavi\tm\t1\n");
    Lexicon loaded = parse_lexicon(in, "test", shipped_index());
    CHECK(categorize(tokenize("kavi"), Gender::masculine, loaded) == 1);
    CHECK_THROWS_AS(categorize(tokenize("pati"), Gender::masculine, loaded),
                    UnknownWordError);  // other i-words stay unknown
}

TEST_CASE("unsupported endings are reported") {
    Lexicon lex(shipped_index());
    CHECK_THROWS_AS(categorize(tokenize("div"), Gender::masculine, lex),
                    UnsupportedEndingError);
    CHECK_THROWS_AS(categorize(tokenize("naṭī"), Gender::masculine, lex),
                    UnsupportedEndingError);
}

TEST_CASE("lexicon file validation") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_lexicon(in, "test", shipped_index());
    };

    CHECK(parse("").size() == 0);                  // empty file is a valid lexicon
    CHECK(parse("# only comments\n").size() == 0);
    CHECK(parse("sakhi\tm\t2\n").size() == 1);
    CHECK(parse("rāma\tm\t-\n").size() == 0);      // unambiguous ending, no bucket

    CHECK_THROWS_AS(parse("pitṛ\tm\t9\n"), UnknownCategoryError);  // ṛ has 1..3
    CHECK_THROWS_AS(parse("rāma\tm\t1\n"), UnknownCategoryError);  // a-row is "-"
    CHECK_THROWS_AS(parse("div\tm\t1\n"), UnknownCategoryError);   // no row at all
    CHECK_THROWS_AS(parse("hari\tf\t1\n"), ParseError);            // gender not shipped
    CHECK_THROWS_AS(parse("hari\tm\n"), ParseError);               // missing field
    CHECK_THROWS_AS(parse("hari\tm\tx\n"), ParseError);            // bad category
    CHECK_THROWS_AS(parse("hari\tm\t1\nhari\tm\t2\n"), ParseError);  // duplicate word

    try {
        parse("kavi\tm\t1\npitṛ\tm\t9\n");
    } catch (const UnknownCategoryError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("categorize is stable across calls") {
    XPrimeTable xprime = load_xprime(data_file("xprime.tsv"));
    Lexicon lex = load_lexicon(data_file("lexicon.tsv"), xprime.category_index());
    PhonemeString pati = tokenize("pati");
    Category first = categorize(pati, Gender::masculine, lex);
    CHECK(first == 3);
    CHECK(categorize(pati, Gender::masculine, lex) == first);
}
