#include <doctest.h>

#include <set>

#include "common/test_support.hpp"
#include "subanta/error.hpp"
#include "subanta/search.hpp"

using namespace subanta;
using subanta::testing::data_file;

namespace {

const RuleSet& shipped_rules() {
    static const RuleSet rules = load_rules(data_file("rules-full.xml"),
                                            data_file("rules-reduced.xml"),
                                            data_file("xprime.tsv"));
    return rules;
}

const Lexicon& shipped_lexicon() {
    static const Lexicon lex =
        load_lexicon(data_file("lexicon.tsv"), shipped_rules().xprime.category_index());
    return lex;
}

std::vector<SearchKey> keys_for(const std::string& word) {
    PhonemeString w = tokenize(word);
    Category c = categorize(w, Gender::masculine, shipped_lexicon());
    return to_search_keys(generate_search_keys(w, Gender::masculine, c, shipped_rules()));
}

}  // namespace

TEST_CASE("matches are phoneme-level and report offsets") {
    std::vector<SearchMatch> hits = search_text(keys_for("rāma"), "rāmeṇa saha", "t");
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].byte_offset == 0);
    CHECK(hits[0].line == 1);
    CHECK(hits[0].column == 1);
    CHECK(hits[0].key.str() == "rāme");
    CHECK(hits[0].formula == "x' + @13");
}

TEST_CASE("no false hits on lookalike consonant clusters") {
    CHECK(search_text(keys_for("hari"), "harm", "t").empty());
    // "rāma" must not fire inside "rāmau": au is a single phoneme
    std::vector<SearchMatch> hits = search_text({{tokenize("rāma"), "X"}}, "rāmau", "t");
    CHECK(hits.empty());
}

TEST_CASE("adjacent words give separate matches") {
    std::vector<SearchMatch> hits = search_text(keys_for("rāma"), "rāmau rāmā", "t");
    REQUIRE(hits.size() == 2);
    CHECK(hits[0].byte_offset == 0);
    CHECK(hits[0].key.str() == "rāmau");
    CHECK(hits[1].byte_offset == 7);  // r(1) ā(2) m(1) au(2) space(1)
    CHECK(hits[1].key.str() == "rāmā");
    CHECK(hits[1].column == 5);  // phoneme index within the line
}

TEST_CASE("longest key wins at one offset") {
    std::vector<SearchKey> keys{{tokenize("rām"), "short"}, {tokenize("rāma"), "long"}};
    std::vector<SearchMatch> hits = search_text(keys, "rāmaḥ", "t");
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].key.str() == "rāma");
    CHECK(hits[0].formula == "long");
}

TEST_CASE("separators split runs and matches never cross them") {
    std::vector<SearchKey> keys{{tokenize("rāma"), "X"}};
    CHECK(search_text(keys, "rā ma", "t").empty());
    CHECK(search_text(keys, "rā,ma", "t").empty());
    CHECK(search_text(keys, "rā\nma", "t").empty());

    // unknown scripts and digits separate without breaking offsets
    std::vector<SearchMatch> hits = search_text(keys, "राम rāma 42", "t");
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].key.str() == "rāma");
}

TEST_CASE("line and column accounting") {
    std::vector<SearchKey> keys{{tokenize("rāma"), "X"}};
    std::vector<SearchMatch> hits = search_text(keys, "asti\nsurāmaḥ rāmaḥ", "t");
    REQUIRE(hits.size() == 2);
    CHECK(hits[0].line == 2);
    CHECK(hits[0].column == 3);  // s u | r ā m a ḥ
    CHECK(hits[1].line == 2);
    CHECK(hits[1].column == 8);
}

TEST_CASE("boundary flag restricts matches to run starts") {
    std::vector<SearchKey> keys{{tokenize("rāma"), "X"}};
    CHECK(search_text(keys, "surāmaḥ rāmaḥ", "t", false).size() == 2);
    std::vector<SearchMatch> hits = search_text(keys, "surāmaḥ rāmaḥ", "t", true);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].column == 8);
}

TEST_CASE("word-only search equals plain phoneme substring search") {
    std::string text = "rāmaḥ surāmo rāmasya rāme harī\nrāma eva";
    PhonemeString word = tokenize("rāma");
    std::vector<SearchMatch> hits = search_text({{word, "X"}}, text, "t");

    // oracle: scan every tokenizable window of every separator-run
    std::set<std::size_t> expected;
    std::size_t run_start = 0;
    auto flush = [&](std::size_t end) {
        std::string_view run = std::string_view(text).substr(run_start, end - run_start);
        if (!run.empty()) {
            PhonemeString ps = tokenize(std::string(run));
            for (std::size_t i = 0; i + word.size() <= ps.size(); ++i)
                if (ps.substr(i, word.size()) == word)
                    expected.insert(run_start + render(ps.substr(0, i)).size());
        }
        run_start = end + 1;
    };
    for (std::size_t i = 0; i < text.size(); ++i)
        if (text[i] == ' ' || text[i] == '\n') flush(i);
    flush(text.size());

    std::set<std::size_t> got;
    for (const auto& m : hits) got.insert(m.byte_offset);
    CHECK(got == expected);
}

TEST_CASE("adding keys never removes offsets") {
    std::string text = "rāmaḥ rāme rāmeṇa saha rāmau\nrāmasya harim";
    std::set<std::size_t> base;
    for (const auto& m : search_text({{tokenize("rāma"), "X"}}, text, "t"))
        base.insert(m.byte_offset);
    std::set<std::size_t> wide;
    for (const auto& m : search_text(keys_for("rāma"), text, "t"))
        wide.insert(m.byte_offset);
    for (std::size_t off : base) CHECK(wide.count(off) == 1);
    CHECK(wide.size() >= base.size());
}

TEST_CASE("corpus files and io errors") {
    std::vector<SearchMatch> hits =
        search_corpus(keys_for("rāma"), {data_file("sample_corpus.txt")});
    CHECK(hits.size() == 7);
    for (std::size_t i = 1; i < hits.size(); ++i)
        CHECK(hits[i - 1].byte_offset < hits[i].byte_offset);

    CHECK_THROWS_AS(search_corpus(keys_for("rāma"), {"no/such/file.txt"}), IoError);
}

TEST_CASE("recall of the reduced key set") {
    RecallReport rama = recall_check(tokenize("rāma"), Gender::masculine, std::nullopt,
                                     shipped_rules(), shipped_lexicon());
    CHECK(rama.rows.size() == 16);
    CHECK(rama.full_recall());
    CHECK(rama.found_with_keys() == 16);
    CHECK(rama.found_with_word_only() == 4);  // rāmaḥ rāmam rāmasya rāmayoḥ
    for (const auto& row : rama.rows) CHECK(row.reduced_hits == 1);

    RecallReport hari = recall_check(tokenize("hari"), Gender::masculine, std::nullopt,
                                     shipped_rules(), shipped_lexicon());
    CHECK(hari.rows.size() == 15);
    CHECK(hari.full_recall());
    CHECK(hari.found_with_word_only() == 7);

    CHECK_THROWS_AS(recall_check(tokenize("suhṛd"), Gender::masculine, std::nullopt,
                                 shipped_rules(), shipped_lexicon()),
                    NoRuleDataError);
}
