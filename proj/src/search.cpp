#include "subanta/search.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "subanta/error.hpp"

namespace subanta {

namespace {

struct Token {
    Phoneme phoneme;
    std::size_t byte_offset;
    std::size_t line;
    std::size_t column;  // phoneme index within the line, 1-based
    std::size_t run;     // separator-delimited run id
};

// Permissive pass over corpus text: inventory symbols become tokens,
// everything else separates runs.
std::vector<Token> scan_text(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t column = 0;
    std::size_t run = 0;
    while (pos < text.size()) {
        std::string_view rest = text.substr(pos);
        const Phoneme* best = nullptr;
        std::size_t best_len = 0;
        for (const Phoneme& p : inventory()) {
            const std::string& sym = p.symbol();
            if (sym.size() > best_len && rest.starts_with(sym)) {
                best = &p;
                best_len = sym.size();
            }
        }
        if (best != nullptr) {
            tokens.push_back({*best, pos, line, ++column, run});
            pos += best_len;
        } else {
            ++run;
            if (text[pos] == '\n') {
                ++line;
                column = 0;
            }
            ++pos;
        }
    }
    return tokens;
}

}  // namespace

std::vector<SearchKey> to_search_keys(const InflectionResult& result) {
    std::vector<SearchKey> keys;
    keys.reserve(result.forms.size());
    for (std::size_t i = 0; i < result.forms.size(); ++i)
        keys.push_back({result.forms[i], result.formulas[i]});
    return keys;
}

std::vector<SearchMatch> search_text(const std::vector<SearchKey>& keys,
                                     std::string_view text,
                                     const std::string& file_label, bool boundary) {
    // Longest key first so the first hit at an offset is the one reported.
    std::vector<const SearchKey*> ordered;
    for (const SearchKey& k : keys) {
        if (k.key.empty()) continue;
        bool dup = false;
        for (const SearchKey* seen : ordered) dup = dup || seen->key == k.key;
        if (!dup) ordered.push_back(&k);
    }
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const SearchKey* a, const SearchKey* b) {
                         return a->key.size() > b->key.size();
                     });

    std::vector<Token> tokens = scan_text(text);
    std::vector<SearchMatch> matches;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (boundary && i > 0 && tokens[i - 1].run == tokens[i].run) continue;
        for (const SearchKey* k : ordered) {
            std::size_t len = k->key.size();
            if (i + len > tokens.size()) continue;
            if (tokens[i + len - 1].run != tokens[i].run) continue;
            bool equal = true;
            for (std::size_t j = 0; j < len && equal; ++j)
                equal = tokens[i + j].phoneme == k->key[j];
            if (!equal) continue;
            matches.push_back({file_label, tokens[i].byte_offset, tokens[i].line,
                               tokens[i].column, k->key, k->formula});
            break;  // longest key at this offset wins
        }
    }
    return matches;
}

std::vector<SearchMatch> search_corpus(const std::vector<SearchKey>& keys,
                                       const std::vector<std::filesystem::path>& files,
                                       bool boundary) {
    std::vector<SearchMatch> all;
    for (const std::filesystem::path& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw IoError("cannot open corpus file: " + file.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        std::vector<SearchMatch> matches = search_text(keys, text, file.string(), boundary);
        all.insert(all.end(), matches.begin(), matches.end());
    }
    std::stable_sort(all.begin(), all.end(), [](const SearchMatch& a, const SearchMatch& b) {
        if (a.file != b.file) return a.file < b.file;
        return a.byte_offset < b.byte_offset;
    });
    return all;
}

std::size_t RecallReport::found_with_keys() const {
    std::size_t n = 0;
    for (const Row& row : rows) n += row.reduced_hits > 0 ? 1 : 0;
    return n;
}

std::size_t RecallReport::found_with_word_only() const {
    std::size_t n = 0;
    for (const Row& row : rows) n += row.word_only_hits > 0 ? 1 : 0;
    return n;
}

RecallReport recall_check(const PhonemeString& word, Gender g,
                          std::optional<Category> category, const RuleSet& rules,
                          const Lexicon& lex) {
    Category cat = category ? *category : categorize(word, g, lex);
    InflectionResult full = generate_full(word, g, cat, rules);
    InflectionResult reduced = generate_search_keys(word, g, cat, rules);

    std::string corpus;
    for (const PhonemeString& form : full.forms) {
        corpus += form.str();
        corpus += '\n';
    }

    std::vector<SearchKey> reduced_keys = to_search_keys(reduced);
    std::vector<SearchKey> word_only{{word, "X"}};

    RecallReport report;
    report.word = word;
    report.rows.resize(full.forms.size());
    for (std::size_t i = 0; i < full.forms.size(); ++i)
        report.rows[i].form = full.forms[i];

    for (const SearchMatch& m : search_text(reduced_keys, corpus, "<synthesized>"))
        ++report.rows[m.line - 1].reduced_hits;
    for (const SearchMatch& m : search_text(word_only, corpus, "<synthesized>"))
        ++report.rows[m.line - 1].word_only_hits;
    return report;
}

}  // namespace subanta
