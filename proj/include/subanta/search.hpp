#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subanta/generator.hpp"
#include "subanta/lexicon.hpp"
#include "subanta/phoneme.hpp"
#include "subanta/rules.hpp"

namespace subanta {

struct SearchKey {
    PhonemeString key;
    std::string formula;  // "X" for the word itself
};

struct SearchMatch {
    std::string file;
    std::size_t byte_offset = 0;  // within the file
    std::size_t line = 1;         // 1-based
    std::size_t column = 1;       // 1-based, counted in phonemes within the line
    PhonemeString key;
    std::string formula;
};

std::vector<SearchKey> to_search_keys(const InflectionResult& result);

// Scans IAST text for phoneme-level occurrences of the keys. Any
// character outside the inventory is a separator; matches never cross
// separators. At one offset only the longest matching key is reported.
// With boundary=true a match must start the text, a line, or follow a
// separator.
std::vector<SearchMatch> search_text(const std::vector<SearchKey>& keys,
                                     std::string_view text,
                                     const std::string& file_label,
                                     bool boundary = false);

// File variant; results are sorted by (file, offset). Unreadable files
// throw IoError.
std::vector<SearchMatch> search_corpus(const std::vector<SearchKey>& keys,
                                       const std::vector<std::filesystem::path>& files,
                                       bool boundary = false);

// Self-check of the reduced-key scheme: builds a one-form-per-line corpus
// from the full paradigm and reports how many forms each key set finds.
struct RecallReport {
    struct Row {
        PhonemeString form;
        std::size_t reduced_hits = 0;  // matches using X + reduced keys
        std::size_t word_only_hits = 0;  // matches using the bare word
    };

    PhonemeString word;
    std::vector<Row> rows;

    std::size_t found_with_keys() const;
    std::size_t found_with_word_only() const;
    bool full_recall() const { return found_with_keys() == rows.size(); }
};

RecallReport recall_check(const PhonemeString& word, Gender g,
                          std::optional<Category> category, const RuleSet& rules,
                          const Lexicon& lex);

}  // namespace subanta
