#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "subanta/phoneme.hpp"
#include "subanta/rules.hpp"

namespace subanta {

struct LexiconEntry {
    PhonemeString word;
    Gender gender = Gender::masculine;
    Category category = kSoleCategory;
};

// Word categorization store. Keyed by (gender, last letter); buckets
// exist only for endings whose words split into several declension
// categories — single-category endings resolve without any lookup.
class Lexicon {
public:
    Lexicon() = default;
    explicit Lexicon(std::map<std::string, std::set<Category>> category_index)
        : index_(std::move(category_index)) {}

    // Validates the entry against the category index. Entries for
    // single-category endings are accepted but not stored.
    void add(const LexiconEntry& entry);

    std::optional<Category> find(Gender g, const PhonemeString& word) const;

    const std::map<std::string, std::set<Category>>& category_index() const {
        return index_;
    }

    // Number of bucketed words.
    std::size_t size() const;

private:
    std::map<std::string, std::set<Category>> index_;
    std::map<std::pair<Gender, std::string>, std::map<PhonemeString, Category>> buckets_;
};

// Tab-separated rows: word, gender ("m"), category ("-" or id >= 1);
// '#' lines are comments. The category index (from the x' data) decides
// which categories are legal per ending.
Lexicon load_lexicon(const std::filesystem::path& file,
                     std::map<std::string, std::set<Category>> category_index);
Lexicon parse_lexicon(std::istream& in, const std::string& name,
                      std::map<std::string, std::set<Category>> category_index);

// Resolves the declension category of a word. Single-category endings
// resolve from the index alone; multi-category endings consult the
// lexicon buckets. Throws UnsupportedEndingError for endings with no
// x' row and UnknownWordError for unlisted multi-category words.
Category categorize(const PhonemeString& word, Gender g, const Lexicon& lex);

}  // namespace subanta
