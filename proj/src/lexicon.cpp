#include "subanta/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "subanta/error.hpp"

namespace subanta {

void Lexicon::add(const LexiconEntry& entry) {
    if (entry.word.empty()) throw EmptyWordError("empty lexicon word");
    const std::string ending = entry.word.back().symbol();
    auto it = index_.find(ending);
    if (it == index_.end())
        throw UnknownCategoryError(0, "ending '" + ending + "' has no x' row");
    if (it->second.count(entry.category) == 0)
        throw UnknownCategoryError(0, "category " + category_label(entry.category) +
                                          " not defined for ending '" + ending + "'");
    if (it->second.size() == 1) return;  // unambiguous ending, no bucket needed

    auto& bucket = buckets_[{entry.gender, ending}];
    if (bucket.count(entry.word) != 0)
        throw ParseError(0, "duplicate lexicon word '" + entry.word.str() + "'");
    bucket[entry.word] = entry.category;
}

std::optional<Category> Lexicon::find(Gender g, const PhonemeString& word) const {
    if (word.empty()) return std::nullopt;
    auto it = buckets_.find({g, word.back().symbol()});
    if (it == buckets_.end()) return std::nullopt;
    auto wit = it->second.find(word);
    if (wit == it->second.end()) return std::nullopt;
    return wit->second;
}

std::size_t Lexicon::size() const {
    std::size_t n = 0;
    for (const auto& [key, bucket] : buckets_) n += bucket.size();
    return n;
}

Lexicon parse_lexicon(std::istream& in, const std::string& name,
                      std::map<std::string, std::set<Category>> category_index) {
    Lexicon lex(std::move(category_index));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view sv = line;
        auto first = sv.find_first_not_of(" \t");
        if (first == std::string_view::npos || sv[first] == '#') continue;

        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, '\t')) fields.push_back(field);
        std::string where = name + ":" + std::to_string(lineno);
        if (fields.size() != 3)
            throw ParseError(lineno, where + ": expected word<TAB>gender<TAB>category");

        LexiconEntry entry;
        try {
            entry.word = tokenize(fields[0]);
            entry.gender = gender_from_string(fields[1]);
        } catch (const Error& e) {
            throw ParseError(lineno, where + ": " + e.what());
        }
        if (fields[2] == "-") {
            entry.category = kSoleCategory;
        } else {
            try {
                entry.category = std::stoi(fields[2]);
            } catch (const std::exception&) {
                throw ParseError(lineno, where + ": bad category '" + fields[2] + "'");
            }
            if (entry.category < 1)
                throw ParseError(lineno, where + ": bad category '" + fields[2] + "'");
        }
        try {
            lex.add(entry);
        } catch (const UnknownCategoryError& e) {
            throw UnknownCategoryError(lineno, where + ": " + e.what());
        } catch (const Error& e) {
            throw ParseError(lineno, where + ": " + e.what());
        }
    }
    return lex;
}

Lexicon load_lexicon(const std::filesystem::path& file,
                     std::map<std::string, std::set<Category>> category_index) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open lexicon file: " + file.string());
    return parse_lexicon(in, file.filename().string(), std::move(category_index));
}

Category categorize(const PhonemeString& word, Gender g, const Lexicon& lex) {
    if (word.empty()) throw EmptyWordError("cannot categorize an empty word");
    const std::string ending = word.back().symbol();
    auto it = lex.category_index().find(ending);
    if (it == lex.category_index().end())
        throw UnsupportedEndingError("no declension data for masculine words ending in '" +
                                     ending + "'");
    if (it->second.size() == 1) return *it->second.begin();
    if (auto c = lex.find(g, word)) return *c;
    throw UnknownWordError("word '" + word.str() + "' not in lexicon; ending '" + ending +
                           "' is ambiguous (pass an explicit category)");
}

}  // namespace subanta
