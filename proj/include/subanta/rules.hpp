#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "subanta/formula.hpp"
#include "subanta/phoneme.hpp"

namespace subanta {

enum class Gender { masculine };

// Accepts "m" or "masculine".
Gender gender_from_string(std::string_view s);
std::string to_string(Gender g);

// Declension category within one (gender, last letter) group. Endings
// with a single undifferentiated category use kSoleCategory, written
// as "-" in all data files.
using Category = int;
inline constexpr Category kSoleCategory = 0;

std::string category_label(Category c);

inline constexpr int kStemCount = 37;

// Stem-index lookup, 1-based. Throws StemIndexOutOfRangeError outside 1..37.
const PhonemeString& stem(int index);

// One rule file's worth of formulas for a (gender, last letter) group:
// shared formulas plus per-category extensions.
struct FormulaGroup {
    std::vector<Formula> common;
    std::map<Category, std::vector<Formula>> categories;
};

class RuleTree {
public:
    const FormulaGroup* find(Gender g, Phoneme last) const;

    // common ++ category formulas, in file order. Throws NoRuleDataError
    // when the (letter, category) pair has no data.
    std::vector<Formula> effective(Gender g, Phoneme last, Category c) const;

    // (letter symbol, category) pairs this tree carries formulas for.
    std::vector<std::pair<std::string, Category>> coverage() const;

    void insert(Gender g, const std::string& letter, FormulaGroup group);

private:
    std::map<std::pair<Gender, std::string>, FormulaGroup> groups_;
};

// Loads one hierarchical rule file:
//   <Rules> <Gender G="masculine"> <LastLetter L="a"> common formulas
//   <Category C="1"> category formulas </Category> ... </LastLetter> ...
// Common formulas are the LastLetter element's own text, comma-separated.
RuleTree load_ruleset(const std::filesystem::path& file);
RuleTree parse_ruleset(std::istream& in, const std::string& name);

// One row of the x' data: how the pre-transformed word is obtained for
// a (last letter, category) group, plus the worked example used by the
// conformance tests.
struct XPrimeRecipe {
    std::string ending;
    Category category = kSoleCategory;
    Formula formula;  // over base x only
    PhonemeString example_word;
    PhonemeString example_x_prime;
};

class XPrimeTable {
public:
    const XPrimeRecipe* find(Phoneme last, Category c) const;
    const std::vector<XPrimeRecipe>& rows() const { return rows_; }

    // ending symbol -> category ids; drives word categorization.
    std::map<std::string, std::set<Category>> category_index() const;

    void insert(XPrimeRecipe recipe);

private:
    std::vector<XPrimeRecipe> rows_;
    std::map<std::pair<std::string, Category>, std::size_t> by_key_;
};

// Tab-separated rows: ending, category ("-" or id), formula, example word,
// expected x' form. '#' lines are comments.
XPrimeTable load_xprime(const std::filesystem::path& file);
XPrimeTable parse_xprime(std::istream& in, const std::string& name);

// Everything the generator needs: both formula trees plus the x' data.
struct RuleSet {
    RuleTree full;
    RuleTree reduced;
    XPrimeTable xprime;
};

RuleSet load_rules(const std::filesystem::path& full_file,
                   const std::filesystem::path& reduced_file,
                   const std::filesystem::path& xprime_file);

}  // namespace subanta
