#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "subanta/formula.hpp"
#include "subanta/phoneme.hpp"
#include "subanta/rules.hpp"

namespace subanta {

enum class GenerationMode { full, reduced };

// Generated forms with their provenance. forms/formulas run in parallel;
// a formula of "X" marks the original word itself (reduced mode only).
struct InflectionResult {
    PhonemeString word;
    PhonemeString x_prime_form;
    GenerationMode mode = GenerationMode::full;
    std::vector<PhonemeString> forms;
    std::vector<std::string> formulas;
};

// The pre-transformation step: applies the (last letter, category)
// recipe to the whole word. Throws NoRecipeError when the x' data has
// no row for the pair.
PhonemeString compute_x_prime(const PhonemeString& word, Gender g, Category c,
                              const XPrimeTable& xprime);

// Evaluates one formula against the word and its pre-transformed shape:
// pick the base, run the op chain on its final phoneme (multi-phoneme
// results splice in), append stems/literals, then apply the closure.
// The junction-yan closure replaces a base-final vowel by its semivowel
// when the appended material starts with a vowel (hari + ox. -> haryox.).
PhonemeString eval_formula(const Formula& f, const PhonemeString& word,
                           const PhonemeString& x_prime);

// Evaluates the full formula list (common ++ category, file order),
// dropping duplicates (first occurrence wins) and the original word.
InflectionResult generate_full(const PhonemeString& word, Gender g, Category c,
                               const RuleSet& rules);

// Evaluates the reduced list and prepends the word itself as a key.
InflectionResult generate_search_keys(const PhonemeString& word, Gender g, Category c,
                                      const RuleSet& rules);

struct ReductionRow {
    std::string ending;
    Category category = kSoleCategory;
    std::size_t full_count = 0;
    std::size_t reduced_count = 0;
    double percent = 0.0;  // 100 * (1 - reduced/full), 2-decimal rounded
    bool complete = false; // both formula lists present
};

struct ReductionStats {
    std::vector<ReductionRow> rows;
    std::size_t total_full = 0;
    std::size_t total_reduced = 0;
    double total_percent = 0.0;  // over complete rows only
};

// Formula-count comparison between the two rule files, one row per
// (ending, category) pair; pairs present in only one file are flagged
// incomplete and excluded from the totals.
ReductionStats reduction_stats(const RuleSet& rules);

}  // namespace subanta
