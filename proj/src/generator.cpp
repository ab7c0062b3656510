#include "subanta/generator.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "subanta/error.hpp"

namespace subanta {

namespace {

void apply_chain_op(PhonemeString& cur, const ChainOp& op) {
    using K = ChainOp::Kind;
    if (op.kind == K::lopa) {
        cur = lopa(cur);
        return;
    }
    if (op.kind == K::natva) {
        cur = natva(cur);
        return;
    }
    if (cur.empty())
        throw EmptyWordError(std::string("op '") + op.code() +
                             "' on empty intermediate word");
    Phoneme last = cur.back();
    switch (op.kind) {
        case K::dirgha: cur.splice_last(vowel_op(last, VowelOp::dirgha)); return;
        case K::guna: cur.splice_last(vowel_op(last, VowelOp::guna)); return;
        case K::vrddhi: cur.splice_last(vowel_op(last, VowelOp::vrddhi)); return;
        case K::ayadi: cur.splice_last(vowel_op(last, VowelOp::ayadi)); return;
        case K::yan: cur.splice_last(vowel_op(last, VowelOp::yan)); return;
        case K::soften: cur.splice_last({mute_op(last, MuteOp::soften)}); return;
        case K::harden: cur.splice_last({mute_op(last, MuteOp::harden)}); return;
        case K::nasalize: cur.splice_last({mute_op(last, MuteOp::nasalize)}); return;
        case K::row_shift: cur.splice_last({row_shift(last, op.row)}); return;
        default: return;  // lopa/natva handled above
    }
}

// Evaluation result list with first-wins dedup.
struct FormCollector {
    std::vector<PhonemeString> forms;
    std::vector<std::string> formulas;
    std::set<PhonemeString> seen;

    void add(PhonemeString form, std::string formula) {
        if (!seen.insert(form).second) return;
        forms.push_back(std::move(form));
        formulas.push_back(std::move(formula));
    }
};

}  // namespace

PhonemeString eval_formula(const Formula& f, const PhonemeString& word,
                           const PhonemeString& x_prime) {
    PhonemeString cur = f.base_prime ? x_prime : word;
    for (const ChainOp& op : f.chain) apply_chain_op(cur, op);

    PhonemeString tail;
    for (const Atom& atom : f.tail) {
        if (const StemRef* s = std::get_if<StemRef>(&atom))
            tail.append(stem(s->index));
        else
            tail.append(std::get<Literal>(atom).value);
    }

    if (f.closure == Closure::junction_yan && !cur.empty() && cur.back().is_vowel() &&
        !tail.empty() && tail[0].is_vowel()) {
        cur.splice_last(vowel_op(cur.back(), VowelOp::yan));
    }
    cur.append(tail);
    if (f.closure == Closure::natva) cur = natva(cur);
    return cur;
}

PhonemeString compute_x_prime(const PhonemeString& word, Gender g, Category c,
                              const XPrimeTable& xprime) {
    (void)g;  // masculine only
    if (word.empty()) throw EmptyWordError("cannot transform an empty word");
    const XPrimeRecipe* recipe = xprime.find(word.back(), c);
    if (recipe == nullptr)
        throw NoRecipeError("no x' recipe for ending '" + word.back().symbol() +
                            "' category " + category_label(c));
    return eval_formula(recipe->formula, word, word);
}

InflectionResult generate_full(const PhonemeString& word, Gender g, Category c,
                               const RuleSet& rules) {
    if (word.empty()) throw EmptyWordError("cannot decline an empty word");
    std::vector<Formula> formulas = rules.full.effective(g, word.back(), c);
    PhonemeString x_prime = compute_x_prime(word, g, c, rules.xprime);

    FormCollector out;
    out.seen.insert(word);  // the original word is not listed as a form
    for (const Formula& f : formulas)
        out.add(eval_formula(f, word, x_prime), to_string(f));

    return InflectionResult{word, std::move(x_prime), GenerationMode::full,
                            std::move(out.forms), std::move(out.formulas)};
}

InflectionResult generate_search_keys(const PhonemeString& word, Gender g, Category c,
                                      const RuleSet& rules) {
    if (word.empty()) throw EmptyWordError("cannot decline an empty word");
    std::vector<Formula> formulas = rules.reduced.effective(g, word.back(), c);
    PhonemeString x_prime = compute_x_prime(word, g, c, rules.xprime);

    FormCollector out;
    out.add(word, "X");
    for (const Formula& f : formulas)
        out.add(eval_formula(f, word, x_prime), to_string(f));

    return InflectionResult{word, std::move(x_prime), GenerationMode::reduced,
                            std::move(out.forms), std::move(out.formulas)};
}

ReductionStats reduction_stats(const RuleSet& rules) {
    auto count_in = [](const RuleTree& tree, const std::string& ending, Category c,
                       std::size_t& n) {
        const FormulaGroup* group = tree.find(Gender::masculine,
                                              Phoneme::from_symbol(ending));
        if (group == nullptr) return false;
        if (group->categories.empty()) {
            if (c != kSoleCategory) return false;
            n = group->common.size();
            return true;
        }
        auto it = group->categories.find(c);
        if (it == group->categories.end()) return false;
        n = group->common.size() + it->second.size();
        return true;
    };

    // Pairs in x'-table (Table 4) order first, then any extras.
    std::vector<std::pair<std::string, Category>> pairs;
    std::set<std::pair<std::string, Category>> seen;
    for (const XPrimeRecipe& row : rules.xprime.rows()) {
        if (seen.insert({row.ending, row.category}).second)
            pairs.emplace_back(row.ending, row.category);
    }
    for (const RuleTree* tree : {&rules.full, &rules.reduced}) {
        for (const auto& pair : tree->coverage()) {
            if (seen.insert(pair).second) pairs.push_back(pair);
        }
    }

    ReductionStats stats;
    for (const auto& [ending, cat] : pairs) {
        std::size_t full_n = 0;
        std::size_t reduced_n = 0;
        bool has_full = count_in(rules.full, ending, cat, full_n);
        bool has_reduced = count_in(rules.reduced, ending, cat, reduced_n);
        if (!has_full && !has_reduced) continue;

        ReductionRow row;
        row.ending = ending;
        row.category = cat;
        row.full_count = full_n;
        row.reduced_count = reduced_n;
        row.complete = has_full && has_reduced && full_n > 0;
        if (row.complete) {
            double pct = 100.0 * (1.0 - static_cast<double>(reduced_n) /
                                            static_cast<double>(full_n));
            row.percent = std::round(pct * 100.0) / 100.0;
            stats.total_full += full_n;
            stats.total_reduced += reduced_n;
        }
        stats.rows.push_back(std::move(row));
    }
    if (stats.total_full > 0) {
        double pct = 100.0 * (1.0 - static_cast<double>(stats.total_reduced) /
                                        static_cast<double>(stats.total_full));
        stats.total_percent = std::round(pct * 100.0) / 100.0;
    }
    return stats;
}

}  // namespace subanta
