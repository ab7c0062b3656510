// Command-line front end: decline a noun, list its search keys, scan
// corpus files for inflected occurrences, or print the optimization
// statistics of the shipped rule data.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subanta/error.hpp"
#include "subanta/generator.hpp"
#include "subanta/lexicon.hpp"
#include "subanta/phoneme.hpp"
#include "subanta/rules.hpp"
#include "subanta/search.hpp"

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

#ifndef SUBANTA_DATA_DIR
#define SUBANTA_DATA_DIR "data"
#endif

struct Options {
    std::string word;
    std::string gender = "m";
    int category = -1;  // unset
    std::string rules_full = std::string(SUBANTA_DATA_DIR) + "/rules-full.xml";
    std::string rules_reduced = std::string(SUBANTA_DATA_DIR) + "/rules-reduced.xml";
    std::string xprime = std::string(SUBANTA_DATA_DIR) + "/xprime.tsv";
    std::string lexicon = std::string(SUBANTA_DATA_DIR) + "/lexicon.tsv";
    std::string format = "text";
    bool boundary = false;
    std::vector<std::string> files;
};

void add_data_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--rules-full", opt.rules_full, "full declension rule file");
    cmd->add_option("--rules-reduced", opt.rules_reduced, "reduced (search) rule file");
    cmd->add_option("--xprime", opt.xprime, "x' recipe file");
    cmd->add_option("--lexicon", opt.lexicon, "word category lexicon");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "tsv", "json-record"}));
}

void add_word_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("word", opt.word, "noun in IAST")->required();
    cmd->add_option("--gender", opt.gender, "grammatical gender")
        ->required()
        ->check(CLI::IsMember({"m", "masculine"}));
    cmd->add_option("--category", opt.category,
                    "declension category override (skips the lexicon)")
        ->check(CLI::PositiveNumber);
}

subanta::Category resolve_category(const Options& opt, const subanta::PhonemeString& word,
                                   subanta::Gender gender,
                                   const subanta::XPrimeTable& xprime) {
    if (opt.category >= 1) return opt.category;
    subanta::Lexicon lex =
        subanta::load_lexicon(opt.lexicon, xprime.category_index());
    return subanta::categorize(word, gender, lex);
}

json result_record(const subanta::InflectionResult& r) {
    json rec;
    rec["word"] = r.word.str();
    rec["xPrime"] = r.x_prime_form.str();
    rec["mode"] = r.mode == subanta::GenerationMode::full ? "full" : "reduced";
    rec["forms"] = json::array();
    for (const auto& f : r.forms) rec["forms"].push_back(f.str());
    rec["formulas"] = r.formulas;
    return rec;
}

void print_record(const json& rec) { std::cout << rec.dump(2) << "\n"; }

int run_decline(const Options& opt) {
    subanta::RuleSet rules =
        subanta::load_rules(opt.rules_full, opt.rules_reduced, opt.xprime);
    subanta::PhonemeString word = subanta::tokenize(opt.word);
    subanta::Gender gender = subanta::gender_from_string(opt.gender);
    subanta::Category category = resolve_category(opt, word, gender, rules.xprime);
    subanta::InflectionResult result =
        subanta::generate_full(word, gender, category, rules);

    if (opt.format == "json-record") {
        print_record(result_record(result));
    } else if (opt.format == "tsv") {
        for (std::size_t i = 0; i < result.forms.size(); ++i)
            std::cout << result.forms[i].str() << "\t" << result.formulas[i] << "\n";
    } else {
        std::cout << "x': " << result.x_prime_form.str() << "\n";
        for (const auto& form : result.forms) std::cout << form.str() << "\n";
    }
    return 0;
}

int run_search_forms(const Options& opt) {
    subanta::RuleSet rules =
        subanta::load_rules(opt.rules_full, opt.rules_reduced, opt.xprime);
    subanta::PhonemeString word = subanta::tokenize(opt.word);
    subanta::Gender gender = subanta::gender_from_string(opt.gender);
    subanta::Category category = resolve_category(opt, word, gender, rules.xprime);
    subanta::InflectionResult result =
        subanta::generate_search_keys(word, gender, category, rules);

    if (opt.format == "json-record") {
        print_record(result_record(result));
    } else if (opt.format == "tsv") {
        for (std::size_t i = 0; i < result.forms.size(); ++i)
            std::cout << result.forms[i].str() << "\t" << result.formulas[i] << "\n";
    } else {
        for (const auto& key : result.forms) std::cout << key.str() << "\n";
    }
    return 0;
}

int run_search(const Options& opt) {
    subanta::RuleSet rules =
        subanta::load_rules(opt.rules_full, opt.rules_reduced, opt.xprime);
    subanta::PhonemeString word = subanta::tokenize(opt.word);
    subanta::Gender gender = subanta::gender_from_string(opt.gender);
    subanta::Category category = resolve_category(opt, word, gender, rules.xprime);
    subanta::InflectionResult keys =
        subanta::generate_search_keys(word, gender, category, rules);

    std::vector<fs::path> files(opt.files.begin(), opt.files.end());
    std::vector<subanta::SearchMatch> matches =
        subanta::search_corpus(subanta::to_search_keys(keys), files, opt.boundary);

    if (opt.format == "json-record") {
        json rec = result_record(keys);
        rec["matches"] = json::array();
        for (const auto& m : matches) {
            rec["matches"].push_back({{"file", m.file},
                                      {"offset", m.byte_offset},
                                      {"line", m.line},
                                      {"column", m.column},
                                      {"key", m.key.str()},
                                      {"formula", m.formula}});
        }
        print_record(rec);
    } else {
        for (const auto& m : matches) {
            std::cout << m.file << "\t" << m.byte_offset << "\t" << m.line << "\t"
                      << m.column << "\t" << m.key.str() << "\t" << m.formula << "\n";
        }
    }
    return 0;
}

int run_stats(const Options& opt) {
    subanta::RuleSet rules =
        subanta::load_rules(opt.rules_full, opt.rules_reduced, opt.xprime);
    subanta::ReductionStats stats = subanta::reduction_stats(rules);

    char buf[32];
    for (const auto& row : stats.rows) {
        std::cout << row.ending << "\t" << subanta::category_label(row.category) << "\t";
        if (row.complete) {
            std::snprintf(buf, sizeof(buf), "%.2f", row.percent);
            std::cout << row.full_count << "\t" << row.reduced_count << "\t" << buf << "\n";
        } else {
            std::cout << (row.full_count > 0 ? std::to_string(row.full_count) : "n/a")
                      << "\t"
                      << (row.reduced_count > 0 ? std::to_string(row.reduced_count)
                                                : "n/a")
                      << "\tn/a\n";
        }
    }
    std::snprintf(buf, sizeof(buf), "%.2f", stats.total_percent);
    std::cout << "total\t\t" << stats.total_full << "\t" << stats.total_reduced << "\t"
              << buf << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"declension-aware generator and corpus search for Sanskrit masculine nouns"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* decline = app.add_subcommand("decline", "generate the full inflected forms");
    add_word_options(decline, opt);
    add_data_options(decline, opt);

    CLI::App* forms = app.add_subcommand("search-forms", "generate the reduced search keys");
    add_word_options(forms, opt);
    add_data_options(forms, opt);

    CLI::App* search = app.add_subcommand("search", "find inflected occurrences in files");
    add_word_options(search, opt);
    add_data_options(search, opt);
    search->add_option("files", opt.files, "IAST text files to scan")->required();
    search->add_flag("--boundary", opt.boundary,
                     "only match at line starts or after separators");

    CLI::App* stats = app.add_subcommand("stats", "per-category reduction statistics");
    add_data_options(stats, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (decline->parsed()) return run_decline(opt);
        if (forms->parsed()) return run_search_forms(opt);
        if (search->parsed()) return run_search(opt);
        if (stats->parsed()) return run_stats(opt);
    } catch (const subanta::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case subanta::ErrorKind::word_lookup: return 2;
            case subanta::ErrorKind::rule_data: return 3;
            case subanta::ErrorKind::bad_data: return 4;
        }
        return 4;
    }
    return 0;
}
