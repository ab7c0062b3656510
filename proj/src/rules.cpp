#include "subanta/rules.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "subanta/error.hpp"

namespace subanta {

namespace {

// Stem index, 1-based. Entry 37 is the strong-stem tail of words like
// pums. and uses the anusvara m..
constexpr std::array<const char*, kStemCount> kStems = {
    "ḥ",    "au",  "aḥ",   "āḥ",  "am",  "m",    "n",   "a",    "ā",   "bhyām",
    "bhiḥ", "aiḥ", "e",    "āya", "uḥ",  "bhyaḥ", "t",  "yoḥ",  "oḥ",  "ām",
    "sya",  "i",   "nām",  "su",  "ṣu",  "āy",   "ena", "nā",   "ai",  "y",
    "r",    "u",   "naḥ",  "nau", "ān",  "nam",  "āṃs",
};

// Splits a comma-separated formula list; commas inside quoted literals
// do not split.
std::vector<std::string> split_formula_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    bool in_quote = false;
    for (char ch : text) {
        if (ch == '"') in_quote = !in_quote;
        if (ch == ',' && !in_quote) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<Formula> parse_formula_list(const std::string& text, const std::string& where) {
    std::vector<Formula> formulas;
    for (const std::string& piece : split_formula_list(text)) {
        std::string src = trim(piece);
        if (src.empty())
            throw SyntaxError(0, where + ": empty formula in list");
        try {
            formulas.push_back(parse_formula(src));
        } catch (const SyntaxError& e) {
            throw SyntaxError(e.position(), where + ": " + e.what());
        } catch (const StemIndexOutOfRangeError& e) {
            throw SyntaxError(0, where + ": " + e.what());
        }
    }
    return formulas;
}

Phoneme single_phoneme(const std::string& symbol, const std::string& where) {
    PhonemeString ps;
    try {
        ps = tokenize(symbol);
    } catch (const InvalidCharacterError& e) {
        throw XmlError(where + ": " + e.what());
    }
    if (ps.size() != 1)
        throw XmlError(where + ": '" + symbol + "' is not a single phoneme");
    return ps[0];
}

}  // namespace

Gender gender_from_string(std::string_view s) {
    if (s == "m" || s == "masculine") return Gender::masculine;
    throw ParseError(0, "unsupported gender '" + std::string(s) + "'");
}

std::string to_string(Gender) { return "masculine"; }

std::string category_label(Category c) {
    return c == kSoleCategory ? "-" : std::to_string(c);
}

const PhonemeString& stem(int index) {
    static const std::array<PhonemeString, kStemCount> parsed = [] {
        std::array<PhonemeString, kStemCount> out;
        for (int i = 0; i < kStemCount; ++i) out[i] = tokenize(kStems[i]);
        return out;
    }();
    if (index < 1 || index > kStemCount)
        throw StemIndexOutOfRangeError("stem index " + std::to_string(index) +
                                       " outside 1..37");
    return parsed[index - 1];
}

const FormulaGroup* RuleTree::find(Gender g, Phoneme last) const {
    auto it = groups_.find({g, last.symbol()});
    return it == groups_.end() ? nullptr : &it->second;
}

std::vector<Formula> RuleTree::effective(Gender g, Phoneme last, Category c) const {
    const FormulaGroup* group = find(g, last);
    if (group == nullptr)
        throw NoRuleDataError("no declension formulas for ending '" + last.symbol() + "'");
    std::vector<Formula> out = group->common;
    if (group->categories.empty()) {
        if (c != kSoleCategory)
            throw NoRuleDataError("ending '" + last.symbol() +
                                  "' has no category " + category_label(c));
        return out;
    }
    auto it = group->categories.find(c);
    if (it == group->categories.end())
        throw NoRuleDataError("no formulas for ending '" + last.symbol() +
                              "' category " + category_label(c));
    out.insert(out.end(), it->second.begin(), it->second.end());
    return out;
}

std::vector<std::pair<std::string, Category>> RuleTree::coverage() const {
    std::vector<std::pair<std::string, Category>> out;
    for (const auto& [key, group] : groups_) {
        if (group.categories.empty()) {
            out.emplace_back(key.second, kSoleCategory);
        } else {
            for (const auto& [cat, formulas] : group.categories)
                out.emplace_back(key.second, cat);
        }
    }
    return out;
}

void RuleTree::insert(Gender g, const std::string& letter, FormulaGroup group) {
    groups_[{g, letter}] = std::move(group);
}

RuleTree parse_ruleset(std::istream& in, const std::string& name) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_xml(in, tree, pt::xml_parser::trim_whitespace | pt::xml_parser::no_comments);
    } catch (const pt::xml_parser_error& e) {
        throw XmlError(name + ": " + e.what());
    }

    const pt::ptree* root = nullptr;
    for (const auto& [key, node] : tree) {
        if (key == "<xmlattr>") continue;
        if (root != nullptr) throw XmlError(name + ": multiple root elements");
        if (key != "Rules") throw XmlError(name + ": expected root element <Rules>");
        root = &node;
    }
    if (root == nullptr) throw XmlError(name + ": no root element");

    RuleTree out;
    for (const auto& [gkey, gnode] : *root) {
        if (gkey == "<xmlattr>") continue;
        if (gkey != "Gender") throw XmlError(name + ": unexpected element <" + gkey + ">");
        std::string gattr = gnode.get<std::string>("<xmlattr>.G", "");
        Gender gender;
        try {
            gender = gender_from_string(gattr);
        } catch (const ParseError&) {
            throw XmlError(name + ": bad Gender attribute '" + gattr + "'");
        }

        for (const auto& [lkey, lnode] : gnode) {
            if (lkey == "<xmlattr>") continue;
            if (lkey != "LastLetter")
                throw XmlError(name + ": unexpected element <" + lkey + "> under Gender");
            std::string letter = lnode.get<std::string>("<xmlattr>.L", "");
            std::string where = name + ": Gender[" + gattr + "]/LastLetter[" + letter + "]";
            single_phoneme(letter, where);
            if (out.find(gender, Phoneme::from_symbol(letter)) != nullptr)
                throw XmlError(where + ": duplicate LastLetter");

            FormulaGroup group;
            std::string common_text = trim(lnode.data());
            if (!common_text.empty())
                group.common = parse_formula_list(common_text, where);

            for (const auto& [ckey, cnode] : lnode) {
                if (ckey == "<xmlattr>") continue;
                if (ckey != "Category")
                    throw XmlError(where + ": unexpected element <" + ckey + ">");
                std::string cattr = cnode.get<std::string>("<xmlattr>.C", "");
                int cat = 0;
                try {
                    std::size_t used = 0;
                    cat = std::stoi(cattr, &used);
                    if (used != cattr.size()) cat = 0;
                } catch (const std::exception&) {
                    cat = 0;
                }
                if (cat < 1)
                    throw XmlError(where + ": bad Category id '" + cattr + "' (must be >= 1)");
                if (group.categories.count(cat) != 0)
                    throw XmlError(where + ": duplicate Category " + cattr);
                group.categories[cat] =
                    parse_formula_list(cnode.data(), where + "/Category[" + cattr + "]");
            }
            out.insert(gender, letter, std::move(group));
        }
    }
    return out;
}

RuleTree load_ruleset(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open rule file: " + file.string());
    return parse_ruleset(in, file.filename().string());
}

const XPrimeRecipe* XPrimeTable::find(Phoneme last, Category c) const {
    auto it = by_key_.find({last.symbol(), c});
    return it == by_key_.end() ? nullptr : &rows_[it->second];
}

std::map<std::string, std::set<Category>> XPrimeTable::category_index() const {
    std::map<std::string, std::set<Category>> out;
    for (const XPrimeRecipe& row : rows_) out[row.ending].insert(row.category);
    return out;
}

void XPrimeTable::insert(XPrimeRecipe recipe) {
    auto key = std::make_pair(recipe.ending, recipe.category);
    if (by_key_.count(key) != 0)
        throw ParseError(0, "duplicate x' row for ending '" + recipe.ending +
                                "' category " + category_label(recipe.category));
    by_key_[key] = rows_.size();
    rows_.push_back(std::move(recipe));
}

XPrimeTable parse_xprime(std::istream& in, const std::string& name) {
    XPrimeTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, '\t')) fields.push_back(trim(field));
        if (fields.size() != 5)
            throw ParseError(lineno, name + ":" + std::to_string(lineno) +
                                         ": expected 5 tab-separated fields");

        XPrimeRecipe recipe;
        std::string where = name + ":" + std::to_string(lineno);
        try {
            recipe.ending = single_phoneme(fields[0], where).symbol();
        } catch (const XmlError& e) {
            throw ParseError(lineno, e.what());
        }
        if (fields[1] == "-") {
            recipe.category = kSoleCategory;
        } else {
            try {
                recipe.category = std::stoi(fields[1]);
            } catch (const std::exception&) {
                throw ParseError(lineno, where + ": bad category '" + fields[1] + "'");
            }
            if (recipe.category < 1)
                throw ParseError(lineno, where + ": bad category '" + fields[1] + "'");
        }
        try {
            recipe.formula = parse_formula(fields[2]);
            recipe.example_word = tokenize(fields[3]);
            recipe.example_x_prime = tokenize(fields[4]);
        } catch (const Error& e) {
            throw ParseError(lineno, where + ": " + e.what());
        }
        if (recipe.formula.base_prime)
            throw ParseError(lineno, where + ": x' recipe must be defined over base x");
        try {
            table.insert(std::move(recipe));
        } catch (const ParseError& e) {
            throw ParseError(lineno, where + ": " + e.what());
        }
    }
    return table;
}

XPrimeTable load_xprime(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open x' data file: " + file.string());
    return parse_xprime(in, file.filename().string());
}

RuleSet load_rules(const std::filesystem::path& full_file,
                   const std::filesystem::path& reduced_file,
                   const std::filesystem::path& xprime_file) {
    return RuleSet{
        load_ruleset(full_file),
        load_ruleset(reduced_file),
        load_xprime(xprime_file),
    };
}

}  // namespace subanta
