#include "subanta/phoneme.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "subanta/error.hpp"

namespace subanta {

namespace {

struct InventoryEntry {
    const char* symbol;
    PhonemeClass klass;
    std::int8_t row;  // vowels: 1..13; mutes: varga 1..5; else 0
    std::int8_t col;  // mutes: 1..5; else 0
};

// Canonical order: vowels, mutes row-major, y r l v, sibilants, h, m., h..
constexpr std::array<InventoryEntry, 48> kInventory = {{
    {"a", PhonemeClass::vowel, 1, 0},
    {"ā", PhonemeClass::vowel, 2, 0},
    {"i", PhonemeClass::vowel, 3, 0},
    {"ī", PhonemeClass::vowel, 4, 0},
    {"u", PhonemeClass::vowel, 5, 0},
    {"ū", PhonemeClass::vowel, 6, 0},
    {"ṛ", PhonemeClass::vowel, 7, 0},
    {"ṝ", PhonemeClass::vowel, 8, 0},
    {"ḷ", PhonemeClass::vowel, 9, 0},
    {"e", PhonemeClass::vowel, 10, 0},
    {"o", PhonemeClass::vowel, 11, 0},
    {"ai", PhonemeClass::vowel, 12, 0},
    {"au", PhonemeClass::vowel, 13, 0},

    {"k", PhonemeClass::mute, 1, 1},
    {"kh", PhonemeClass::mute, 1, 2},
    {"g", PhonemeClass::mute, 1, 3},
    {"gh", PhonemeClass::mute, 1, 4},
    {"ṅ", PhonemeClass::mute, 1, 5},
    {"c", PhonemeClass::mute, 2, 1},
    {"ch", PhonemeClass::mute, 2, 2},
    {"j", PhonemeClass::mute, 2, 3},
    {"jh", PhonemeClass::mute, 2, 4},
    {"ñ", PhonemeClass::mute, 2, 5},
    {"ṭ", PhonemeClass::mute, 3, 1},
    {"ṭh", PhonemeClass::mute, 3, 2},
    {"ḍ", PhonemeClass::mute, 3, 3},
    {"ḍh", PhonemeClass::mute, 3, 4},
    {"ṇ", PhonemeClass::mute, 3, 5},
    {"t", PhonemeClass::mute, 4, 1},
    {"th", PhonemeClass::mute, 4, 2},
    {"d", PhonemeClass::mute, 4, 3},
    {"dh", PhonemeClass::mute, 4, 4},
    {"n", PhonemeClass::mute, 4, 5},
    {"p", PhonemeClass::mute, 5, 1},
    {"ph", PhonemeClass::mute, 5, 2},
    {"b", PhonemeClass::mute, 5, 3},
    {"bh", PhonemeClass::mute, 5, 4},
    {"m", PhonemeClass::mute, 5, 5},

    {"y", PhonemeClass::semivowel, 0, 0},
    {"r", PhonemeClass::semivowel, 0, 0},
    {"l", PhonemeClass::semivowel, 0, 0},
    {"v", PhonemeClass::semivowel, 0, 0},

    {"ś", PhonemeClass::sibilant, 0, 0},
    {"ṣ", PhonemeClass::sibilant, 0, 0},
    {"s", PhonemeClass::sibilant, 0, 0},

    {"h", PhonemeClass::aspirate_h, 0, 0},
    {"ṃ", PhonemeClass::anusvara, 0, 0},
    {"ḥ", PhonemeClass::visarga, 0, 0},
}};

constexpr int kVowelCount = 13;
constexpr int kMuteBase = 13;

// Vowel-operations table, one row per vowel: dirgha, guna, vrddhi,
// ayadi, yan. nullptr marks an undefined cell.
constexpr std::array<std::array<const char*, 5>, kVowelCount> kVowelOps = {{
    /* a  */ {"ā", "a", "ā", nullptr, nullptr},
    /* ā  */ {"ā", nullptr, nullptr, nullptr, nullptr},
    /* i  */ {"ī", "e", "ai", nullptr, "y"},
    /* ī  */ {"ī", "e", "ai", nullptr, "y"},
    /* u  */ {"ū", "o", "au", nullptr, "v"},
    /* ū  */ {"ū", "o", "au", nullptr, "v"},
    /* ṛ  */ {"ṝ", "ar", "ār", nullptr, "r"},
    /* ṝ  */ {"ṝ", "ar", "ār", nullptr, "r"},
    /* ḷ  */ {"ṝ", "al", "āl", nullptr, "l"},
    /* e  */ {"e", "e", "ai", "ay", nullptr},
    /* o  */ {"o", "o", "au", "av", nullptr},
    /* ai */ {"ai", nullptr, nullptr, "āy", nullptr},
    /* au */ {"au", nullptr, nullptr, "āv", nullptr},
}};

const char* vowel_op_name(VowelOp op) {
    switch (op) {
        case VowelOp::dirgha: return "dirgha";
        case VowelOp::guna: return "guna";
        case VowelOp::vrddhi: return "vrddhi";
        case VowelOp::ayadi: return "ayadi";
        case VowelOp::yan: return "yan";
    }
    return "?";
}

}  // namespace

struct InventoryAccess {
    static Phoneme make(std::uint8_t id) { return Phoneme(id); }
    static std::uint8_t id(Phoneme p) { return p.id_; }
};

Phoneme Phoneme::from_symbol(std::string_view symbol) {
    if (auto p = try_from_symbol(symbol)) return *p;
    throw InvalidCharacterError(0, "not an inventory phoneme: '" +
                                       std::string(symbol) + "'");
}

std::optional<Phoneme> Phoneme::try_from_symbol(std::string_view symbol) {
    for (std::size_t i = 0; i < kInventory.size(); ++i) {
        if (symbol == kInventory[i].symbol)
            return InventoryAccess::make(static_cast<std::uint8_t>(i));
    }
    return std::nullopt;
}

const std::string& Phoneme::symbol() const {
    static const std::array<std::string, 48> symbols = [] {
        std::array<std::string, 48> s;
        for (std::size_t i = 0; i < kInventory.size(); ++i) s[i] = kInventory[i].symbol;
        return s;
    }();
    return symbols[id_];
}

PhonemeClass Phoneme::klass() const { return kInventory[id_].klass; }

int Phoneme::mute_row() const {
    if (!is_mute()) throw NotAMuteError("mute_row on non-mute '" + symbol() + "'");
    return kInventory[id_].row;
}

int Phoneme::mute_col() const {
    if (!is_mute()) throw NotAMuteError("mute_col on non-mute '" + symbol() + "'");
    return kInventory[id_].col;
}

int Phoneme::vowel_row() const {
    if (!is_vowel()) throw NotAVowelError("vowel_row on non-vowel '" + symbol() + "'");
    return kInventory[id_].row;
}

void PhonemeString::append(const PhonemeString& other) {
    phonemes_.insert(phonemes_.end(), other.phonemes_.begin(), other.phonemes_.end());
}

void PhonemeString::splice_last(const PhonemeString& replacement) {
    assert(!phonemes_.empty());
    phonemes_.pop_back();
    append(replacement);
}

PhonemeString PhonemeString::substr(std::size_t pos, std::size_t len) const {
    PhonemeString out;
    for (std::size_t i = pos; i < pos + len && i < phonemes_.size(); ++i)
        out.push_back(phonemes_[i]);
    return out;
}

bool PhonemeString::contains(const PhonemeString& needle) const {
    if (needle.empty()) return true;
    if (needle.size() > size()) return false;
    for (std::size_t i = 0; i + needle.size() <= size(); ++i) {
        if (std::equal(needle.begin(), needle.end(), phonemes_.begin() + i))
            return true;
    }
    return false;
}

std::string PhonemeString::str() const { return render(*this); }

std::span<const Phoneme> inventory() {
    static const std::vector<Phoneme> all = [] {
        std::vector<Phoneme> v;
        for (std::size_t i = 0; i < kInventory.size(); ++i)
            v.push_back(InventoryAccess::make(static_cast<std::uint8_t>(i)));
        return v;
    }();
    return all;
}

PhonemeString tokenize(std::string_view text) {
    PhonemeString out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::string_view rest = text.substr(pos);
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < kInventory.size(); ++i) {
            std::string_view sym = kInventory[i].symbol;
            if (sym.size() > best_len && rest.starts_with(sym)) {
                best = static_cast<int>(i);
                best_len = sym.size();
            }
        }
        if (best < 0) {
            // Report the whole UTF-8 sequence that failed to match.
            std::size_t n = 1;
            while (pos + n < text.size() &&
                   (static_cast<unsigned char>(text[pos + n]) & 0xC0) == 0x80)
                ++n;
            throw InvalidCharacterError(
                pos, "invalid character '" + std::string(text.substr(pos, n)) +
                         "' at byte " + std::to_string(pos));
        }
        out.push_back(InventoryAccess::make(static_cast<std::uint8_t>(best)));
        pos += best_len;
    }
    return out;
}

std::string render(const PhonemeString& ps) {
    std::string out;
    for (const Phoneme& p : ps) out += p.symbol();
    return out;
}

PhonemeString vowel_op(Phoneme v, VowelOp op) {
    if (!v.is_vowel())
        throw NotAVowelError("vowel operation on non-vowel '" + v.symbol() + "'");
    const char* cell = kVowelOps[v.vowel_row() - 1][static_cast<int>(op)];
    if (cell == nullptr)
        throw UndefinedOperationError(std::string(vowel_op_name(op)) +
                                      " undefined for '" + v.symbol() + "'");
    return tokenize(cell);
}

static Phoneme mute_at(int row, int col) {
    return InventoryAccess::make(
        static_cast<std::uint8_t>(kMuteBase + (row - 1) * 5 + (col - 1)));
}

Phoneme mute_op(Phoneme c, MuteOp op) {
    if (!c.is_mute())
        throw NotAMuteError("mute operation on non-mute '" + c.symbol() + "'");
    switch (op) {
        case MuteOp::harden: return mute_at(c.mute_row(), 1);
        case MuteOp::soften: return mute_at(c.mute_row(), 3);
        case MuteOp::nasalize: return mute_at(c.mute_row(), 5);
    }
    throw NotAMuteError("bad mute op");
}

Phoneme row_shift(Phoneme c, int row) {
    if (!c.is_mute())
        throw NotAMuteError("row shift on non-mute '" + c.symbol() + "'");
    if (row < 1 || row > 5)
        throw UndefinedOperationError("row shift target out of range: " +
                                      std::to_string(row));
    return mute_at(row, c.mute_col());
}

PhonemeString lopa(const PhonemeString& w) {
    if (w.empty()) throw EmptyWordError("lopa on empty word");
    PhonemeString out = w;
    out.pop_back();
    return out;
}

bool is_natva_trigger(Phoneme p) {
    const std::string& s = p.symbol();
    return s == "r" || s == "ṛ" || s == "ṝ" || s == "ṣ";
}

bool is_natva_intervener(Phoneme p) {
    switch (p.klass()) {
        case PhonemeClass::vowel:
        case PhonemeClass::aspirate_h:
        case PhonemeClass::anusvara:
            return true;
        case PhonemeClass::mute:
            // gutturals and labials pass; the other vargas block
            return p.mute_row() == 1 || p.mute_row() == 5;
        case PhonemeClass::semivowel: {
            const std::string& s = p.symbol();
            return s == "y" || s == "v";
        }
        default:
            return false;
    }
}

PhonemeString natva(const PhonemeString& w) {
    static const Phoneme dental_n = Phoneme::from_symbol("n");
    static const Phoneme retroflex_n = Phoneme::from_symbol("ṇ");

    std::vector<Phoneme> out(w.begin(), w.end());
    // Single pass over the original string: a trigger arms the rule, any
    // non-intervener disarms it. n itself is not an intervener, so one n
    // shields the next from an earlier trigger.
    bool armed = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
        Phoneme p = out[i];
        if (p == dental_n) {
            bool followed_by_vowel = i + 1 < out.size() && out[i + 1].is_vowel();
            if (armed && followed_by_vowel) out[i] = retroflex_n;
            armed = false;
            continue;
        }
        if (is_natva_trigger(p))
            armed = true;
        else if (!is_natva_intervener(p))
            armed = false;
    }
    return PhonemeString(std::move(out));
}

}  // namespace subanta
