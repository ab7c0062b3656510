#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subanta {

// The IAST sound inventory: 13 vowels, the 5x5 mute grid, y r l v,
// s' s. s, h, the anusvara m. and the visarga h.. Everything downstream
// (rules, generation, search) works on sequences of these units, never
// on raw characters, because e.g. "ai" is one sound but two letters.

enum class PhonemeClass : std::uint8_t {
    vowel,
    mute,
    semivowel,
    sibilant,
    aspirate_h,
    anusvara,
    visarga,
};

enum class VowelOp : std::uint8_t { dirgha, guna, vrddhi, ayadi, yan };
enum class MuteOp : std::uint8_t { soften, harden, nasalize };

class PhonemeString;

class Phoneme {
public:
    // Exact-symbol lookup ("kh", "ai", ...). Throws InvalidCharacterError
    // if the symbol is not in the inventory.
    static Phoneme from_symbol(std::string_view symbol);
    static std::optional<Phoneme> try_from_symbol(std::string_view symbol);

    const std::string& symbol() const;
    PhonemeClass klass() const;

    bool is_vowel() const { return klass() == PhonemeClass::vowel; }
    bool is_mute() const { return klass() == PhonemeClass::mute; }

    // Table-of-mutes coordinates; rows are the five vargas, columns the
    // hard/soft/nasal positions. Valid for mutes only.
    int mute_row() const;
    int mute_col() const;

    // Row index 1..13 in the vowel-operations table. Vowels only.
    int vowel_row() const;

    auto operator<=>(const Phoneme&) const = default;

private:
    explicit Phoneme(std::uint8_t id) : id_(id) {}

    std::uint8_t id_;
    friend struct InventoryAccess;
};

// Ordered phoneme sequence; the universal word/text value.
class PhonemeString {
public:
    PhonemeString() = default;
    PhonemeString(std::initializer_list<Phoneme> ps) : phonemes_(ps) {}
    explicit PhonemeString(std::vector<Phoneme> ps) : phonemes_(std::move(ps)) {}

    bool empty() const { return phonemes_.empty(); }
    std::size_t size() const { return phonemes_.size(); }
    const Phoneme& operator[](std::size_t i) const { return phonemes_[i]; }
    const Phoneme& back() const { return phonemes_.back(); }

    auto begin() const { return phonemes_.begin(); }
    auto end() const { return phonemes_.end(); }

    void push_back(Phoneme p) { phonemes_.push_back(p); }
    void append(const PhonemeString& other);
    void pop_back() { phonemes_.pop_back(); }

    // Replaces the final phoneme with a (possibly multi-phoneme) sequence;
    // this is how chained vowel operations splice results like "ar" in place.
    void splice_last(const PhonemeString& replacement);

    PhonemeString substr(std::size_t pos, std::size_t len) const;

    // True when `needle` occurs in *this as a contiguous phoneme run.
    bool contains(const PhonemeString& needle) const;

    std::string str() const;

    auto operator<=>(const PhonemeString&) const = default;

private:
    std::vector<Phoneme> phonemes_;
};

// All inventory phonemes in canonical order (vowels, mutes row-major,
// semivowels, sibilants, h, anusvara, visarga).
std::span<const Phoneme> inventory();

// Longest-match left-to-right segmentation of an IAST string.
// Throws InvalidCharacterError(byte offset) on anything outside the
// inventory. tokenize and render are mutually inverse.
PhonemeString tokenize(std::string_view text);
std::string render(const PhonemeString& ps);

// One cell of the vowel-operations table. Results may span several
// phonemes (guna of .r is "ar"). Undefined cells throw
// UndefinedOperationError; a non-vowel operand throws NotAVowelError.
PhonemeString vowel_op(Phoneme v, VowelOp op);

// Column projections on the mute grid: harden -> column 1,
// soften -> column 3, nasalize -> column 5. Non-mutes throw NotAMuteError.
Phoneme mute_op(Phoneme c, MuteOp op);

// Same-column move to the given row (1..5) of the mute grid.
Phoneme row_shift(Phoneme c, int row);

// Drops the final phoneme. Empty input throws EmptyWordError.
PhonemeString lopa(const PhonemeString& w);

// Retroflexion n -> n. (the rule behind forms like raamen.a): an n that is
// followed by a vowel and whose nearest preceding trigger r/.r/.r_/s.
// is separated from it only by permitted interveners (vowels, y, v, h,
// anusvara, gutturals, labials) is replaced; everything else unchanged.
PhonemeString natva(const PhonemeString& w);

bool is_natva_trigger(Phoneme p);
bool is_natva_intervener(Phoneme p);

}  // namespace subanta
