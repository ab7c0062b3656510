#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "subanta/phoneme.hpp"

namespace subanta {

// A declension formula: a base word selector (x = the word as given,
// x' = its pre-transformed shape) with a chain of last-letter operations,
// followed by appended stems and/or literal strings, optionally wrapped
// in a whole-word closure. Concrete syntax:
//
//   formula := seq | "(" seq ")" "." closure
//   seq     := base ("+" atom)*
//   base    := ("x" | "x'") ("." opcode+)?
//   atom    := "@" int | "\"" IAST literal "\""
//   closure := "c" | "y"
//
// Opcodes: l (drop last), d/g/v/a/y (vowel grades), s/h/n (mute column
// moves), c (retroflexion pass), 1..5 (mute row shift). Whitespace is
// insignificant; printing normalizes to one space around "+".

struct ChainOp {
    enum class Kind {
        lopa,
        dirgha,
        guna,
        vrddhi,
        ayadi,
        yan,
        soften,
        harden,
        nasalize,
        natva,
        row_shift,
    };

    Kind kind;
    int row = 0;  // 1..5, row_shift only

    char code() const;

    bool operator==(const ChainOp&) const = default;
};

struct StemRef {
    int index;  // 1..37

    bool operator==(const StemRef&) const = default;
};

struct Literal {
    PhonemeString value;

    bool operator==(const Literal&) const = default;
};

using Atom = std::variant<StemRef, Literal>;

enum class Closure { none, natva, junction_yan };

struct Formula {
    bool base_prime = false;
    std::vector<ChainOp> chain;
    std::vector<Atom> tail;
    Closure closure = Closure::none;

    bool operator==(const Formula&) const = default;
};

// Throws SyntaxError (bad shape), UnknownOpCodeError (bad chain code) or
// StemIndexOutOfRangeError (@0, @38, ...); positions are byte offsets.
Formula parse_formula(std::string_view text);

// Canonical text; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

}  // namespace subanta
