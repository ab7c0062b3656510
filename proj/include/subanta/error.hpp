#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subanta {

// Coarse grouping used by the CLI to pick an exit code:
//   word_lookup -> 2, rule_data -> 3, bad_data -> 4.
enum class ErrorKind {
    word_lookup,
    rule_data,
    bad_data,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// ---- phonology ----

class InvalidCharacterError : public Error {
public:
    InvalidCharacterError(std::size_t position, const std::string& what)
        : Error(ErrorKind::bad_data, what), position_(position) {}

    // Byte offset of the offending sequence in the input.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UndefinedOperationError : public Error {
public:
    explicit UndefinedOperationError(const std::string& what)
        : Error(ErrorKind::bad_data, what) {}
};

class NotAVowelError : public Error {
public:
    explicit NotAVowelError(const std::string& what)
        : Error(ErrorKind::bad_data, what) {}
};

class NotAMuteError : public Error {
public:
    explicit NotAMuteError(const std::string& what)
        : Error(ErrorKind::bad_data, what) {}
};

class EmptyWordError : public Error {
public:
    explicit EmptyWordError(const std::string& what)
        : Error(ErrorKind::bad_data, what) {}
};

// ---- lexicon ----

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorKind::bad_data, what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class UnknownCategoryError : public ParseError {
public:
    UnknownCategoryError(std::size_t line, const std::string& what)
        : ParseError(line, what) {}
};

class UnknownWordError : public Error {
public:
    explicit UnknownWordError(const std::string& what)
        : Error(ErrorKind::word_lookup, what) {}
};

class UnsupportedEndingError : public Error {
public:
    explicit UnsupportedEndingError(const std::string& what)
        : Error(ErrorKind::rule_data, what) {}
};

// ---- formula DSL / rule files ----

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error(ErrorKind::bad_data, what), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UnknownOpCodeError : public SyntaxError {
public:
    UnknownOpCodeError(std::size_t position, const std::string& what)
        : SyntaxError(position, what) {}
};

class StemIndexOutOfRangeError : public Error {
public:
    explicit StemIndexOutOfRangeError(const std::string& what)
        : Error(ErrorKind::bad_data, what) {}
};

class XmlError : public Error {
public:
    explicit XmlError(const std::string& what)
        : Error(ErrorKind::bad_data, what) {}
};

// ---- generator / search ----

class NoRecipeError : public Error {
public:
    explicit NoRecipeError(const std::string& what)
        : Error(ErrorKind::rule_data, what) {}
};

class NoRuleDataError : public Error {
public:
    explicit NoRuleDataError(const std::string& what)
        : Error(ErrorKind::rule_data, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what)
        : Error(ErrorKind::bad_data, what) {}
};

}  // namespace subanta
