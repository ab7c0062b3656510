#include "subanta/formula.hpp"

#include <cctype>

#include "subanta/error.hpp"

namespace subanta {

namespace {

ChainOp op_from_code(char c, std::size_t pos) {
    using K = ChainOp::Kind;
    switch (c) {
        case 'l': return {K::lopa};
        case 'd': return {K::dirgha};
        case 'g': return {K::guna};
        case 'v': return {K::vrddhi};
        case 'a': return {K::ayadi};
        case 'y': return {K::yan};
        case 's': return {K::soften};
        case 'h': return {K::harden};
        case 'n': return {K::nasalize};
        case 'c': return {K::natva};
        case '1':
        case '2':
        case '3':
        case '4':
        case '5': return {K::row_shift, c - '0'};
        default:
            throw UnknownOpCodeError(pos, std::string("unknown op code '") + c +
                                              "' at byte " + std::to_string(pos));
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula parse() {
        Formula f;
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            parse_seq(f);
            expect(')');
            expect('.');
            f.closure = parse_closure();
        } else {
            parse_seq(f);
        }
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return f;
    }

private:
    void parse_seq(Formula& f) {
        parse_base(f);
        skip_ws();
        while (pos_ < text_.size() && peek() == '+') {
            ++pos_;
            f.tail.push_back(parse_atom());
            skip_ws();
        }
    }

    void parse_base(Formula& f) {
        skip_ws();
        if (pos_ >= text_.size() || peek() != 'x') fail("expected base 'x' or \"x'\"");
        ++pos_;
        if (pos_ < text_.size() && peek() == '\'') {
            f.base_prime = true;
            ++pos_;
        }
        if (pos_ < text_.size() && peek() == '.') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(peek())) &&
                   peek() != '+' && peek() != ')') {
                f.chain.push_back(op_from_code(peek(), pos_));
                ++pos_;
            }
            if (pos_ == start) fail("expected op codes after '.'");
        }
    }

    Atom parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected '@' stem reference or quoted literal");
        if (peek() == '@') {
            ++pos_;
            std::size_t start = pos_;
            long value = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
                value = value * 10 + (peek() - '0');
                ++pos_;
            }
            if (pos_ == start) fail("expected stem index after '@'");
            if (value < 1 || value > 37)
                throw StemIndexOutOfRangeError("stem index @" + std::to_string(value) +
                                               " outside 1..37");
            return StemRef{static_cast<int>(value)};
        }
        if (peek() == '"') {
            std::size_t open = pos_;
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && peek() != '"') ++pos_;
            if (pos_ >= text_.size())
                throw SyntaxError(open, "unterminated literal at byte " + std::to_string(open));
            std::string_view body = text_.substr(start, pos_ - start);
            ++pos_;
            try {
                return Literal{tokenize(body)};
            } catch (const InvalidCharacterError& e) {
                throw SyntaxError(start + e.position(),
                                  "bad literal at byte " + std::to_string(start) + ": " + e.what());
            }
        }
        fail("expected '@' stem reference or quoted literal");
    }

    Closure parse_closure() {
        skip_ws();
        if (pos_ < text_.size()) {
            char c = peek();
            ++pos_;
            if (c == 'c') return Closure::natva;
            if (c == 'y') return Closure::junction_yan;
        }
        fail("expected closure 'c' or 'y'");
    }

    char peek() const { return text_[pos_]; }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError(pos_, what + " at byte " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

char ChainOp::code() const {
    using K = Kind;
    switch (kind) {
        case K::lopa: return 'l';
        case K::dirgha: return 'd';
        case K::guna: return 'g';
        case K::vrddhi: return 'v';
        case K::ayadi: return 'a';
        case K::yan: return 'y';
        case K::soften: return 's';
        case K::harden: return 'h';
        case K::nasalize: return 'n';
        case K::natva: return 'c';
        case K::row_shift: return static_cast<char>('0' + row);
    }
    return '?';
}

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Formula& f) {
    std::string seq = f.base_prime ? "x'" : "x";
    if (!f.chain.empty()) {
        seq += '.';
        for (const ChainOp& op : f.chain) seq += op.code();
    }
    for (const Atom& atom : f.tail) {
        seq += " + ";
        if (const StemRef* s = std::get_if<StemRef>(&atom)) {
            seq += '@';
            seq += std::to_string(s->index);
        } else {
            seq += '"';
            seq += std::get<Literal>(atom).value.str();
            seq += '"';
        }
    }
    switch (f.closure) {
        case Closure::none: return seq;
        case Closure::natva: return "(" + seq + ").c";
        case Closure::junction_yan: return "(" + seq + ").y";
    }
    return seq;
}

}  // namespace subanta
