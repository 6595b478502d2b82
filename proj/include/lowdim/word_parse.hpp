#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lowdim/mcg.hpp"

namespace lowdim {

// Error in the twist-word shorthand grammar, with the byte offset of the
// offending character.
class WordSyntaxError : public std::runtime_error {
public:
    WordSyntaxError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

// Grammar:  word := item* ;  item := ('a'|'b'|group) ('^' int)? ;
// group := '(' word ')'.  Whitespace is ignored everywhere; "a^3b" and
// "a^3 b" parse the same.
class WordParser {
public:
    explicit WordParser(const std::string& text) : s_(text) {}

    TwistWord parse() {
        TwistWord w = parse_sequence(/*inside_group=*/false);
        if (pos_ < s_.size()) throw WordSyntaxError("unexpected ')'", pos_);
        return w;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    TwistWord parse_sequence(bool inside_group) {
        TwistWord w;
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            const char c = s_[pos_];
            if (c == ')') {
                if (!inside_group) break;
                return w;
            }
            if (c == 'a' || c == 'b') {
                ++pos_;
                const long long e = parse_exponent_opt();
                w = w * (c == 'a' ? TwistWord::a(e) : TwistWord::b(e));
            } else if (c == '(') {
                const std::size_t open = pos_++;
                TwistWord inner = parse_sequence(/*inside_group=*/true);
                skip_ws();
                if (pos_ >= s_.size() || s_[pos_] != ')')
                    throw WordSyntaxError("unclosed '('", open);
                ++pos_;
                w = w * inner.repeated(parse_exponent_opt());
            } else {
                throw WordSyntaxError(std::string("unexpected character '") + c + "'", pos_);
            }
        }
        // on end of input inside a group, the caller reports the unclosed '('
        return w;
    }

    long long parse_exponent_opt() {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != '^') return 1;
        ++pos_;
        skip_ws();
        const std::size_t start = pos_;
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw WordSyntaxError("expected integer exponent", pos_);
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1LL << 40))
                throw WordSyntaxError("exponent too large", start);
            ++pos_;
        }
        if (v == 0) throw WordSyntaxError("exponent must be nonzero", start);
        return neg ? -v : v;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Parse the a/b shorthand grammar, e.g. "a^4 b a^3 b a^3 b^4 a b^3 a b^3" or
// "(b^3 a)^6". Group exponents expand the group (negative exponent inverts).
inline TwistWord parse_word(const std::string& text) {
    return detail::WordParser(text).parse();
}

}  // namespace lowdim
