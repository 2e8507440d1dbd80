#pragma once

// Recursive-descent parser for words with constants.
//
//   word     := term { term }                      juxtaposition is product
//   term     := factor [ "^" signed-int ]
//   factor   := variable | constant | "1"
//             | "[" word "," word "]" | "(" word ")"
//   variable := "x" | "y" | "z" | "x" int            x = x1, y = x2, z = x3
//   constant := any other identifier (s1, s2, sigma, ...)

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "wordmap/error.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

namespace detail {

class WordParser {
public:
    explicit WordParser(std::string_view s) : s_(s) {}

    WordWithConstants parse() {
        auto letters = word();
        skip();
        if (pos_ != s_.size())
            throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return WordWithConstants::normalize(letters);
    }

private:
    using Letters = std::vector<MixedLetter>;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c)
            throw SyntaxError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    bool at_factor() {
        char c = peek();
        return ident_start(c) || c == '[' || c == '(' || c == '1';
    }

    Letters word() {
        if (!at_factor())
            throw SyntaxError(pos_ < s_.size() ? std::string("unexpected '") + s_[pos_] + "'"
                                               : std::string("unexpected end of word"),
                              pos_);
        Letters out;
        while (at_factor()) {
            auto t = term();
            out.insert(out.end(), t.begin(), t.end());
        }
        return out;
    }

    Letters term() {
        Letters f = factor();
        if (peek() != '^')
            return f;
        ++pos_;
        skip();
        std::size_t at = pos_;
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (b == pos_)
            throw SyntaxError("expected integer exponent", pos_);
        if (pos_ - b > 9)
            throw SyntaxError("exponent too large", b);
        long k = std::stol(std::string(s_.substr(b, pos_ - b)));
        if (k == 0)
            throw ZeroExponent("zero exponent", at);
        if (neg)
            k = -k;
        return pow(f, k);
    }

    static Letters inverse(const Letters& f) {
        Letters out;
        for (auto it = f.rbegin(); it != f.rend(); ++it)
            out.push_back(it->inverse());
        return out;
    }

    static Letters pow(const Letters& f, long k) {
        // single variable: keep the exponent, no expansion
        if (f.size() == 1 && !f[0].is_constant())
            return {MixedLetter::variable(f[0].var, f[0].exp * k)};
        Letters base = k < 0 ? inverse(f) : f;
        Letters out;
        for (long i = 0; i < (k < 0 ? -k : k); ++i)
            out.insert(out.end(), base.begin(), base.end());
        return out;
    }

    Letters factor() {
        char c = peek();
        if (c == '[') {
            ++pos_;
            Letters u = word();
            expect(',');
            Letters v = word();
            expect(']');
            Letters out = u;
            out.insert(out.end(), v.begin(), v.end());
            auto ui = inverse(u), vi = inverse(v);
            out.insert(out.end(), ui.begin(), ui.end());
            out.insert(out.end(), vi.begin(), vi.end());
            return out;
        }
        if (c == '(') {
            ++pos_;
            Letters u = word();
            expect(')');
            return u;
        }
        if (c == '1') {
            ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw SyntaxError("only 1 may appear as a numeric factor", pos_ - 1);
            return {};
        }
        std::size_t b = pos_;
        while (pos_ < s_.size() && ident_char(s_[pos_]))
            ++pos_;
        std::string id(s_.substr(b, pos_ - b));
        if (id == "x" || id == "y" || id == "z")
            return {MixedLetter::variable(id == "x" ? 1 : id == "y" ? 2 : 3, 1)};
        if (id.size() > 1 && id[0] == 'x' &&
            std::all_of(id.begin() + 1, id.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            if (id.size() > 6)
                throw SyntaxError("variable index too large", b);
            int var = std::stoi(id.substr(1));
            if (var < 1)
                throw SyntaxError("variable index must be at least 1", b);
            return {MixedLetter::variable(var, 1)};
        }
        return {MixedLetter::symbol({id, false})};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline WordWithConstants parse_word(std::string_view text) { return detail::WordParser(text).parse(); }

} // namespace wordmap
