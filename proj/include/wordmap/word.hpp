#pragma once

/**
 * @file word.hpp
 * @brief Free-group words and words with constants.
 *
 * A `Word` is a freely reduced product of variable powers x_i^k (i >= 1).
 * A `WordWithConstants` has the alternating shape
 *
 *     w_1 s_1 w_2 s_2 ... w_r s_r w_{r+1}
 *
 * where each s_k names a constant (or its inverse) bound to a matrix at
 * evaluation time. The inner words w_2..w_r are never empty; a product
 * where two constants become adjacent after free reduction is rejected.
 */

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wordmap/error.hpp"

namespace wordmap {

/// x_var^exp; var >= 1, exp != 0.
struct Letter {
    int var = 1;
    long exp = 1;
    bool operator==(const Letter&) const = default;
};

/// Constant symbol occurrence; `inverted` stands for the symbol bound to the inverse matrix.
struct Constant {
    std::string name;
    bool inverted = false;

    bool operator==(const Constant&) const = default;
    auto operator<=>(const Constant&) const = default;
    std::string str() const { return inverted ? name + "^-1" : name; }
    Constant inverse() const { return {name, !inverted}; }
};

class Word {
public:
    Word() = default;

    /// Freely reduces `letters`: adjacent powers of one variable merge, zero powers vanish.
    explicit Word(const std::vector<Letter>& letters) {
        for (const Letter& l : letters)
            push(l);
    }

    static Word generator(int var, long exp = 1) { return Word({Letter{var, exp}}); }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    /// Sum of |exponents|, i.e. the length as a reduced word in x_i^{+-1}.
    std::size_t length() const {
        std::size_t n = 0;
        for (const auto& l : letters_)
            n += static_cast<std::size_t>(std::labs(l.exp));
        return n;
    }

    int max_var() const {
        int m = 0;
        for (const auto& l : letters_)
            m = std::max(m, l.var);
        return m;
    }

    bool operator==(const Word&) const = default;

    Word operator*(const Word& o) const {
        Word r = *this;
        for (const Letter& l : o.letters_)
            r.push(l);
        return r;
    }

private:
    void push(const Letter& l) {
        if (l.exp == 0)
            return;
        if (!letters_.empty() && letters_.back().var == l.var) {
            letters_.back().exp += l.exp;
            if (letters_.back().exp == 0)
                letters_.pop_back();
            return;
        }
        letters_.push_back(l);
    }

    std::vector<Letter> letters_;
};

inline Word reduce(const Word& w) { return Word(w.letters()); }

inline Word invert(const Word& w) {
    std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
    for (auto& l : out)
        l.exp = -l.exp;
    return Word(out);
}

inline Word concat(const Word& u, const Word& v) { return u * v; }

inline Word power(const Word& w, long k) {
    Word base = k < 0 ? invert(w) : w;
    Word acc;
    for (long i = 0; i < std::labs(k); ++i)
        acc = acc * base;
    return acc;
}

/// [u, v] = u v u^-1 v^-1.
inline Word commutator(const Word& u, const Word& v) { return u * v * invert(u) * invert(v); }

/// Sum of the exponents of variable `y` (the distinguished variable of a word in F_{m+1}) is zero.
inline bool zero_exponent_sum_in_y(const Word& w, int y = 2) {
    long s = 0;
    for (const auto& l : w.letters())
        if (l.var == y)
            s += l.exp;
    return s == 0;
}

inline std::string variable_name(int var) {
    switch (var) {
    case 1:
        return "x";
    case 2:
        return "y";
    case 3:
        return "z";
    default:
        return "x" + std::to_string(var);
    }
}

inline std::string render_letter(const std::string& base, long exp) {
    return exp == 1 ? base : base + "^" + std::to_string(exp);
}

inline std::string render(const Word& w) {
    if (w.empty())
        return "1";
    std::string s;
    for (const auto& l : w.letters()) {
        if (!s.empty())
            s += ' ';
        s += render_letter(variable_name(l.var), l.exp);
    }
    return s;
}

/// Letter of a word that may contain constants; `var == 0` marks a constant occurrence.
struct MixedLetter {
    int var = 0;
    long exp = 1;
    Constant constant;

    static MixedLetter variable(int v, long e) { return {v, e, {}}; }
    static MixedLetter symbol(Constant c) { return {0, 1, std::move(c)}; }
    bool is_constant() const { return var == 0; }
    MixedLetter inverse() const {
        return is_constant() ? symbol(constant.inverse()) : variable(var, -exp);
    }
};

class WordWithConstants {
public:
    WordWithConstants() : words_(1) {}
    WordWithConstants(Word w) : words_{std::move(w)} {}

    /// Free reduction (constants cancel against their inverses) followed by the
    /// alternating-shape check.
    static WordWithConstants normalize(const std::vector<MixedLetter>& letters) {
        std::vector<MixedLetter> stack;
        for (const auto& l : letters) {
            if (!l.is_constant() && l.exp == 0)
                continue;
            if (!stack.empty()) {
                auto& top = stack.back();
                if (l.is_constant() && top.is_constant() && top.constant == l.constant.inverse()) {
                    stack.pop_back();
                    continue;
                }
                if (!l.is_constant() && top.var == l.var) {
                    top.exp += l.exp;
                    if (top.exp == 0)
                        stack.pop_back();
                    continue;
                }
            }
            stack.push_back(l);
        }
        WordWithConstants out;
        out.words_.clear();
        std::vector<Letter> cur;
        bool after_constant = false;
        for (const auto& l : stack) {
            if (l.is_constant()) {
                if (after_constant && cur.empty())
                    throw EmptyInnerWord("constants " + out.constants_.back().str() + " and " +
                                         l.constant.str() + " are adjacent after reduction");
                out.words_.emplace_back(cur);
                cur.clear();
                out.constants_.push_back(l.constant);
                after_constant = true;
            } else {
                cur.push_back(Letter{l.var, l.exp});
            }
        }
        out.words_.emplace_back(cur);
        return out;
    }

    /// Number of constant occurrences r.
    std::size_t r() const { return constants_.size(); }
    const std::vector<Word>& words() const { return words_; }
    const std::vector<Constant>& constants() const { return constants_; }
    bool is_pure() const { return constants_.empty(); }

    Word as_word() const {
        if (!is_pure())
            throw InvalidParams("word contains constants");
        return words_.front();
    }

    int max_var() const {
        int m = 0;
        for (const auto& w : words_)
            m = std::max(m, w.max_var());
        return m;
    }

    std::set<std::string> symbols() const {
        std::set<std::string> s;
        for (const auto& c : constants_)
            s.insert(c.name);
        return s;
    }

    std::vector<MixedLetter> mixed_letters() const {
        std::vector<MixedLetter> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            for (const auto& l : words_[i].letters())
                out.push_back(MixedLetter::variable(l.var, l.exp));
            if (i < constants_.size())
                out.push_back(MixedLetter::symbol(constants_[i]));
        }
        return out;
    }

    /// Replace every occurrence of variable `var` by the constant `c`.
    WordWithConstants substitute(int var, const std::string& c) const {
        std::vector<MixedLetter> out;
        for (const auto& l : mixed_letters()) {
            if (!l.is_constant() && l.var == var) {
                for (long k = 0; k < std::labs(l.exp); ++k)
                    out.push_back(MixedLetter::symbol({c, l.exp < 0}));
            } else {
                out.push_back(l);
            }
        }
        return normalize(out);
    }

    bool operator==(const WordWithConstants&) const = default;

private:
    std::vector<Word> words_;
    std::vector<Constant> constants_;
};

inline std::string render(const WordWithConstants& w) {
    std::string s;
    for (std::size_t i = 0; i < w.words().size(); ++i) {
        if (!w.words()[i].empty()) {
            if (!s.empty())
                s += ' ';
            s += render(w.words()[i]);
        }
        if (i < w.r()) {
            if (!s.empty())
                s += ' ';
            s += w.constants()[i].str();
        }
    }
    return s.empty() ? "1" : s;
}

/// Exponent masses of a word and the homogeneity degrees of its adjugate extension.
struct ExponentData {
    struct PerVariable {
        long a_plus = 0; // sum of positive exponents of this variable
        long b = 0;      // sum of |negative exponents| of this variable
        long degree = 0; // a_plus + (n-1) b
    };

    long a = 0;
    long b = 0;
    long total_degree = 0; // a + (n-1) b
    std::map<int, PerVariable> per_variable;

    long degree(int var) const {
        auto it = per_variable.find(var);
        return it == per_variable.end() ? 0 : it->second.degree;
    }
};

inline ExponentData exponent_data(const WordWithConstants& w, std::size_t n) {
    ExponentData d;
    const long nm1 = static_cast<long>(n) - 1;
    for (const auto& seg : w.words())
        for (const auto& l : seg.letters()) {
            auto& pv = d.per_variable[l.var];
            if (l.exp > 0) {
                d.a += l.exp;
                pv.a_plus += l.exp;
            } else {
                d.b -= l.exp;
                pv.b -= l.exp;
            }
        }
    for (auto& [var, pv] : d.per_variable)
        pv.degree = pv.a_plus + nm1 * pv.b;
    d.total_degree = d.a + nm1 * d.b;
    return d;
}

} // namespace wordmap
