#pragma once

// Textual forms of rings and scalars:
//
//   ring    := base [ "[" ( "i" | "sqrt(" rational ")" ) "]" ] | "D(" ring ")"
//   base    := "Q" | "Fp:" prime
//   scalar  := [sign] term { sign term }
//   term    := rational [ ["*"] unit ] | unit
//   unit    := "i" | "sqrt(" [sign] rational ")"
//
// "i" and "sqrt(d)" resolve to roots that actually exist in the chosen ring;
// asking for one that does not exist raises RingLacksRoots.

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "wordmap/error.hpp"
#include "wordmap/rings.hpp"

namespace wordmap {

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

class LiteralCursor {
public:
    explicit LiteralCursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool accept(std::string_view word) {
        skip_ws();
        if (s_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw SyntaxError(std::string("expected '") + c + "' in literal '" + std::string(s_) + "'",
                              pos_);
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    mpz_class integer() {
        skip_ws();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (b == pos_)
            throw SyntaxError("expected integer in literal '" + std::string(s_) + "'", b);
        return mpz_class(std::string(s_.substr(b, pos_ - b)));
    }

    mpq_class rational() {
        mpz_class n = integer();
        mpz_class d = 1;
        if (accept('/')) {
            std::size_t at = pos_;
            d = integer();
            if (d == 0)
                throw SyntaxError("zero denominator in literal '" + std::string(s_) + "'", at);
        }
        mpq_class q(n, d);
        q.canonicalize();
        return q;
    }

    std::size_t pos() const { return pos_; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline RingDescriptor parse_ring_descriptor(std::string_view text) {
    std::string s = detail::trim(text);
    RingDescriptor r;
    if (s.size() > 3 && s.rfind("D(", 0) == 0 && s.back() == ')') {
        r.kind = RingDescriptor::Kind::DualNumbers;
        r.base = std::make_shared<RingDescriptor>(parse_ring_descriptor(s.substr(2, s.size() - 3)));
        return r;
    }
    std::string base = s, ext;
    if (auto lb = s.find('['); lb != std::string::npos) {
        if (s.back() != ']')
            throw InvalidRing("unterminated extension in ring '" + s + "'");
        base = s.substr(0, lb);
        ext = detail::trim(s.substr(lb + 1, s.size() - lb - 2));
    }
    RingDescriptor b;
    if (base == "Q") {
        b.kind = RingDescriptor::Kind::Rationals;
    } else if (base.rfind("Fp:", 0) == 0 && base.size() > 3) {
        b.kind = RingDescriptor::Kind::PrimeField;
        try {
            std::size_t used = 0;
            b.p = std::stoull(base.substr(3), &used);
            if (used != base.size() - 3)
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw InvalidRing("bad modulus in ring '" + s + "'");
        }
        if (!is_prime(b.p))
            throw InvalidRing("modulus " + std::to_string(b.p) + " is not prime");
    } else {
        throw InvalidRing("unknown ring '" + s + "' (expected Q, Fp:<prime>, optionally [i] or [sqrt(d)])");
    }
    if (ext.empty())
        return b;
    r.kind = RingDescriptor::Kind::QuadraticExt;
    r.base = std::make_shared<RingDescriptor>(b);
    if (ext == "i") {
        r.d = "-1";
    } else if (ext.rfind("sqrt(", 0) == 0 && ext.back() == ')') {
        detail::LiteralCursor c(ext.substr(5, ext.size() - 6));
        bool neg = c.accept('-');
        mpq_class q = c.rational();
        if (!c.done())
            throw InvalidRing("bad discriminant in ring '" + s + "'");
        if (neg)
            q = -q;
        r.d = q.get_str();
    } else {
        throw InvalidRing("bad extension '" + ext + "' in ring '" + s + "'");
    }
    return r;
}

/// Parse a scalar literal in `ring`.
template <class R>
scalar_t<R> parse_scalar(const R& ring, std::string_view text) {
    using S = scalar_t<R>;
    detail::LiteralCursor c(text);
    if (c.done())
        throw SyntaxError("empty scalar literal", 0);

    auto unit = [&](bool& have) -> std::optional<S> {
        if (c.accept("sqrt(")) {
            bool neg = c.accept('-');
            mpq_class q = c.rational();
            c.expect(')');
            if (neg)
                q = -q;
            auto r = ring.sqrt(ring.from_rational(q));
            if (!r)
                throw RingLacksRoots("sqrt(" + q.get_str() + ") does not exist in " + ring.name());
            have = true;
            return *r;
        }
        if (c.accept('i')) {
            auto r = sqrt_minus_one(ring);
            if (!r)
                throw RingLacksRoots("i does not exist in " + ring.name());
            have = true;
            return *r;
        }
        return std::nullopt;
    };

    S acc = ring.zero();
    bool first = true;
    while (!c.done()) {
        bool neg = false;
        if (c.accept('-'))
            neg = true;
        else if (!c.accept('+') && !first)
            throw SyntaxError("expected '+' or '-' in literal '" + std::string(text) + "'", c.pos());
        first = false;
        S term = ring.one();
        bool have = false;
        if (c.at_digit()) {
            term = ring.from_rational(c.rational());
            have = true;
            c.accept('*');
        }
        if (auto u = unit(have))
            term = term * *u;
        if (!have)
            throw SyntaxError("malformed literal '" + std::string(text) + "'", c.pos());
        acc = neg ? acc - term : acc + term;
    }
    return acc;
}

/// Instantiate `f` with the field described by `desc`.
template <class F>
decltype(auto) visit_field(const RingDescriptor& desc, F&& f) {
    using K = RingDescriptor::Kind;
    switch (desc.kind) {
    case K::Rationals:
        return f(RationalField{});
    case K::PrimeField:
        return f(PrimeField(desc.p));
    case K::QuadraticExt: {
        mpq_class d(desc.d);
        d.canonicalize();
        if (desc.base->kind == K::Rationals) {
            RationalField b;
            return f(QuadraticField<RationalField>(b, b.from_rational(d), desc.d));
        }
        if (desc.base->kind == K::PrimeField) {
            PrimeField b(desc.base->p);
            return f(QuadraticField<PrimeField>(b, b.from_rational(d), desc.d));
        }
        throw InvalidRing("quadratic extensions are single-level: " + desc.str());
    }
    case K::DualNumbers:
        throw InvalidRing("dual numbers are not a field: " + desc.str());
    }
    throw InvalidRing("unknown ring kind");
}

} // namespace wordmap
