#pragma once

/**
 * @file rings.hpp
 * @brief Exact coefficient domains.
 *
 * Four scalar types are provided, each a value type with canonical form so
 * that `==` is exact equality:
 *
 *   Rational   - arbitrary precision fractions (GMP), always reduced
 *   ModP       - residues in [0, p) for a prime p
 *   Quad<B>    - a + b*sqrt(d) over a base field B with d a non-square in B
 *   Dual<B>    - a + b*eps over a base ring B with eps^2 = 0
 *
 * Scalars carry whatever context their arithmetic needs (the modulus, the
 * discriminant), so generic code can manufacture constants from any sample
 * element through `zero()`, `one()` and `from_int()`.
 *
 * Each scalar type has a matching ring object (RationalField, PrimeField,
 * QuadraticField<B>, DualRing<B>) used to create elements from nothing:
 * literals, random samples, roots of unity.
 */

#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wordmap/error.hpp"

namespace wordmap {

template <class S>
concept Scalar = std::regular<S> && requires(const S& a, const S& b, long k) {
    { a + b } -> std::same_as<S>;
    { a - b } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { -a } -> std::same_as<S>;
    { a.inverse() } -> std::same_as<S>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.zero() } -> std::same_as<S>;
    { a.one() } -> std::same_as<S>;
    { a.from_int(k) } -> std::same_as<S>;
    { a.str() } -> std::same_as<std::string>;
};

template <Scalar S>
S power(S base, long long e) {
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    S acc = base.one();
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Rational

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rational fraction(const mpz_class& num, const mpz_class& den) {
        if (den == 0)
            throw NotInvertible("zero denominator");
        mpq_class q(num, den);
        return Rational(std::move(q));
    }

    const mpq_class& value() const { return q_; }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    bool operator==(const Rational& o) const { return q_ == o.q_; }

    Rational inverse() const {
        if (q_ == 0)
            throw NotInvertible("0 has no inverse in Q");
        return Rational(mpq_class(1 / q_));
    }
    bool is_zero() const { return q_ == 0; }
    Rational zero() const { return Rational(0L); }
    Rational one() const { return Rational(1L); }
    Rational from_int(long k) const { return Rational(k); }
    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

// ---------------------------------------------------------------------------
// Prime field residues

class ModP {
public:
    ModP() = default;
    ModP(std::int64_t v, std::uint64_t p) : p_(p) {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    }
    static ModP raw(std::uint64_t v, std::uint64_t p) {
        ModP m;
        m.v_ = v % p;
        m.p_ = p;
        return m;
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    ModP operator+(const ModP& o) const {
        std::uint64_t s = v_ + o.v_;
        return raw(s >= p_ ? s - p_ : s, p_);
    }
    ModP operator-(const ModP& o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_); }
    ModP operator*(const ModP& o) const {
        auto prod = static_cast<unsigned __int128>(v_) * o.v_;
        return raw(static_cast<std::uint64_t>(prod % p_), p_);
    }
    ModP operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    bool operator==(const ModP& o) const = default;

    ModP inverse() const {
        if (v_ == 0)
            throw NotInvertible("0 has no inverse in F_" + std::to_string(p_));
        // extended Euclid on signed 128-bit to stay clear of overflow
        __int128 a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            __int128 q = a / b;
            __int128 t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        __int128 r = x0 % static_cast<__int128>(p_);
        if (r < 0)
            r += p_;
        return raw(static_cast<std::uint64_t>(r), p_);
    }
    bool is_zero() const { return v_ == 0; }
    ModP zero() const { return raw(0, p_); }
    ModP one() const { return raw(1 % p_, p_); }
    ModP from_int(long k) const { return ModP(k, p_); }
    std::string str() const { return std::to_string(v_); }

private:
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 1;
};

// ---------------------------------------------------------------------------
// a + b*sqrt(d)

template <Scalar B>
class Quad {
public:
    Quad() = default;
    Quad(B a, B b, B d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    const B& re() const { return a_; }
    const B& im() const { return b_; }
    const B& discriminant() const { return d_; }

    Quad operator+(const Quad& o) const { return {a_ + o.a_, b_ + o.b_, d_}; }
    Quad operator-(const Quad& o) const { return {a_ - o.a_, b_ - o.b_, d_}; }
    Quad operator*(const Quad& o) const {
        return {a_ * o.a_ + d_ * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d_};
    }
    Quad operator-() const { return {-a_, -b_, d_}; }
    bool operator==(const Quad& o) const { return a_ == o.a_ && b_ == o.b_; }

    Quad conjugate() const { return {a_, -b_, d_}; }
    B norm() const { return a_ * a_ - d_ * b_ * b_; }

    Quad inverse() const {
        B n = norm();
        if (n.is_zero())
            throw NotInvertible("zero has no inverse in quadratic extension");
        B ni = n.inverse();
        return {a_ * ni, -(b_ * ni), d_};
    }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    Quad zero() const { return {a_.zero(), a_.zero(), d_}; }
    Quad one() const { return {a_.one(), a_.zero(), d_}; }
    Quad from_int(long k) const { return {a_.from_int(k), a_.zero(), d_}; }

    std::string str() const {
        if (b_.is_zero())
            return a_.str();
        std::string unit = d_ == -d_.one() ? "i" : "sqrt(" + d_.str() + ")";
        std::string im = b_ == b_.one() ? unit : b_.str() + "*" + unit;
        if (a_.is_zero())
            return im;
        return a_.str() + "+" + im;
    }

private:
    B a_{}, b_{}, d_{};
};

// ---------------------------------------------------------------------------
// a + b*eps, eps^2 = 0

template <Scalar B>
class Dual {
public:
    Dual() = default;
    Dual(B a, B b) : a_(std::move(a)), b_(std::move(b)) {}
    explicit Dual(const B& a) : a_(a), b_(a.zero()) {}

    const B& real() const { return a_; }
    const B& eps() const { return b_; }

    Dual operator+(const Dual& o) const { return {a_ + o.a_, b_ + o.b_}; }
    Dual operator-(const Dual& o) const { return {a_ - o.a_, b_ - o.b_}; }
    Dual operator*(const Dual& o) const { return {a_ * o.a_, a_ * o.b_ + b_ * o.a_}; }
    Dual operator-() const { return {-a_, -b_}; }
    bool operator==(const Dual& o) const = default;

    // (a + b eps)^-1 = a^-1 - a^-2 b eps
    Dual inverse() const {
        B ai = a_.inverse();
        return {ai, -(ai * ai * b_)};
    }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    Dual zero() const { return {a_.zero(), a_.zero()}; }
    Dual one() const { return {a_.one(), a_.zero()}; }
    Dual from_int(long k) const { return {a_.from_int(k), a_.zero()}; }
    std::string str() const {
        if (b_.is_zero())
            return a_.str();
        return a_.str() + "+" + b_.str() + "*eps";
    }

private:
    B a_{}, b_{};
};

// ---------------------------------------------------------------------------
// Runtime description of a coefficient domain, as written on the command line.

struct RingDescriptor {
    enum class Kind { Rationals, PrimeField, QuadraticExt, DualNumbers };

    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;                          // PrimeField
    std::string d;                                // QuadraticExt discriminant literal
    std::shared_ptr<const RingDescriptor> base;   // QuadraticExt, DualNumbers

    std::string str() const {
        switch (kind) {
        case Kind::Rationals:
            return "Q";
        case Kind::PrimeField:
            return "Fp:" + std::to_string(p);
        case Kind::QuadraticExt:
            return base->str() + (d == "-1" ? "[i]" : "[sqrt(" + d + ")]");
        case Kind::DualNumbers:
            return "D(" + base->str() + ")";
        }
        return "?";
    }
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0)
            return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0)
                n /= f;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

class RationalField {
public:
    using scalar_type = Rational;
    static constexpr bool is_field = true;

    Rational zero() const { return Rational(0L); }
    Rational one() const { return Rational(1L); }
    Rational from_int(long k) const { return Rational(k); }
    Rational from_rational(const mpq_class& q) const { return Rational(q); }

    std::string name() const { return "Q"; }
    RingDescriptor descriptor() const { return {}; }
    std::optional<std::uint64_t> order() const { return std::nullopt; }

    /// Small fractions n/d with |n| <= 9 and 1 <= d <= 3.
    template <class Rng>
    Rational random(Rng& rng) const {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 3);
        long n = num(rng);
        long d = den(rng);
        return Rational::fraction(n, d);
    }

    /// Non-negative rational square root when one exists.
    std::optional<Rational> sqrt(const Rational& x) const {
        const mpq_class& q = x.value();
        if (q < 0)
            return std::nullopt;
        mpz_class num = q.get_num(), den = q.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return Rational::fraction(rn, rd);
    }
};

class PrimeField {
public:
    using scalar_type = ModP;
    static constexpr bool is_field = true;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (std::uint64_t{1} << 62) || !is_prime(p))
            throw InvalidRing("F_p requires a prime modulus below 2^62, got " + std::to_string(p));
    }

    std::uint64_t characteristic() const { return p_; }
    ModP zero() const { return ModP::raw(0, p_); }
    ModP one() const { return ModP::raw(1, p_); }
    ModP from_int(long k) const { return ModP(k, p_); }
    ModP from_rational(const mpq_class& q) const {
        mpz_class pz(std::to_string(p_));
        mpz_class n = q.get_num() % pz, d = q.get_den() % pz;
        if (n < 0)
            n += pz;
        ModP den = ModP::raw(d.get_ui(), p_);
        if (den.is_zero())
            throw NotInvertible("denominator " + q.get_den().get_str() + " vanishes in F_" +
                                std::to_string(p_));
        return ModP::raw(n.get_ui(), p_) * den.inverse();
    }
    ModP element(std::uint64_t k) const { return ModP::raw(k, p_); }

    std::string name() const { return "Fp:" + std::to_string(p_); }
    RingDescriptor descriptor() const {
        RingDescriptor r;
        r.kind = RingDescriptor::Kind::PrimeField;
        r.p = p_;
        return r;
    }
    std::optional<std::uint64_t> order() const { return p_; }

    template <class Rng>
    ModP random(Rng& rng) const {
        std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
        return ModP::raw(dist(rng), p_);
    }

    bool is_square(const ModP& x) const {
        if (x.is_zero() || p_ == 2)
            return true;
        return power(x, static_cast<long long>((p_ - 1) / 2)) == one();
    }

    /// Tonelli-Shanks; returns the root in [0, p/2].
    std::optional<ModP> sqrt(const ModP& x) const {
        if (!is_square(x))
            return std::nullopt;
        if (x.is_zero() || p_ == 2)
            return x;
        std::uint64_t q = p_ - 1, s = 0;
        while (q % 2 == 0) {
            q /= 2;
            ++s;
        }
        ModP z = from_int(2);
        while (is_square(z))
            z = z + one();
        ModP c = power(z, static_cast<long long>(q));
        ModP r = power(x, static_cast<long long>((q + 1) / 2));
        ModP t = power(x, static_cast<long long>(q));
        std::uint64_t m = s;
        while (!(t == one())) {
            std::uint64_t i = 0;
            ModP tt = t;
            while (!(tt == one())) {
                tt = tt * tt;
                ++i;
            }
            ModP b = c;
            for (std::uint64_t j = 0; j + i + 1 < m; ++j)
                b = b * b;
            r = r * b;
            c = b * b;
            t = t * c;
            m = i;
        }
        if (r.value() > p_ - r.value())
            r = -r;
        return r;
    }

private:
    std::uint64_t p_;
};

/// Single-level quadratic extension Base[sqrt(d)]; d must be a non-square in Base.
template <class Base>
class QuadraticField {
public:
    using base_scalar = typename Base::scalar_type;
    using scalar_type = Quad<base_scalar>;
    static constexpr bool is_field = true;

    QuadraticField(Base base, base_scalar d, std::string d_literal)
        : base_(std::move(base)), d_(std::move(d)), d_literal_(std::move(d_literal)) {
        if (d_.is_zero() || base_.sqrt(d_))
            throw InvalidRing("discriminant " + d_.str() + " is a square in " + base_.name());
    }

    const Base& base() const { return base_; }
    const base_scalar& discriminant() const { return d_; }

    scalar_type lift(const base_scalar& a) const { return {a, a.zero(), d_}; }
    scalar_type make(const base_scalar& a, const base_scalar& b) const { return {a, b, d_}; }
    scalar_type zero() const { return lift(base_.zero()); }
    scalar_type one() const { return lift(base_.one()); }
    scalar_type from_int(long k) const { return lift(base_.from_int(k)); }
    scalar_type from_rational(const mpq_class& q) const { return lift(base_.from_rational(q)); }
    scalar_type root() const { return make(base_.zero(), base_.one()); }

    std::string name() const { return descriptor().str(); }
    RingDescriptor descriptor() const {
        RingDescriptor r;
        r.kind = RingDescriptor::Kind::QuadraticExt;
        r.d = d_literal_;
        r.base = std::make_shared<RingDescriptor>(base_.descriptor());
        return r;
    }
    std::optional<std::uint64_t> order() const {
        auto q = base_.order();
        if (!q)
            return std::nullopt;
        return *q * *q;
    }

    template <class Rng>
    scalar_type random(Rng& rng) const {
        auto a = base_.random(rng);
        auto b = base_.random(rng);
        return make(a, b);
    }

    std::optional<scalar_type> sqrt(const scalar_type& x) const {
        if (x.im().is_zero()) {
            if (auto r = base_.sqrt(x.re()))
                return lift(*r);
            if (auto r = base_.sqrt(x.re() * d_.inverse()))
                return make(base_.zero(), *r);
            return std::nullopt;
        }
        // (u + v r)^2 = a + b r  <=>  u^2 + d v^2 = a, 2uv = b
        auto s = base_.sqrt(x.norm());
        if (!s)
            return std::nullopt;
        base_scalar half = base_.from_int(2).inverse();
        for (const base_scalar& sign : {*s, -*s}) {
            auto u = base_.sqrt((x.re() + sign) * half);
            if (u && !u->is_zero()) {
                base_scalar v = x.im() * (base_.from_int(2) * *u).inverse();
                return make(*u, v);
            }
        }
        return std::nullopt;
    }

private:
    Base base_;
    base_scalar d_;
    std::string d_literal_;
};

/// Dual numbers over a base ring; a ring with zero divisors, not a field.
template <class Base>
class DualRing {
public:
    using base_scalar = typename Base::scalar_type;
    using scalar_type = Dual<base_scalar>;
    static constexpr bool is_field = false;

    explicit DualRing(Base base) : base_(std::move(base)) {}

    const Base& base() const { return base_; }
    scalar_type lift(const base_scalar& a) const { return scalar_type(a); }
    scalar_type make(const base_scalar& a, const base_scalar& b) const { return {a, b}; }
    scalar_type epsilon() const { return make(base_.zero(), base_.one()); }
    scalar_type zero() const { return lift(base_.zero()); }
    scalar_type one() const { return lift(base_.one()); }
    scalar_type from_int(long k) const { return lift(base_.from_int(k)); }
    scalar_type from_rational(const mpq_class& q) const { return lift(base_.from_rational(q)); }

    std::string name() const { return descriptor().str(); }
    RingDescriptor descriptor() const {
        RingDescriptor r;
        r.kind = RingDescriptor::Kind::DualNumbers;
        r.base = std::make_shared<RingDescriptor>(base_.descriptor());
        return r;
    }
    std::optional<std::uint64_t> order() const {
        auto q = base_.order();
        if (!q)
            return std::nullopt;
        return *q * *q;
    }

    template <class Rng>
    scalar_type random(Rng& rng) const {
        auto a = base_.random(rng);
        auto b = base_.random(rng);
        return make(a, b);
    }

    std::optional<scalar_type> sqrt(const scalar_type&) const { return std::nullopt; }

private:
    Base base_;
};

template <class R>
concept Ring = requires(const R& r, long k) {
    typename R::scalar_type;
    { r.zero() } -> std::same_as<typename R::scalar_type>;
    { r.one() } -> std::same_as<typename R::scalar_type>;
    { r.from_int(k) } -> std::same_as<typename R::scalar_type>;
    { r.name() } -> std::convertible_to<std::string>;
};

template <class R>
concept Field = Ring<R> && R::is_field;

template <class R>
using scalar_t = typename R::scalar_type;

/// s with s^2 = -1, if the ring has one.
template <class R>
std::optional<scalar_t<R>> sqrt_minus_one(const R& ring) {
    return ring.sqrt(-ring.one());
}

/// Smallest element of multiplicative order exactly k, or none when k does not divide q-1.
inline std::optional<ModP> primitive_root_of_unity(const PrimeField& f, std::uint64_t k) {
    std::uint64_t q = f.characteristic();
    if (k == 0 || (q - 1) % k != 0)
        return std::nullopt;
    if (k == 1)
        return f.one();
    auto primes = prime_factors(k);
    for (std::uint64_t x = 2; x < q; ++x) {
        ModP g = f.element(x);
        if (!(power(g, static_cast<long long>(k)) == f.one()))
            continue;
        bool exact = true;
        for (auto r : primes) {
            if (power(g, static_cast<long long>(k / r)) == f.one()) {
                exact = false;
                break;
            }
        }
        if (exact)
            return g;
    }
    return std::nullopt;
}

} // namespace wordmap
