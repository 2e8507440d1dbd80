#pragma once

/**
 * @file sl2.hpp
 * @brief SL_2-specific constructions: the commutator closed form, trace
 * preimages of the commutator map, fiber membership for w = 1 and tr w = 2,
 * separation witnesses, relation scanning and the two explicit lemma checks
 * for the word [[x,y], x[x,y]x^-1].
 *
 * Throughout, t = diag(lambda, 1/lambda) and g = [[alpha, beta], [gamma, delta]].
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "wordmap/error.hpp"
#include "wordmap/eval.hpp"
#include "wordmap/matrix.hpp"
#include "wordmap/parse.hpp"
#include "wordmap/rings.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

template <Scalar S>
struct Sl2Pair {
    Matrix<S> g1;
    Matrix<S> g2;

    Tuple<S> tuple() const { return {g1, g2}; }
    bool operator==(const Sl2Pair&) const = default;
};

template <Scalar S>
Matrix<S> diag2(const S& lambda) {
    return Matrix<S>::of2(lambda, lambda.zero(), lambda.zero(), lambda.inverse());
}

/// A fixed representative of the non-trivial Weyl element, [[0,1],[-1,0]].
template <Scalar S>
Matrix<S> weyl_element(const S& sample) {
    return Matrix<S>::of2(sample.zero(), sample.one(), -sample.one(), sample.zero());
}

template <Scalar S>
Matrix<S> upper_unipotent(const S& u) {
    return Matrix<S>::of2(u.one(), u, u.zero(), u.one());
}

/// [t, g] for t = diag(lambda, 1/lambda):
///   [[ad - bc l^2,  ab(l^2 - 1)], [cd(l^-2 - 1),  ad - bc l^-2]]
template <Scalar S>
Matrix<S> commutator_closed_form(const S& lambda, const Matrix<S>& g) {
    const S &a = g(0, 0), &b = g(0, 1), &c = g(1, 0), &d = g(1, 1);
    const S l2 = lambda * lambda;
    const S li2 = l2.inverse();
    const S one = lambda.one();
    return Matrix<S>::of2(a * d - b * c * l2, a * b * (l2 - one), c * d * (li2 - one), a * d - b * c * li2);
}

/// 2 - beta gamma (lambda - 1/lambda)^2.
template <Scalar S>
S commutator_trace_formula(const S& lambda, const Matrix<S>& g) {
    const S diff = lambda - lambda.inverse();
    return lambda.from_int(2) - g(0, 1) * g(1, 0) * diff * diff;
}

template <Scalar S>
struct PreimageCoefficients {
    S p; // beta gamma
    S q; // alpha delta
};

/// p = (2 - a) / (l - 1/l)^2 and q = (l^2 + l^-2 - a) / (l - 1/l)^2; q - p = 1.
template <Scalar S>
PreimageCoefficients<S> preimage_coefficients(const S& a, const S& lambda) {
    const S li = lambda.inverse();
    const S diff = lambda - li;
    const S denom = diff * diff;
    if (denom.is_zero())
        throw DegenerateLambda("lambda = " + lambda.str() + " makes (lambda - 1/lambda)^2 vanish");
    const S inv = denom.inverse();
    return {(lambda.from_int(2) - a) * inv, (lambda * lambda + li * li - a) * inv};
}

/// (t, g) with tr [t, g] = a. gamma = p / beta; (alpha, delta) = (q, 1) when q != 0, else (0, 0).
template <Scalar S>
Sl2Pair<S> trace_preimage_commutator(const S& a, const S& lambda, const S& beta) {
    if (lambda == lambda.one() || lambda == -lambda.one())
        throw DegenerateLambda("lambda must differ from +-1");
    if (beta.is_zero())
        throw InvalidParams("beta must be nonzero");
    auto [p, q] = preimage_coefficients(a, lambda);
    const S gamma = p * beta.inverse();
    S alpha = q, delta = q.one();
    if (q.is_zero())
        delta = q.zero();
    return {diag2(lambda), Matrix<S>::of2(alpha, beta, gamma, delta)};
}

template <Scalar S>
Sl2Pair<S> q8_witness(const S& i, const S& mu) {
    return {Matrix<S>::of2(i, i.zero(), i.zero(), -i), Matrix<S>::of2(mu.zero(), mu, -mu.inverse(), mu.zero())};
}

struct FiberMembership {
    bool in_W; // w(p) = I
    bool in_T; // w(p) unipotent; for SL_2 this is tr w(p) = 2
};

template <Scalar S>
FiberMembership fiber_membership(const WordWithConstants& w, const Tuple<S>& point, const Binding<S>& binding = {}) {
    auto v = eval_group(w, point, binding);
    bool in_t = v.dim() == 2 ? v.trace() == v(0, 0).from_int(2) : is_unipotent(v);
    return {v.is_identity(), in_t};
}

// ---------------------------------------------------------------------------
// The five example words

enum class ExampleWord { Ex1, Ex2, Ex3, Ex4, Ex5 };

inline ExampleWord parse_example_word(std::string_view s) {
    if (s == "ex1")
        return ExampleWord::Ex1;
    if (s == "ex2")
        return ExampleWord::Ex2;
    if (s == "ex3")
        return ExampleWord::Ex3;
    if (s == "ex4")
        return ExampleWord::Ex4;
    if (s == "ex5")
        return ExampleWord::Ex5;
    throw InvalidParams("unknown example word '" + std::string(s) + "' (expected ex1..ex5)");
}

/// ex1 [x,y]; ex2 [x^m, y]; ex3 [x,y]^2; ex4 [x,y]^p; ex5 [[x,y], x[x,y]x^-1].
inline WordWithConstants example_word(ExampleWord e, long m = 2, long p = 5) {
    switch (e) {
    case ExampleWord::Ex1:
        return parse_word("[x,y]");
    case ExampleWord::Ex2:
        return parse_word("[x^" + std::to_string(m) + ", y]");
    case ExampleWord::Ex3:
        return parse_word("[x,y]^2");
    case ExampleWord::Ex4:
        return parse_word("[x,y]^" + std::to_string(p));
    case ExampleWord::Ex5:
        return parse_word("[[x,y], x [x,y] x^-1]");
    }
    throw InvalidParams("unknown example word");
}

/// A point with tr w = 2 and w != I, or none when no candidate verifies in this ring.
///
/// ex1-ex4: (diag(l, 1/l), [[1,1],[0,1]]) makes [x,y] (hence [x^m,y] and its powers)
/// a non-trivial unipotent. ex5: (diag(l, 1/l), w0 [[1,1],[0,1]]) lands in U^- \ {1}.
template <Field R>
std::optional<Sl2Pair<scalar_t<R>>> separation_witness(const R& ring, ExampleWord e, long m = 2, long p = 5) {
    using S = scalar_t<R>;
    const auto w = example_word(e, m, p);
    const S one = ring.one();
    for (long l = 2; l < 64; ++l) {
        S lambda = ring.from_int(l);
        if (lambda.is_zero() || power(lambda, 4) == one)
            continue;
        Sl2Pair<S> cand{diag2(lambda), upper_unipotent(one)};
        if (e == ExampleWord::Ex5)
            cand.g2 = weyl_element(one) * upper_unipotent(one);
        auto v = eval_group(w, cand.tuple());
        if (v.trace() == ring.from_int(2) && !v.is_identity())
            return cand;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Relation scanning in F_2 = <x, y>

struct RelationScan {
    bool trivial_group = false;
    std::vector<Word> relations; // sorted by length, then letter order x < y < x^-1 < y^-1
    std::size_t words_checked = 0;
};

/// Every non-empty reduced word of length <= max_len vanishing at the pair.
template <Scalar S>
RelationScan relation_scan(const Sl2Pair<S>& pair, std::size_t max_len) {
    if (max_len > 12)
        throw InvalidParams("relation scan is limited to length 12");
    RelationScan out;
    if (pair.g1.is_identity() && pair.g2.is_identity()) {
        out.trivial_group = true;
        return out;
    }
    // letters: 0 = x, 1 = y, 2 = x^-1, 3 = y^-1
    const std::array<Matrix<S>, 4> gens{pair.g1, pair.g2, inverse(pair.g1), inverse(pair.g2)};
    std::vector<int> stack;
    std::vector<std::vector<int>> found;
    auto dfs = [&](auto&& self, const Matrix<S>& acc) -> void {
        if (stack.size() == max_len)
            return;
        for (int l = 0; l < 4; ++l) {
            if (!stack.empty() && (stack.back() + 2) % 4 == l)
                continue;
            stack.push_back(l);
            Matrix<S> next = acc * gens[static_cast<std::size_t>(l)];
            ++out.words_checked;
            if (next.is_identity())
                found.push_back(stack);
            self(self, next);
            stack.pop_back();
        }
    };
    dfs(dfs, Matrix<S>::identity(2, pair.g1(0, 0)));
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const auto& f : found) {
        std::vector<Letter> ls;
        for (int l : f)
            ls.push_back(Letter{l % 2 + 1, l < 2 ? 1 : -1});
        out.relations.emplace_back(ls);
    }
    return out;
}

/// Elements of the group generated by `gens`, or none if it exceeds `limit`.
template <Scalar S>
std::optional<std::vector<Matrix<S>>> group_closure(const std::vector<Matrix<S>>& gens, std::size_t limit) {
    auto key = [](const Matrix<S>& m) {
        std::string k;
        for (const auto& x : m.entries())
            k += x.str() + ';';
        return k;
    };
    std::vector<Matrix<S>> elems{Matrix<S>::identity(gens.front().dim(), gens.front()(0, 0))};
    std::unordered_set<std::string> seen{key(elems.front())};
    std::vector<Matrix<S>> all_gens = gens;
    for (const auto& g : gens)
        all_gens.push_back(inverse(g));
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : all_gens) {
            Matrix<S> next = elems[head] * g;
            if (seen.insert(key(next)).second) {
                elems.push_back(next);
                if (elems.size() > limit)
                    return std::nullopt;
            }
        }
    }
    return elems;
}

// ---------------------------------------------------------------------------
// Lemma checks for w = [[x,y], x[x,y]x^-1]

template <Scalar S>
struct Lemma78Result {
    Matrix<S> value;
    bool in_Uminus;        // value is lower unitriangular
    bool trivial_iff_unit; // (value == I) == (u == 0)
};

/// Evaluates w at s = diag(l, 1/l), h = w0 [[1,u],[0,1]]; needs l^4 != 1.
template <Scalar S>
Lemma78Result<S> lemma78_check(const S& lambda, const S& u) {
    const S one = lambda.one();
    if (lambda.is_zero() || power(lambda, 4) == one)
        throw DegenerateLambda("the unitriangular check needs lambda^4 != 1");
    const auto w = example_word(ExampleWord::Ex5);
    const Sl2Pair<S> p{diag2(lambda), weyl_element(one) * upper_unipotent(u)};
    auto v = eval_group(w, p.tuple());
    bool lower = v(0, 0) == one && v(1, 1) == one && v(0, 1).is_zero();
    return {v, lower, v.is_identity() == u.is_zero()};
}

template <Scalar S>
struct Lemma101Result {
    Matrix<S> g;
    Matrix<S> z;          // [u, g]
    Matrix<S> inner;      // z u z u^-1
    Matrix<S> value;      // w(u, g)
    S trace;              // tr w(u, g)
    bool z_matches;       // z = [[0, 1/2], [-2, 0]]
    bool inner_matches;   // inner = [[-1, 1], [4, -5]]
    bool value_is_square; // w(u, g) = inner^2
    bool trace_not_two;

    bool holds() const { return z_matches && inner_matches && value_is_square && trace_not_two; }
};

/// u = [[1,1],[0,1]], g = [[i r/2, -i r/2], [-i r, 0]] with r = sqrt 2; needs i and sqrt 2 in the ring.
template <Field R>
Lemma101Result<scalar_t<R>> lemma101_check(const R& ring) {
    using S = scalar_t<R>;
    auto i = sqrt_minus_one(ring);
    auto r2 = ring.sqrt(ring.from_int(2));
    if (!i || !r2)
        throw RingLacksRoots(ring.name() + " lacks " + std::string(!i ? "i" : "sqrt(2)"));
    const S half = ring.from_int(2).inverse();
    const S ir = *i * *r2;
    const auto u = upper_unipotent(ring.one());
    const auto g = Matrix<S>::of2(ir * half, -(ir * half), -ir, ring.zero());
    const auto z = u * g * inverse(u) * inverse(g);
    const auto inner = z * u * z * inverse(u);
    const auto value = eval_group(example_word(ExampleWord::Ex5), Tuple<S>{u, g});
    const auto expect_z = Matrix<S>::of2(ring.zero(), half, ring.from_int(-2), ring.zero());
    const auto expect_inner =
        Matrix<S>::of2(ring.from_int(-1), ring.one(), ring.from_int(4), ring.from_int(-5));
    S tr = value.trace();
    return {g,
            z,
            inner,
            value,
            tr,
            z == expect_z,
            inner == expect_inner,
            value == inner * inner,
            !(tr == ring.from_int(2))};
}

// ---------------------------------------------------------------------------

/// Trace values of w(x_1..x_m, sigma) where the distinguished variable `y` is
/// replaced by the constant sigma; w must have y-exponent sum 0.
template <Field R, class Rng>
ValueProbe<scalar_t<R>> wsigma_trace_probe(const R& ring, const Word& w, const Matrix<scalar_t<R>>& sigma,
                                           std::size_t samples, Rng& rng, int y = 2, std::size_t cap = 256) {
    if (!zero_exponent_sum_in_y(w, y))
        throw InvalidParams("the exponents of " + variable_name(y) + " must sum to zero");
    const auto ws = WordWithConstants(w).substitute(y, "sigma");
    Binding<scalar_t<R>> b{{"sigma", sigma}};
    const std::size_t m = static_cast<std::size_t>(std::max(1, ws.max_var()));
    ValueProbe<scalar_t<R>> out;
    for (std::size_t s = 0; s < samples; ++s) {
        Tuple<scalar_t<R>> t;
        for (std::size_t i = 0; i < m; ++i)
            t.push_back(random_sln(ring, sigma.dim(), rng));
        out.record(eval_group(ws, t, b).trace(), cap);
    }
    return out;
}

} // namespace wordmap
