#pragma once

/**
 * @file eval.hpp
 * @brief Word maps on matrix tuples.
 *
 * Two evaluations of a word with constants w = w_1 s_1 ... s_r w_{r+1}:
 *
 *  - eval_group: substitute group elements, negative powers use true inverses.
 *  - eval_adjugate_extension: substitute arbitrary matrices, a negative power
 *    x^-k becomes (adj x)^k. The result is polynomial in the entries and
 *    agrees with eval_group on SL_n; on GL_n the two differ by the factor
 *    prod_r det(x_r)^(b_r), where b_r is the negative exponent mass of x_r.
 *
 * Constants are always replaced by their bound matrix or its true inverse.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordmap/error.hpp"
#include "wordmap/matrix.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

template <Scalar S>
using Binding = std::map<std::string, Matrix<S>>;

template <Scalar S>
using Tuple = std::vector<Matrix<S>>;

namespace detail {

enum class EvalMode { Group, Adjugate };

template <Scalar S>
std::size_t check_inputs(const WordWithConstants& w, const Tuple<S>& tuple, const Binding<S>& binding) {
    std::optional<std::size_t> n;
    auto see = [&](std::size_t d, const std::string& what) {
        if (n && *n != d)
            throw DimensionMismatch(what + " has dimension " + std::to_string(d) + ", expected " +
                                    std::to_string(*n));
        n = d;
    };
    for (std::size_t i = 0; i < tuple.size(); ++i)
        see(tuple[i].dim(), "argument " + std::to_string(i + 1));
    for (const auto& c : w.constants()) {
        auto it = binding.find(c.name);
        if (it == binding.end())
            throw UnboundConstant("constant '" + c.name + "' is not bound");
        see(it->second.dim(), "constant '" + c.name + "'");
    }
    if (static_cast<std::size_t>(w.max_var()) > tuple.size())
        throw DimensionMismatch("word uses " + std::to_string(w.max_var()) + " variables, tuple has " +
                                std::to_string(tuple.size()));
    if (!n)
        throw DimensionMismatch("cannot infer the matrix dimension from an empty tuple");
    return *n;
}

template <Scalar S>
Matrix<S> evaluate(const WordWithConstants& w, const Tuple<S>& tuple, const Binding<S>& binding,
                   EvalMode mode) {
    const std::size_t n = check_inputs(w, tuple, binding);
    const S& sample = tuple.empty() ? binding.at(w.constants().front().name)(0, 0) : tuple.front()(0, 0);
    std::vector<std::optional<Matrix<S>>> negated(tuple.size());
    auto neg = [&](int var) -> const Matrix<S>& {
        auto& slot = negated[static_cast<std::size_t>(var - 1)];
        if (!slot)
            slot = mode == EvalMode::Group ? inverse(tuple[static_cast<std::size_t>(var - 1)])
                                           : adjugate(tuple[static_cast<std::size_t>(var - 1)]);
        return *slot;
    };
    Matrix<S> acc = Matrix<S>::identity(n, sample);
    for (std::size_t i = 0; i < w.words().size(); ++i) {
        for (const auto& l : w.words()[i].letters()) {
            const Matrix<S>& base = l.exp > 0 ? tuple[static_cast<std::size_t>(l.var - 1)] : neg(l.var);
            acc = acc * base.pow(static_cast<unsigned long long>(l.exp > 0 ? l.exp : -l.exp));
        }
        if (i < w.r()) {
            const Constant& c = w.constants()[i];
            const Matrix<S>& sigma = binding.at(c.name);
            acc = acc * (c.inverted ? inverse(sigma) : sigma);
        }
    }
    return acc;
}

} // namespace detail

/// Literal group evaluation; negative powers use true inverses.
template <Scalar S>
Matrix<S> eval_group(const WordWithConstants& w, const Tuple<S>& tuple, const Binding<S>& binding = {}) {
    return detail::evaluate(w, tuple, binding, detail::EvalMode::Group);
}

/// Adjugate extension; defined on every tuple of matrices, singular ones included.
template <Scalar S>
Matrix<S> eval_adjugate_extension(const WordWithConstants& w, const Tuple<S>& tuple,
                                  const Binding<S>& binding = {}) {
    return detail::evaluate(w, tuple, binding, detail::EvalMode::Adjugate);
}

template <Scalar S>
struct EvalReport {
    Matrix<S> value;
    std::string ring;
    std::size_t word_length;
};

template <Ring R>
EvalReport<scalar_t<R>> evaluate(const R& ring, const WordWithConstants& w, const Tuple<scalar_t<R>>& tuple,
                                 const Binding<scalar_t<R>>& binding = {}) {
    std::size_t len = w.r();
    for (const auto& seg : w.words())
        len += seg.length();
    return {eval_group(w, tuple, binding), ring.name(), len};
}

template <Scalar S>
struct RestrictionCheck {
    S delta;                // prod_r det(x_r)^(b_r)
    Matrix<S> extension;    // adjugate extension at the tuple
    Matrix<S> group_value;  // group evaluation at the tuple
    bool holds;             // extension == delta * group_value
};

template <Scalar S>
RestrictionCheck<S> check_restriction_identities(const WordWithConstants& w, const Tuple<S>& tuple,
                                                 const Binding<S>& binding = {}) {
    const std::size_t n = detail::check_inputs(w, tuple, binding);
    auto data = exponent_data(w, n);
    S delta = tuple.empty() ? binding.begin()->second(0, 0).one() : tuple.front()(0, 0).one();
    for (const auto& [var, pv] : data.per_variable)
        if (pv.b > 0)
            delta = delta * power(det(tuple[static_cast<std::size_t>(var - 1)]), pv.b);
    auto ext = eval_adjugate_extension(w, tuple, binding);
    auto grp = eval_group(w, tuple, binding);
    bool holds = ext == grp * delta;
    return {delta, std::move(ext), std::move(grp), holds};
}

/// Scaling argument `var` (1-based) by c multiplies the extension by c^(d_var).
template <Scalar S>
bool homogeneity_check(const WordWithConstants& w, const Tuple<S>& tuple, int var, const S& c,
                       const Binding<S>& binding = {}) {
    const std::size_t n = detail::check_inputs(w, tuple, binding);
    if (var < 1 || static_cast<std::size_t>(var) > tuple.size())
        throw DimensionMismatch("variable index " + std::to_string(var) + " outside the tuple");
    long d = exponent_data(w, n).degree(var);
    Tuple<S> scaled = tuple;
    scaled[static_cast<std::size_t>(var - 1)] = tuple[static_cast<std::size_t>(var - 1)] * c;
    return eval_adjugate_extension(w, scaled, binding) == eval_adjugate_extension(w, tuple, binding) * power(c, d);
}

enum class Verdict { ConstantSoFar, TakesManyValues };

inline const char* to_string(Verdict v) {
    return v == Verdict::ConstantSoFar ? "ConstantSoFar" : "TakesManyValues";
}

template <Scalar S>
struct ValueProbe {
    std::vector<S> distinct; // first `cap` distinct values in sampling order
    std::size_t samples = 0;
    bool capped = false;
    Verdict verdict = Verdict::ConstantSoFar;

    void record(const S& v, std::size_t cap) {
        ++samples;
        for (const auto& x : distinct)
            if (x == v)
                return;
        if (distinct.size() < cap)
            distinct.push_back(v);
        else
            capped = true;
        if (distinct.size() > 1 || capped)
            verdict = Verdict::TakesManyValues;
    }
};

/// Samples N tuples in SL_n^m and records the values of chi_i of the word map.
/// Arity m is the largest variable index (at least 1).
template <Field R, class Rng>
ValueProbe<scalar_t<R>> chi_probe(const R& ring, const WordWithConstants& w, std::size_t n, std::size_t index,
                                  std::size_t samples, Rng& rng,
                                  const Binding<scalar_t<R>>& binding = {}, std::size_t cap = 256) {
    if (index < 1 || index > n)
        throw InvalidParams("coefficient index must lie in 1.." + std::to_string(n));
    const std::size_t m = static_cast<std::size_t>(std::max(1, w.max_var()));
    ValueProbe<scalar_t<R>> out;
    for (std::size_t s = 0; s < samples; ++s) {
        Tuple<scalar_t<R>> t;
        for (std::size_t i = 0; i < m; ++i)
            t.push_back(random_sln(ring, n, rng));
        auto v = eval_group(w, t, binding);
        out.record(charpoly(v).chi[index - 1], cap);
    }
    return out;
}

} // namespace wordmap
