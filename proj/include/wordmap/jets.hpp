#pragma once

/**
 * @file jets.hpp
 * @brief First-order jets of word maps on SL_2 through dual numbers.
 *
 * Tangent directions at g in SL_2 are written (I + eps X) g with X in
 * sl_2 = span{E, F, H}; trace X = 0 keeps the determinant equal to 1 to
 * first order. Evaluating a word over D(K) at such a perturbed tuple gives
 * value + eps * derivative exactly, with no truncation error.
 */

#include <array>
#include <cstddef>
#include <vector>

#include "wordmap/error.hpp"
#include "wordmap/eval.hpp"
#include "wordmap/matrix.hpp"
#include "wordmap/rings.hpp"

namespace wordmap {

template <Scalar S>
Matrix<Dual<S>> lift_dual(const Matrix<S>& m) {
    return m.map([](const S& x) { return Dual<S>(x); });
}

template <Scalar S>
Tuple<Dual<S>> lift_dual(const Tuple<S>& t) {
    Tuple<Dual<S>> out;
    for (const auto& m : t)
        out.push_back(lift_dual(m));
    return out;
}

template <Scalar S>
Binding<Dual<S>> lift_dual(const Binding<S>& b) {
    Binding<Dual<S>> out;
    for (const auto& [k, m] : b)
        out.emplace(k, lift_dual(m));
    return out;
}

template <Scalar S>
Matrix<S> real_part(const Matrix<Dual<S>>& m) {
    return m.map([](const Dual<S>& x) { return x.real(); });
}

template <Scalar S>
Matrix<S> eps_part(const Matrix<Dual<S>>& m) {
    return m.map([](const Dual<S>& x) { return x.eps(); });
}

/// I + eps X.
template <Scalar S>
Matrix<Dual<S>> infinitesimal(const Matrix<S>& x) {
    Matrix<Dual<S>> r(x.dim(), Dual<S>(x(0, 0).zero()));
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < x.dim(); ++j)
            r(i, j) = Dual<S>(i == j ? x(0, 0).one() : x(0, 0).zero(), x(i, j));
    return r;
}

/// E = [[0,1],[0,0]], F = [[0,0],[1,0]], H = [[1,0],[0,-1]].
template <Scalar S>
std::array<Matrix<S>, 3> sl2_basis(const S& sample) {
    S z = sample.zero(), o = sample.one();
    return {Matrix<S>::of2(z, o, z, z), Matrix<S>::of2(z, z, o, z), Matrix<S>::of2(o, z, z, -o)};
}

/// Coordinates (Z12, Z21, Z11) of a trace-zero 2x2 matrix.
template <Scalar S>
std::array<S, 3> sl2_coordinates(const Matrix<S>& z) {
    return {z(0, 1), z(1, 0), z(0, 0)};
}

template <Scalar S>
struct Jet {
    Matrix<S> value;      // w at the base point
    Matrix<S> derivative; // eps-part of w at the perturbed point
};

/// Derivative of the word map at `point` along (I + eps X) on argument `arg` (0-based).
template <Scalar S>
Jet<S> directional_derivative(const WordWithConstants& w, const Tuple<S>& point, std::size_t arg,
                              const Matrix<S>& x, const Binding<S>& binding = {}) {
    if (arg >= point.size())
        throw DimensionMismatch("argument index outside the tuple");
    auto lifted = lift_dual(point);
    lifted[arg] = infinitesimal(x) * lifted[arg];
    auto v = eval_group(w, lifted, lift_dual(binding));
    return {real_part(v), eps_part(v)};
}

/// Rank of the differential of w at a point of SL_2^m, read in the left-translated
/// chart Z = dW * W^-1 in sl_2. Between 0 and 3.
template <Scalar S>
std::size_t dominance_probe(const WordWithConstants& w, const Tuple<S>& point, const Binding<S>& binding = {}) {
    if (point.empty() || point.front().dim() != 2)
        throw DimensionMismatch("dominance probe works on tuples in SL_2");
    std::vector<std::vector<S>> rows(3);
    const auto basis = sl2_basis(point.front()(0, 0));
    for (std::size_t arg = 0; arg < point.size(); ++arg)
        for (const auto& x : basis) {
            auto jet = directional_derivative(w, point, arg, x, binding);
            auto c = sl2_coordinates(Matrix<S>(jet.derivative * inverse(jet.value)));
            for (std::size_t k = 0; k < 3; ++k)
                rows[k].push_back(c[k]);
        }
    return rank(rows);
}

/// Which fiber's defining equations to differentiate.
///   W: w_11 = 1, w_12 = 0, w_21 = 0        (the representation variety w = 1)
///   T: tr w = const                         (a trace level set)
enum class Fiber { W, T };

inline const char* to_string(Fiber f) { return f == Fiber::W ? "W" : "T"; }

template <Scalar S>
struct JetJacobian {
    std::vector<std::vector<S>> rows; // one row per equation, columns (arg, E/F/H)
    std::size_t rank = 0;
};

template <Scalar S>
JetJacobian<S> jet_jacobian(const WordWithConstants& w, const Tuple<S>& point, Fiber fiber,
                            const Binding<S>& binding = {}) {
    if (point.empty() || point.front().dim() != 2)
        throw DimensionMismatch("jet Jacobian works on tuples in SL_2");
    JetJacobian<S> out;
    out.rows.resize(fiber == Fiber::W ? 3 : 1);
    const auto basis = sl2_basis(point.front()(0, 0));
    for (std::size_t arg = 0; arg < point.size(); ++arg)
        for (const auto& x : basis) {
            const auto d = directional_derivative(w, point, arg, x, binding).derivative;
            if (fiber == Fiber::W) {
                out.rows[0].push_back(d(0, 0));
                out.rows[1].push_back(d(0, 1));
                out.rows[2].push_back(d(1, 0));
            } else {
                out.rows[0].push_back(d.trace());
            }
        }
    out.rank = rank(out.rows);
    return out;
}

} // namespace wordmap
