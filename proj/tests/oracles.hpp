#pragma once

// Reference implementations used only by the tests. Each one is written the
// slow, obvious way so it shares no code path with the library.

#include <algorithm>
#include <map>
#include <string>
#include <numeric>
#include <vector>

#include "wordmap/matrix.hpp"
#include "wordmap/word.hpp"

namespace oracle {

using wordmap::Matrix;

/// Leibniz formula: sum over permutations of sign * product.
template <class S>
S leibniz_det(const Matrix<S>& m) {
    const std::size_t n = m.dim();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    S total = m(0, 0).zero();
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        S term = m(0, 0).one();
        for (std::size_t i = 0; i < n; ++i)
            term = term * m(i, perm[i]);
        total = inversions % 2 == 0 ? total + term : total - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

template <class S>
Matrix<S> submatrix(const Matrix<S>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    Matrix<S> r(rows.size(), m(0, 0).zero());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            r(i, j) = m(rows[i], cols[j]);
    return r;
}

/// Transposed cofactor matrix, each minor by Leibniz.
template <class S>
Matrix<S> cofactor_adjugate(const Matrix<S>& m) {
    const std::size_t n = m.dim();
    Matrix<S> r(n, m(0, 0).zero());
    if (n == 1)
        return Matrix<S>::identity(1, m(0, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j)
                    rows.push_back(k);
                if (k != i)
                    cols.push_back(k);
            }
            S minor = leibniz_det(submatrix(m, rows, cols));
            r(i, j) = (i + j) % 2 == 0 ? minor : -minor;
        }
    return r;
}

/// chi_k as the sum of the k x k principal minors (elementary symmetric function of eigenvalues).
template <class S>
std::vector<S> principal_minor_sums(const Matrix<S>& m) {
    const std::size_t n = m.dim();
    std::vector<S> out(n, m(0, 0).zero());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (1u << k))
                idx.push_back(k);
        out[idx.size() - 1] = out[idx.size() - 1] + leibniz_det(submatrix(m, idx, idx));
    }
    return out;
}

/// Letters as signed generator indices: +v for x_v, -v for x_v^-1.
inline std::vector<int> expand(const wordmap::Word& w) {
    std::vector<int> out;
    for (const auto& l : w.letters())
        for (long k = 0; k < std::labs(l.exp); ++k)
            out.push_back(l.exp > 0 ? l.var : -l.var);
    return out;
}

inline std::vector<int> free_reduce(const std::vector<int>& letters) {
    std::vector<int> st;
    for (int l : letters) {
        if (!st.empty() && st.back() == -l)
            st.pop_back();
        else
            st.push_back(l);
    }
    return st;
}

/// Letter-by-letter product with inverses from the Leibniz adjugate.
template <class S>
Matrix<S> naive_eval(const std::vector<int>& letters, const std::vector<Matrix<S>>& tuple) {
    Matrix<S> acc = Matrix<S>::identity(tuple.front().dim(), tuple.front()(0, 0));
    for (int l : letters) {
        const auto& g = tuple[static_cast<std::size_t>(std::abs(l) - 1)];
        if (l > 0)
            acc = acc * g;
        else
            acc = acc * (cofactor_adjugate(g) * leibniz_det(g).inverse());
    }
    return acc;
}

/// Gaussian elimination rank, written independently of the library.
template <class S>
std::size_t naive_rank(std::vector<std::vector<S>> a) {
    std::size_t r = 0;
    if (a.empty())
        return 0;
    const std::size_t cols = a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c].is_zero())
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c].is_zero())
                continue;
            auto f = a[i][c] * a[r][c].inverse();
            for (std::size_t k = 0; k < cols; ++k)
                a[i][k] = a[i][k] - f * a[r][k];
        }
        ++r;
    }
    return r;
}

/// Coefficients c_0..c_n of det(t I - M) = sum c_k t^k, by evaluating at
/// t = 0..n with the Leibniz formula and Lagrange interpolation.
template <class S>
std::vector<S> charpoly_by_interpolation(const Matrix<S>& m) {
    const std::size_t n = m.dim();
    const S zero = m(0, 0).zero();
    std::vector<S> coeffs(n + 1, zero);
    for (std::size_t i = 0; i <= n; ++i) {
        const S ti = zero.from_int(static_cast<long>(i));
        Matrix<S> shifted = Matrix<S>::identity(n, zero) * ti - m;
        S yi = leibniz_det(shifted);
        // basis polynomial prod_{j != i} (t - j) / (i - j)
        std::vector<S> basis{zero.one()};
        S denom = zero.one();
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == i)
                continue;
            const S tj = zero.from_int(static_cast<long>(j));
            std::vector<S> next(basis.size() + 1, zero);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] = next[k + 1] + basis[k];
                next[k] = next[k] - basis[k] * tj;
            }
            basis = next;
            denom = denom * (ti - tj);
        }
        const S scale = yi * denom.inverse();
        for (std::size_t k = 0; k <= n; ++k)
            coeffs[k] = coeffs[k] + basis[k] * scale;
    }
    return coeffs;
}

/// Brace-free tuple and binding construction for template call sites.
template <class S, class... M>
std::vector<Matrix<S>> tup(const Matrix<S>& first, const M&... rest) {
    return {first, rest...};
}

template <class S>
std::map<std::string, Matrix<S>> bind(const std::string& name, const Matrix<S>& m) {
    return {{name, m}};
}

} // namespace oracle
