#pragma once

/**
 * @file matrix.hpp
 * @brief Exact square matrices: determinant, adjugate, characteristic
 * polynomial and the SL_n predicates used by the probes.
 *
 * Determinants use cofactor expansion up to 3x3. Beyond that, Bareiss
 * elimination over Q, plain Gaussian elimination over the other fields and
 * the division-free Berkowitz recursion over rings with zero divisors.
 */

#include <cstddef>
#include <random>
#include <type_traits>
#include <utility>
#include <vector>

#include "wordmap/error.hpp"
#include "wordmap/rings.hpp"

namespace wordmap {

template <class S>
struct is_field_scalar : std::false_type {};
template <>
struct is_field_scalar<Rational> : std::true_type {};
template <>
struct is_field_scalar<ModP> : std::true_type {};
template <class B>
struct is_field_scalar<Quad<B>> : std::true_type {};

template <Scalar S>
class Matrix {
public:
    using scalar_type = S;

    Matrix(std::size_t n, const S& fill) : n_(n), a_(n * n, fill) {
        if (n == 0)
            throw DimensionMismatch("matrix dimension must be at least 1");
    }

    static Matrix identity(std::size_t n, const S& sample) {
        Matrix m(n, sample.zero());
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = sample.one();
        return m;
    }

    static Matrix diagonal(const std::vector<S>& d) {
        Matrix m(d.size(), d.front().zero());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
        const std::size_t n = rows.size();
        if (n == 0)
            throw DimensionMismatch("empty matrix");
        Matrix m(n, rows[0].empty() ? S{} : rows[0][0]);
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n)
                throw DimensionMismatch("matrix rows must have length " + std::to_string(n));
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    /// 2x2 shorthand, row-major.
    static Matrix of2(S a, S b, S c, S d) {
        return from_rows({{std::move(a), std::move(b)}, {std::move(c), std::move(d)}});
    }

    std::size_t dim() const { return n_; }
    S& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    const std::vector<S>& entries() const { return a_; }

    std::vector<std::vector<S>> rows() const {
        std::vector<std::vector<S>> r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            r[i].assign(a_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                        a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        check_same(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] + o.a_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] - o.a_[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.a_)
            x = -x;
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        check_same(o);
        Matrix r(n_, a_[0].zero());
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const S& x = (*this)(i, k);
                if (x.is_zero())
                    continue;
                for (std::size_t j = 0; j < n_; ++j)
                    r(i, j) = r(i, j) + x * o(k, j);
            }
        return r;
    }
    Matrix operator*(const S& c) const {
        Matrix r = *this;
        for (auto& x : r.a_)
            x = c * x;
        return r;
    }
    friend Matrix operator*(const S& c, const Matrix& m) { return m * c; }

    bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    Matrix pow(unsigned long long k) const {
        Matrix acc = identity(n_, a_[0]);
        Matrix base = *this;
        while (k > 0) {
            if (k & 1)
                acc = acc * base;
            k >>= 1;
            if (k)
                base = base * base;
        }
        return acc;
    }

    S trace() const {
        S t = a_[0].zero();
        for (std::size_t i = 0; i < n_; ++i)
            t = t + (*this)(i, i);
        return t;
    }

    bool is_identity() const { return *this == identity(n_, a_[0]); }

    /// Entrywise image under a ring map S -> T.
    template <class F>
    auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(std::declval<const S&>()))>> {
        using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
        Matrix<T> r(n_, f(a_[0]));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                r(i, j) = f((*this)(i, j));
        return r;
    }

private:
    void check_same(const Matrix& o) const {
        if (o.n_ != n_)
            throw DimensionMismatch("dimension " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    }

    std::size_t n_;
    std::vector<S> a_;
};

/// Coefficients chi_1..chi_n with chi_1 = trace and chi_n = det, i.e. the
/// elementary symmetric functions of the eigenvalues:
///   det(lambda I - M) = sum_i (-1)^i chi_i lambda^(n-i).
template <Scalar S>
struct CharPolyCoeffs {
    std::vector<S> chi;
};

namespace detail {

// Berkowitz: coefficients [1, c_1, ..., c_n] of det(lambda I - M), division free.
template <Scalar S>
std::vector<S> berkowitz(const Matrix<S>& m) {
    const std::size_t n = m.dim();
    const S zero = m(0, 0).zero();
    const S one = m(0, 0).one();
    // vector for the trailing 1x1 block, then grow toward the full matrix
    std::vector<S> vec{one, -m(n - 1, n - 1)};
    for (std::size_t top = n - 1; top-- > 0;) {
        // block is m[top.., top..]; a = m[top][top], R = row, C = column, A = trailing
        const std::size_t k = n - top - 1; // size of trailing block
        std::vector<S> col(k), diags;
        for (std::size_t i = 0; i < k; ++i)
            col[i] = m(top + 1 + i, top);
        diags.push_back(one);
        diags.push_back(-m(top, top));
        for (std::size_t step = 0; step < k; ++step) {
            S d = zero;
            for (std::size_t j = 0; j < k; ++j)
                d = d + m(top, top + 1 + j) * col[j];
            diags.push_back(-d);
            std::vector<S> next(k, zero);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    next[i] = next[i] + m(top + 1 + i, top + 1 + j) * col[j];
            col = std::move(next);
        }
        // Toeplitz (k+2) x (k+1) times vec
        std::vector<S> out(k + 2, zero);
        for (std::size_t i = 0; i < k + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, k); ++j)
                out[i] = out[i] + diags[i - j] * vec[j];
        vec = std::move(out);
    }
    return vec;
}

template <Scalar S>
S det_cofactor(const Matrix<S>& m) {
    switch (m.dim()) {
    case 1:
        return m(0, 0);
    case 2:
        return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    default:
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
}

// Fraction-free elimination: every intermediate entry is a minor of m.
inline Rational det_bareiss(const Matrix<Rational>& m) {
    const std::size_t n = m.dim();
    auto a = m.rows();
    Rational prev(1L);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k].is_zero())
                ++swap;
            if (swap == n)
                return Rational(0L);
            std::swap(a[k], a[swap]);
            negate = !negate;
        }
        Rational pinv = prev.inverse();
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) * pinv;
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

template <Scalar S>
S det_gauss(const Matrix<S>& m) {
    const std::size_t n = m.dim();
    auto a = m.rows();
    S d = m(0, 0).one();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k].is_zero())
            ++piv;
        if (piv == n)
            return d.zero();
        if (piv != k) {
            std::swap(a[k], a[piv]);
            d = -d;
        }
        d = d * a[k][k];
        S inv = a[k][k].inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero())
                continue;
            S f = a[i][k] * inv;
            for (std::size_t j = k; j < n; ++j)
                a[i][j] = a[i][j] - f * a[k][j];
        }
    }
    return d;
}

} // namespace detail

template <Scalar S>
S det(const Matrix<S>& m) {
    if (m.dim() <= 3)
        return detail::det_cofactor(m);
    if constexpr (std::is_same_v<S, Rational>)
        return detail::det_bareiss(m);
    else if constexpr (is_field_scalar<S>::value)
        return detail::det_gauss(m);
    else {
        auto c = detail::berkowitz(m);
        return m.dim() % 2 == 0 ? c.back() : -c.back();
    }
}

template <Scalar S>
CharPolyCoeffs<S> charpoly(const Matrix<S>& m) {
    auto c = detail::berkowitz(m);
    CharPolyCoeffs<S> out;
    for (std::size_t i = 1; i < c.size(); ++i)
        out.chi.push_back(i % 2 == 0 ? c[i] : -c[i]);
    return out;
}

/// M* with M M* = M* M = det(M) I; polynomial in the entries, so defined for singular M.
template <Scalar S>
Matrix<S> adjugate(const Matrix<S>& m) {
    const std::size_t n = m.dim();
    switch (n) {
    case 1:
        return Matrix<S>::identity(1, m(0, 0));
    case 2:
        return Matrix<S>::of2(m(1, 1), -m(0, 1), -m(1, 0), m(0, 0));
    case 3: {
        Matrix<S> r(3, m(0, 0).zero());
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                // cofactor C_ji goes to position (i, j)
                std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
                std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
                r(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
            }
        return r;
    }
    default: {
        // Cayley-Hamilton: adj(M) = (-1)^(n+1) (M^(n-1) + c_1 M^(n-2) + ... + c_(n-1) I)
        auto c = detail::berkowitz(m);
        Matrix<S> acc = Matrix<S>::identity(n, m(0, 0));
        for (std::size_t k = 1; k < n; ++k)
            acc = acc * m + Matrix<S>::identity(n, m(0, 0)) * c[k];
        return n % 2 == 0 ? -acc : acc;
    }
    }
}

/// True inverse; requires det(M) to be a unit.
template <Scalar S>
Matrix<S> inverse(const Matrix<S>& m) {
    S d = det(m);
    S di = d.inverse();
    return adjugate(m) * di;
}

template <Scalar S>
bool is_special(const Matrix<S>& m) {
    return det(m) == m(0, 0).one();
}

/// (M - I)^n = 0.
template <Scalar S>
bool is_unipotent(const Matrix<S>& m) {
    Matrix<S> nil = m - Matrix<S>::identity(m.dim(), m(0, 0));
    Matrix<S> p = nil.pow(m.dim());
    for (const auto& x : p.entries())
        if (!x.is_zero())
            return false;
    return true;
}

template <Scalar S>
bool is_central_sl2(const Matrix<S>& m) {
    if (m.dim() != 2)
        return false;
    auto id = Matrix<S>::identity(2, m(0, 0));
    return m == id || m == -id;
}

/// Rank of a rectangular matrix over a field, by Gaussian elimination.
template <Scalar S>
std::size_t rank(std::vector<std::vector<S>> rows) {
    if (rows.empty())
        return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero())
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[r], rows[piv]);
        S inv = rows[r][c].inverse();
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero())
                continue;
            S f = rows[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        ++r;
    }
    return r;
}

/// [[a, b], [c, d]] with a, b, c drawn from `ring` and d = (1 + bc) / a, redrawing while a = 0.
template <Field R, class Rng>
Matrix<scalar_t<R>> random_sl2(const R& ring, Rng& rng) {
    for (;;) {
        auto a = ring.random(rng);
        auto b = ring.random(rng);
        auto c = ring.random(rng);
        if (a.is_zero())
            continue;
        auto d = (ring.one() + b * c) * a.inverse();
        return Matrix<scalar_t<R>>::of2(a, b, c, d);
    }
}

/// Random element of SL_n as L * D * U (unit triangular L, U; diagonal D with det 1).
template <Field R, class Rng>
Matrix<scalar_t<R>> random_sln(const R& ring, std::size_t n, Rng& rng) {
    if (n == 2)
        return random_sl2(ring, rng);
    using S = scalar_t<R>;
    auto lower = Matrix<S>::identity(n, ring.one());
    auto upper = Matrix<S>::identity(n, ring.one());
    auto diag = Matrix<S>::identity(n, ring.one());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            lower(i, j) = ring.random(rng);
            upper(j, i) = ring.random(rng);
        }
    S prod = ring.one();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        S x = ring.random(rng);
        while (x.is_zero())
            x = ring.random(rng);
        diag(i, i) = x;
        prod = prod * x;
    }
    diag(n - 1, n - 1) = prod.inverse();
    return lower * diag * upper;
}

/// Uniformly random n x n matrix (possibly singular).
template <Ring R, class Rng>
Matrix<scalar_t<R>> random_matrix(const R& ring, std::size_t n, Rng& rng) {
    Matrix<scalar_t<R>> m(n, ring.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = ring.random(rng);
    return m;
}

} // namespace wordmap
