#pragma once

/**
 * @file catalogue.hpp
 * @brief Explicit families of points on the fibers of the five example words,
 * and dimension certificates sandwiching each family's dimension between the
 * rank of its parametrization and the corank of the fiber equations.
 *
 *   component  word                     fiber  dim  family (then conjugated by g)
 *   ex1.W      [x,y]                    W      4    (diag(l), diag(m))
 *   ex1.T      [x,y]                    T      5    ([[l,u],[0,1/l]], [[m,v],[0,1/m]])
 *   ex2.Wj     [x^m, y]                 W      5    (diag(zeta_j), h), zeta_j^m = +-1
 *   ex3.W1     [x,y]^2                  W      3    (diag(i,-i), [[0,m],[-1/m,0]])
 *   ex4.Tj     [x,y]^p                  W      5    (diag(l), [[al,be],[P/be,Q/al]]), a = zeta^j + zeta^-j
 *   ex5.W1     [[x,y], x[x,y]x^-1]      W      4    (diag(l), [[0,al],[-1/al,0]])
 *   ex5.T1     [[x,y], x[x,y]x^-1]      T      5    (diag(l), [[0,al],[-1/al,0]] [[m,u],[0,1/m]])
 *   ex5.T2     [[x,y], x[x,y]x^-1]      W      5    (w0, h)
 *   Sa         [x,y]                    T      5    same as ex4.Tj with a given trace a
 *
 * Every family parameter is either a scalar or a group element; group
 * parameters move along (I + eps X) g for X in {E, F, H}.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordmap/error.hpp"
#include "wordmap/eval.hpp"
#include "wordmap/jets.hpp"
#include "wordmap/literal.hpp"
#include "wordmap/matrix.hpp"
#include "wordmap/rings.hpp"
#include "wordmap/sl2.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

enum class ComponentId { Ex1W, Ex1T, Ex2Wj, Ex3W1, Ex4Tj, Ex5W1, Ex5T1, Ex5T2, Sa };

struct ComponentInfo {
    ComponentId id;
    const char* name;
    int claimed;
    Fiber fiber;
};

inline const std::array<ComponentInfo, 9>& component_catalogue() {
    static const std::array<ComponentInfo, 9> table{{
        {ComponentId::Ex1W, "ex1.W", 4, Fiber::W},
        {ComponentId::Ex1T, "ex1.T", 5, Fiber::T},
        {ComponentId::Ex2Wj, "ex2.Wj", 5, Fiber::W},
        {ComponentId::Ex3W1, "ex3.W1", 3, Fiber::W},
        {ComponentId::Ex4Tj, "ex4.Tj", 5, Fiber::W},
        {ComponentId::Ex5W1, "ex5.W1", 4, Fiber::W},
        {ComponentId::Ex5T1, "ex5.T1", 5, Fiber::T},
        {ComponentId::Ex5T2, "ex5.T2", 5, Fiber::W},
        {ComponentId::Sa, "Sa", 5, Fiber::T},
    }};
    return table;
}

inline const ComponentInfo& component_info(ComponentId id) {
    for (const auto& c : component_catalogue())
        if (c.id == id)
            return c;
    throw InvalidParams("unknown component");
}

/// Case-insensitive lookup by name ("ex5.W1", "sa", ...).
inline ComponentId parse_component(std::string_view s) {
    auto lower = [](std::string_view v) {
        std::string r(v);
        std::transform(r.begin(), r.end(), r.begin(), [](unsigned char c) { return std::tolower(c); });
        return r;
    };
    for (const auto& c : component_catalogue())
        if (lower(c.name) == lower(s))
            return c.id;
    throw InvalidParams("unknown component '" + std::string(s) + "'");
}

struct CatalogueOptions {
    long m = 2;              // ex2: exponent in [x^m, y]
    long j = 4;              // ex2: order of zeta_j, j | 2m, j > 2
    long p = 5;              // ex4: odd prime exponent in [x,y]^p
    long jp = 1;             // ex4: zeta_p^jp + zeta_p^-jp, 1 <= jp <= (p-1)/2
    std::string a = "3";     // Sa: target trace
};

inline WordWithConstants component_word(ComponentId id, const CatalogueOptions& o = {}) {
    switch (id) {
    case ComponentId::Ex1W:
    case ComponentId::Ex1T:
    case ComponentId::Sa:
        return example_word(ExampleWord::Ex1);
    case ComponentId::Ex2Wj:
        return example_word(ExampleWord::Ex2, o.m);
    case ComponentId::Ex3W1:
        return example_word(ExampleWord::Ex3);
    case ComponentId::Ex4Tj:
        return example_word(ExampleWord::Ex4, 2, o.p);
    default:
        return example_word(ExampleWord::Ex5);
    }
}

/// Element of exact multiplicative order k, or none when this ring offers no exact one.
template <Field R>
std::optional<scalar_t<R>> root_of_unity(const R& ring, long k) {
    if (k < 1)
        return std::nullopt;
    if constexpr (std::is_same_v<R, PrimeField>) {
        return primitive_root_of_unity(ring, static_cast<std::uint64_t>(k));
    } else {
        if (k == 1)
            return ring.one();
        if (k == 2)
            return -ring.one();
        if (k == 4)
            return sqrt_minus_one(ring);
        return std::nullopt;
    }
}

template <Scalar S>
struct ComponentSpec {
    ComponentId id;
    WordWithConstants word;
    std::vector<S> constants; // fixed: zeta (ex2), i (ex3), a (ex4, Sa)
    std::vector<S> scalars;   // free scalar parameters
    Tuple<S> groups;          // free group parameters; the conjugator is last
    S target;                 // trace level of a T-fiber
};

/// The family map. T is the base scalar or its dual numbers.
template <Scalar T>
Sl2Pair<T> parametrize(ComponentId id, const std::vector<T>& c, const std::vector<T>& s, const Tuple<T>& g) {
    const T one = g.front()(0, 0).one();
    const T zero = one.zero();
    auto conj = [&](const Matrix<T>& a, const Matrix<T>& b) {
        const Matrix<T>& k = g.back();
        const Matrix<T> ki = inverse(k);
        return Sl2Pair<T>{k * a * ki, k * b * ki};
    };
    auto antidiag = [&](const T& a) { return Matrix<T>::of2(zero, a, -a.inverse(), zero); };
    auto preimage = [&](const T& a) {
        auto [p, q] = preimage_coefficients(a, s[0]);
        return conj(diag2(s[0]), Matrix<T>::of2(s[1], s[2], p * s[2].inverse(), q * s[1].inverse()));
    };
    switch (id) {
    case ComponentId::Ex1W:
        return conj(diag2(s[0]), diag2(s[1]));
    case ComponentId::Ex1T:
        return conj(Matrix<T>::of2(s[0], s[1], zero, s[0].inverse()), Matrix<T>::of2(s[2], s[3], zero, s[2].inverse()));
    case ComponentId::Ex2Wj:
        return conj(diag2(c[0]), g[0]);
    case ComponentId::Ex3W1:
        return conj(Matrix<T>::of2(c[0], zero, zero, -c[0]), antidiag(s[0]));
    case ComponentId::Ex4Tj:
    case ComponentId::Sa:
        return preimage(c[0]);
    case ComponentId::Ex5W1:
        return conj(diag2(s[0]), antidiag(s[1]));
    case ComponentId::Ex5T1:
        return conj(diag2(s[0]), antidiag(s[1]) * Matrix<T>::of2(s[2], s[3], zero, s[2].inverse()));
    case ComponentId::Ex5T2:
        return conj(weyl_element(one), g[0]);
    }
    throw InvalidParams("unknown component");
}

template <Scalar S>
Sl2Pair<S> component_point(const ComponentSpec<S>& spec) {
    return parametrize(spec.id, spec.constants, spec.scalars, spec.groups);
}

namespace detail {

template <Scalar S>
void validate(const ComponentSpec<S>& spec) {
    const S one = spec.target.one();
    auto need = [](bool ok, const char* what) {
        if (!ok)
            throw InvalidParams(what);
    };
    auto regular = [&](const S& l) { return !l.is_zero() && !(power(l, 4) == one); };
    const auto& s = spec.scalars;
    std::size_t scalars = 0, groups = 1;
    switch (spec.id) {
    case ComponentId::Ex1W:
        scalars = 2;
        need(s.size() == 2 && regular(s[0]) && regular(s[1]), "ex1.W needs lambda, mu with lambda^4, mu^4 != 1");
        break;
    case ComponentId::Ex1T:
        scalars = 4;
        need(s.size() == 4 && regular(s[0]) && regular(s[2]), "ex1.T needs lambda^4, mu^4 != 1");
        break;
    case ComponentId::Ex2Wj:
        groups = 2;
        break;
    case ComponentId::Ex3W1:
        scalars = 1;
        need(s.size() == 1 && !s[0].is_zero(), "ex3.W1 needs mu != 0");
        break;
    case ComponentId::Ex4Tj:
    case ComponentId::Sa: {
        scalars = 3;
        need(s.size() == 3 && regular(s[0]) && !s[1].is_zero() && !s[2].is_zero(),
             "needs lambda^4 != 1 and alpha, beta != 0");
        need(!preimage_coefficients(spec.constants.at(0), s[0]).q.is_zero(), "needs q(a, lambda) != 0");
        break;
    }
    case ComponentId::Ex5W1:
        scalars = 2;
        need(s.size() == 2 && regular(s[0]) && !s[1].is_zero(), "ex5.W1 needs lambda^4 != 1, alpha != 0");
        break;
    case ComponentId::Ex5T1:
        scalars = 4;
        need(s.size() == 4 && regular(s[0]) && !s[1].is_zero() && !s[2].is_zero(),
             "ex5.T1 needs lambda^4 != 1, alpha, mu != 0");
        break;
    case ComponentId::Ex5T2:
        groups = 2;
        break;
    }
    need(s.size() == scalars, "wrong number of scalar parameters");
    need(spec.groups.size() == groups, "wrong number of group parameters");
    for (const auto& g : spec.groups)
        need(g.dim() == 2 && is_special(g), "group parameters must lie in SL_2");
}

} // namespace detail

/// Fixed data and random free parameters for a component.
template <Field R, class Rng>
ComponentSpec<scalar_t<R>> sample_component(const R& ring, ComponentId id, const CatalogueOptions& o, Rng& rng) {
    using S = scalar_t<R>;
    ComponentSpec<S> spec{id, component_word(id, o), {}, {}, {}, ring.from_int(2)};

    switch (id) {
    case ComponentId::Ex2Wj: {
        if (o.m < 1 || o.j <= 2 || (2 * o.m) % o.j != 0)
            throw InvalidParams("ex2.Wj needs j > 2 dividing 2m");
        auto z = root_of_unity(ring, o.j);
        if (!z)
            throw RingLacksRoots(ring.name() + " has no primitive root of unity of order " + std::to_string(o.j));
        spec.constants = {*z};
        break;
    }
    case ComponentId::Ex3W1: {
        auto i = sqrt_minus_one(ring);
        if (!i)
            throw RingLacksRoots(ring.name() + " lacks i");
        spec.constants = {*i};
        break;
    }
    case ComponentId::Ex4Tj: {
        if (o.p < 3 || !is_prime(static_cast<std::uint64_t>(o.p)) || o.jp < 1 || o.jp > (o.p - 1) / 2)
            throw InvalidParams("ex4.Tj needs an odd prime p and 1 <= j <= (p-1)/2");
        auto z = root_of_unity(ring, o.p);
        if (!z)
            throw RingLacksRoots(ring.name() + " has no primitive root of unity of order " + std::to_string(o.p));
        S zj = power(*z, o.jp);
        spec.constants = {zj + zj.inverse()};
        spec.target = spec.constants[0];
        break;
    }
    case ComponentId::Sa:
        spec.constants = {parse_scalar(ring, o.a)};
        spec.target = spec.constants[0];
        break;
    default:
        break;
    }

    const std::size_t scalars = id == ComponentId::Ex1W || id == ComponentId::Ex5W1   ? 2
                                : id == ComponentId::Ex1T || id == ComponentId::Ex5T1 ? 4
                                : id == ComponentId::Ex3W1                            ? 1
                                : id == ComponentId::Ex4Tj || id == ComponentId::Sa   ? 3
                                                                                      : 0;
    const std::size_t groups = id == ComponentId::Ex2Wj || id == ComponentId::Ex5T2 ? 2 : 1;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        spec.scalars.clear();
        spec.groups.clear();
        for (std::size_t k = 0; k < scalars; ++k)
            spec.scalars.push_back(ring.random(rng));
        for (std::size_t k = 0; k < groups; ++k)
            spec.groups.push_back(random_sl2(ring, rng));
        try {
            detail::validate(spec);
            return spec;
        } catch (const InvalidParams&) {
        } catch (const DegenerateLambda&) {
        }
    }
    throw InvalidParams("could not sample valid parameters for " + std::string(component_info(id).name) + " over " +
                        ring.name());
}

/// Rank of the differential of the family map at the sampled parameters,
/// read in left-translated sl_2 x sl_2 coordinates.
template <Scalar S>
std::size_t parametrization_rank(const ComponentSpec<S>& spec) {
    detail::validate(spec);
    using D = Dual<S>;
    const Sl2Pair<S> base = component_point(spec);
    std::vector<D> c, s;
    for (const auto& x : spec.constants)
        c.emplace_back(x);
    for (const auto& x : spec.scalars)
        s.emplace_back(x);
    const Tuple<D> g = lift_dual(spec.groups);
    const std::array<Matrix<S>, 2> inv{inverse(base.g1), inverse(base.g2)};

    std::vector<std::vector<S>> rows(6);
    auto column = [&](const Sl2Pair<D>& p) {
        const std::array<Matrix<D>, 2> out{p.g1, p.g2};
        for (std::size_t k = 0; k < 2; ++k) {
            auto z = sl2_coordinates(Matrix<S>(eps_part(out[k]) * inv[k]));
            for (std::size_t r = 0; r < 3; ++r)
                rows[3 * k + r].push_back(z[r]);
        }
    };
    for (std::size_t k = 0; k < s.size(); ++k) {
        auto sk = s;
        sk[k] = D(spec.scalars[k], spec.scalars[k].one());
        column(parametrize(spec.id, c, sk, g));
    }
    const auto basis = sl2_basis(spec.target);
    for (std::size_t k = 0; k < g.size(); ++k)
        for (const auto& x : basis) {
            auto gk = g;
            gk[k] = infinitesimal(x) * gk[k];
            column(parametrize(spec.id, c, s, gk));
        }
    return rank(rows);
}

template <Scalar S>
struct DimensionCertificate {
    std::string component;
    Sl2Pair<S> point;
    Fiber fiber;
    bool on_fiber;   // the point satisfies the fiber equations
    int lower;       // rank of the family's differential
    int upper;       // 6 - rank of the fiber-equation Jacobian
    int claimed;
    bool confirmed;  // on_fiber and lower = upper = claimed
    int attempts = 1;
};

template <Scalar S>
DimensionCertificate<S> dimension_certificate(const ComponentSpec<S>& spec) {
    const auto& info = component_info(spec.id);
    const auto point = component_point(spec);
    const auto value = eval_group(spec.word, point.tuple());
    const bool on_fiber = info.fiber == Fiber::W ? value.is_identity() : value.trace() == spec.target;
    const int lower = static_cast<int>(parametrization_rank(spec));
    const int upper = 6 - static_cast<int>(jet_jacobian(spec.word, point.tuple(), info.fiber).rank);
    return {info.name, point,      info.fiber, on_fiber, lower, upper, info.claimed,
            on_fiber && lower == upper && lower == info.claimed};
}

/// Samples points until the two bounds meet (or `attempts` run out) and
/// returns the certificate at the last point tried.
template <Field R, class Rng>
DimensionCertificate<scalar_t<R>> certify_component(const R& ring, ComponentId id, const CatalogueOptions& o,
                                                    Rng& rng, int attempts = 8) {
    std::optional<DimensionCertificate<scalar_t<R>>> cert;
    for (int k = 1; k <= attempts; ++k) {
        cert = dimension_certificate(sample_component(ring, id, o, rng));
        cert->attempts = k;
        if (cert->on_fiber && cert->lower == cert->upper)
            break;
    }
    return *cert;
}

} // namespace wordmap
