#pragma once

/**
 * @file rootsys.hpp
 * @brief Irreducible root systems in Bourbaki coordinates and the search for
 * rank-many pairwise orthogonal roots spanning a closed A_1 x ... x A_1.
 *
 * Coordinates are stored doubled so that the half-integer roots of E_n and
 * F_4 become integer vectors; inner products are therefore 4x the usual ones,
 * which does not affect orthogonality or Cartan integers.
 */

#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordmap/error.hpp"

namespace wordmap {

using RootVector = std::vector<int>;

struct RootSystem {
    char type = 'A';
    int rank = 1;
    int ambient_dim = 2;
    std::vector<RootVector> roots; // doubled coordinates, construction order

    std::string label() const { return std::string(1, type) + std::to_string(rank); }

    bool contains(const RootVector& v) const { return lookup_.count(v) > 0; }

    /// Roots whose first nonzero coordinate is positive, in construction order.
    std::vector<RootVector> positive_roots() const {
        std::vector<RootVector> out;
        for (const auto& r : roots)
            for (int c : r)
                if (c != 0) {
                    if (c > 0)
                        out.push_back(r);
                    break;
                }
        return out;
    }

    void add(RootVector v) {
        if (lookup_.insert(v).second)
            roots.push_back(std::move(v));
    }

private:
    std::set<RootVector> lookup_;
};

inline long inner(const RootVector& a, const RootVector& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<long>(a[i]) * b[i];
    return s;
}

inline RootVector add_roots(const RootVector& a, const RootVector& b, int sign = 1) {
    RootVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + sign * b[i];
    return r;
}

namespace detail {

/// Doubled c_i e_i + c_j e_j.
inline RootVector pair_root(int dim, int i, int ci, int j, int cj) {
    RootVector v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] += 2 * ci;
    v[static_cast<std::size_t>(j)] += 2 * cj;
    return v;
}

/// e_i - e_j and e_i + e_j for i < j (with negatives), optionally the short or long roots c e_i.
inline void add_classical(RootSystem& rs, int n, bool plus, int single) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            rs.add(pair_root(rs.ambient_dim, i, 1, j, -1));
            if (plus)
                rs.add(pair_root(rs.ambient_dim, i, 1, j, 1));
        }
    if (single)
        for (int i = 0; i < n; ++i) {
            RootVector v(static_cast<std::size_t>(rs.ambient_dim), 0);
            v[static_cast<std::size_t>(i)] = 2 * single;
            rs.add(v);
        }
    for (std::size_t k = 0, n0 = rs.roots.size(); k < n0; ++k) {
        RootVector v = rs.roots[k];
        for (int& c : v)
            c = -c;
        rs.add(v);
    }
}

inline void add_half_spin(RootSystem& rs, int dim, bool even_only) {
    for (unsigned mask = 0; mask < (1u << dim); ++mask) {
        if (even_only && __builtin_popcount(mask) % 2 != 0)
            continue;
        RootVector v(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i)
            v[static_cast<std::size_t>(i)] = (mask >> (dim - 1 - i)) & 1u ? -1 : 1;
        rs.add(v);
    }
}

inline RootSystem e8() {
    RootSystem rs;
    rs.type = 'E';
    rs.rank = 8;
    rs.ambient_dim = 8;
    add_classical(rs, 8, true, 0);
    add_half_spin(rs, 8, true);
    return rs;
}

} // namespace detail

/// Standard realization; A_r lives in r+1 coordinates, G_2 in 3, E_6/E_7 inside E_8.
inline RootSystem build_root_system(char type, int rank) {
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;
    auto bad = [&] {
        return InvalidType("no irreducible root system " + std::string(1, type) + std::to_string(rank));
    };
    switch (type) {
    case 'A':
        if (rank < 1)
            throw bad();
        rs.ambient_dim = rank + 1;
        detail::add_classical(rs, rank + 1, false, 0);
        return rs;
    case 'B':
    case 'C':
    case 'D':
        if (rank < (type == 'D' ? 4 : 2))
            throw bad();
        rs.ambient_dim = rank;
        detail::add_classical(rs, rank, true, type == 'B' ? 1 : type == 'C' ? 2 : 0);
        return rs;
    case 'E': {
        if (rank < 6 || rank > 8)
            throw bad();
        RootSystem full = detail::e8();
        if (rank == 8)
            return full;
        // E_7: orthogonal to e7 + e8; E_6: also orthogonal to e6 - e7
        RootVector a(8, 0), b(8, 0);
        a[6] = a[7] = 2;
        b[5] = 2;
        b[6] = -2;
        rs.ambient_dim = 8;
        for (const auto& r : full.roots)
            if (inner(r, a) == 0 && (rank == 7 || inner(r, b) == 0))
                rs.add(r);
        return rs;
    }
    case 'F':
        if (rank != 4)
            throw bad();
        rs.ambient_dim = 4;
        detail::add_classical(rs, 4, true, 1);
        detail::add_half_spin(rs, 4, false);
        return rs;
    case 'G': {
        if (rank != 2)
            throw bad();
        rs.ambient_dim = 3;
        std::vector<RootVector> base;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                base.push_back(detail::pair_root(3, i, 1, j, -1));
        // 2e_k - e_i - e_j, written with the positive leading coordinate first
        for (int k = 2; k >= 0; --k) {
            RootVector v(3, 2);
            v[static_cast<std::size_t>(k)] = -4;
            if (v[0] < 0)
                for (int& c : v)
                    c = -c;
            base.push_back(v);
        }
        for (const auto& v : base)
            rs.add(v);
        for (auto v : base) {
            for (int& c : v)
                c = -c;
            rs.add(v);
        }
        return rs;
    }
    default:
        throw bad();
    }
}

/// "B3", "e8", "G2" -> build_root_system.
inline RootSystem build_root_system(std::string_view label) {
    if (label.size() < 2)
        throw InvalidType("root system label must look like B3");
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    int r = 0;
    for (char c : label.substr(1)) {
        if (c < '0' || c > '9' || r > 100)
            throw InvalidType("bad rank in '" + std::string(label) + "'");
        r = 10 * r + (c - '0');
    }
    return build_root_system(t, r);
}

struct StarResult {
    bool holds = false;
    std::optional<std::vector<RootVector>> witness;
};

/// First (lexicographic in positive-root order) set of rank-many pairwise
/// orthogonal positive roots with no sum or difference of two of them a root.
inline StarResult star_search(const RootSystem& rs) {
    const auto pos = rs.positive_roots();
    const std::size_t target = static_cast<std::size_t>(rs.rank);
    std::vector<std::size_t> chosen;
    auto compatible = [&](const RootVector& a, const RootVector& b) {
        return inner(a, b) == 0 && !rs.contains(add_roots(a, b, 1)) && !rs.contains(add_roots(a, b, -1));
    };
    auto dfs = [&](auto&& self, const std::vector<std::size_t>& cand) -> bool {
        if (chosen.size() == target)
            return true;
        if (chosen.size() + cand.size() < target)
            return false;
        for (std::size_t k = 0; k < cand.size(); ++k) {
            std::size_t idx = cand[k];
            std::vector<std::size_t> next;
            for (std::size_t l = k + 1; l < cand.size(); ++l)
                if (compatible(pos[idx], pos[cand[l]]))
                    next.push_back(cand[l]);
            chosen.push_back(idx);
            if (self(self, next))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    std::vector<std::size_t> all(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i)
        all[i] = i;
    StarResult out;
    if (dfs(dfs, all)) {
        out.holds = true;
        std::vector<RootVector> w;
        for (auto i : chosen)
            w.push_back(pos[i]);
        out.witness = w;
    }
    return out;
}

/// Whether property (*) holds, per the known classification: fails exactly for
/// A_r (r >= 2), D_r (r odd) and E_6.
inline bool star_expected(char type, int rank) {
    switch (type) {
    case 'A':
        return rank == 1;
    case 'D':
        return rank % 2 == 0;
    case 'E':
        return rank != 6;
    default:
        return true;
    }
}

struct StarTableRow {
    char type;
    int rank;
    bool holds;
    bool expected;
    std::optional<std::vector<RootVector>> witness;

    std::string label() const { return std::string(1, type) + std::to_string(rank); }
    bool matches() const { return holds == expected; }
};

/// Every irreducible type of rank <= max_rank (at most 8).
inline std::vector<std::pair<char, int>> root_system_types(int max_rank) {
    if (max_rank < 1 || max_rank > 8)
        throw InvalidParams("max rank must lie in 1..8");
    std::vector<std::pair<char, int>> out;
    for (int r = 1; r <= max_rank; ++r)
        out.push_back({'A', r});
    for (int r = 2; r <= max_rank; ++r)
        out.push_back({'B', r});
    for (int r = 2; r <= max_rank; ++r)
        out.push_back({'C', r});
    for (int r = 4; r <= max_rank; ++r)
        out.push_back({'D', r});
    for (int r = 6; r <= max_rank; ++r)
        out.push_back({'E', r});
    if (max_rank >= 4)
        out.push_back({'F', 4});
    if (max_rank >= 2)
        out.push_back({'G', 2});
    return out;
}

inline std::vector<StarTableRow> verify_lemma_table(int max_rank) {
    std::vector<StarTableRow> rows;
    for (auto [t, r] : root_system_types(max_rank)) {
        auto res = star_search(build_root_system(t, r));
        rows.push_back({t, r, res.holds, star_expected(t, r), res.witness});
    }
    return rows;
}

/// "e1-e2", "2e3", "e1+e2-2e3", "1/2(e1-e2+...)".
inline std::string render_root(const RootVector& v) {
    bool half = false;
    for (int c : v)
        if (c % 2 != 0)
            half = true;
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        int c = half ? v[i] : v[i] / 2;
        if (c == 0)
            continue;
        if (c < 0)
            s += '-';
        else if (!s.empty())
            s += '+';
        int a = c < 0 ? -c : c;
        if (a != 1)
            s += std::to_string(a);
        s += "e" + std::to_string(i + 1);
    }
    return half ? "1/2(" + s + ")" : s;
}

} // namespace wordmap
