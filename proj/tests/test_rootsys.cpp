#include <gtest/gtest.h>

#include <chrono>
#include <map>
#include <set>

#include "wordmap/rootsys.hpp"

using namespace wordmap;

namespace {

long dot(const RootVector& a, const RootVector& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<long>(a[i]) * b[i];
    return s;
}

/// Rank-many pairwise orthogonal roots, none of the pairwise sums or
/// differences a root, checked against a plain std::set of the roots.
bool verify_witness(const RootSystem& rs, const std::vector<RootVector>& w) {
    std::set<RootVector> roots(rs.roots.begin(), rs.roots.end());
    if (w.size() != static_cast<std::size_t>(rs.rank))
        return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!roots.count(w[i]))
            return false;
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (dot(w[i], w[j]) != 0)
                return false;
            RootVector s(w[i].size()), d(w[i].size());
            for (std::size_t k = 0; k < s.size(); ++k) {
                s[k] = w[i][k] + w[j][k];
                d[k] = w[i][k] - w[j][k];
            }
            if (roots.count(s) || roots.count(d))
                return false;
        }
    }
    return true;
}

std::size_t expected_count(char t, int r) {
    switch (t) {
    case 'A':
        return static_cast<std::size_t>(r * (r + 1));
    case 'B':
    case 'C':
        return static_cast<std::size_t>(2 * r * r);
    case 'D':
        return static_cast<std::size_t>(2 * r * (r - 1));
    case 'E':
        return r == 6 ? 72 : r == 7 ? 126 : 240;
    case 'F':
        return 48;
    default:
        return 12;
    }
}

} // namespace

TEST(RootSystems, CountsAndNegation) {
    for (auto [t, r] : root_system_types(8)) {
        auto rs = build_root_system(t, r);
        EXPECT_EQ(rs.roots.size(), expected_count(t, r)) << rs.label();
        EXPECT_EQ(rs.positive_roots().size() * 2, rs.roots.size()) << rs.label();
        for (const auto& a : rs.roots) {
            RootVector n = a;
            for (int& c : n)
                c = -c;
            ASSERT_TRUE(rs.contains(n)) << rs.label();
        }
    }
}

TEST(RootSystems, CartanIntegers) {
    for (auto [t, r] : root_system_types(8)) {
        auto rs = build_root_system(t, r);
        std::set<long> lengths;
        for (const auto& a : rs.roots) {
            lengths.insert(dot(a, a));
            for (const auto& b : rs.roots) {
                long num = 2 * dot(a, b);
                ASSERT_EQ(num % dot(b, b), 0) << rs.label();
                long c = num / dot(b, b);
                ASSERT_GE(c, -3);
                ASSERT_LE(c, 3);
                // reflection of a in b stays in the system
                RootVector s = a;
                for (std::size_t k = 0; k < s.size(); ++k)
                    s[k] -= static_cast<int>(c) * b[k];
                ASSERT_TRUE(rs.contains(s)) << rs.label();
            }
        }
        bool simply_laced = t == 'A' || t == 'D' || t == 'E';
        EXPECT_EQ(lengths.size(), simply_laced ? 1u : 2u) << rs.label();
    }
}

TEST(RootSystems, Labels) {
    EXPECT_EQ(build_root_system("b3").label(), "B3");
    EXPECT_THROW(build_root_system("D3"), InvalidType);
    EXPECT_THROW(build_root_system("E9"), InvalidType);
    EXPECT_THROW(build_root_system("G3"), InvalidType);
    EXPECT_THROW(build_root_system("X"), InvalidType);
    EXPECT_THROW(root_system_types(9), InvalidParams);
}

TEST(StarSearch, KnownWitnesses) {
    auto names = [](const StarResult& r) {
        std::vector<std::string> out;
        for (const auto& v : *r.witness)
            out.push_back(render_root(v));
        return out;
    };
    auto b3 = star_search(build_root_system('B', 3));
    ASSERT_TRUE(b3.holds);
    EXPECT_EQ(names(b3), (std::vector<std::string>{"e1-e2", "e1+e2", "e3"}));
    auto c3 = star_search(build_root_system('C', 3));
    EXPECT_EQ(names(c3), (std::vector<std::string>{"2e1", "2e2", "2e3"}));
    auto g2 = star_search(build_root_system('G', 2));
    EXPECT_EQ(names(g2), (std::vector<std::string>{"e1-e2", "e1+e2-2e3"}));
    EXPECT_FALSE(star_search(build_root_system('A', 2)).holds);
    EXPECT_FALSE(star_search(build_root_system('A', 2)).witness.has_value());
}

TEST(StarSearch, TableMatchesClassification) {
    std::map<std::string, bool> fails;
    for (const auto& row : verify_lemma_table(8)) {
        EXPECT_TRUE(row.matches()) << row.label();
        if (row.holds) {
            ASSERT_TRUE(row.witness.has_value());
            EXPECT_TRUE(verify_witness(build_root_system(row.type, row.rank), *row.witness)) << row.label();
        } else {
            fails[row.label()] = true;
        }
    }
    std::set<std::string> expect{"A2", "A3", "A4", "A5", "A6", "A7", "A8", "D5", "D7", "E6"};
    std::set<std::string> got;
    for (auto& [k, v] : fails)
        got.insert(k);
    EXPECT_EQ(got, expect);
}

TEST(StarSearch, Deterministic) {
    auto a = verify_lemma_table(8), b = verify_lemma_table(8);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        EXPECT_EQ(a[k].witness, b[k].witness);
}

TEST(StarSearch, E8IsFast) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = star_search(build_root_system('E', 8));
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_TRUE(r.holds);
    EXPECT_LT(secs, 60.0);
}

TEST(RenderRoot, Forms) {
    EXPECT_EQ(render_root({2, -2, 0}), "e1-e2");
    EXPECT_EQ(render_root({0, 4}), "2e2");
    EXPECT_EQ(render_root({1, -1, 1, 1}), "1/2(e1-e2+e3+e4)");
}
