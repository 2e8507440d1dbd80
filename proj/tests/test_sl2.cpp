#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wordmap/catalogue.hpp"
#include "wordmap/jets.hpp"
#include "wordmap/parse.hpp"
#include "wordmap/sl2.hpp"

using namespace wordmap;

namespace {

Matrix<ModP> m2(const PrimeField& f, long a, long b, long c, long d) {
    return Matrix<ModP>::of2(f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d));
}

Matrix<ModP> naive(const Word& w, const Sl2Pair<ModP>& p) { return oracle::naive_eval(oracle::expand(w), p.tuple()); }

} // namespace

// ---------------------------------------------------------------------------
// jets

TEST(Jets, CommutatorDerivativeByHand) {
    PrimeField f(101);
    std::mt19937_64 rng(1);
    const auto w = parse_word("[x,y]");
    for (int k = 0; k < 50; ++k) {
        auto x = random_sl2(f, rng), y = random_sl2(f, rng);
        auto xi = oracle::cofactor_adjugate(x), yi = oracle::cofactor_adjugate(y);
        for (const auto& X : sl2_basis(f.one())) {
            // d/de of (1+eX) x y x^-1 (1-eX) y^-1
            auto jet = directional_derivative(w, oracle::tup(x, y), 0, X);
            ASSERT_EQ(jet.derivative, X * x * y * xi * yi - x * y * xi * X * yi);
            // d/de of x (1+eX) y y^-1 (1-eX) x^-1... along y: x (1+eX) y x^-1 y^-1 (1-eX)
            auto jy = directional_derivative(w, oracle::tup(x, y), 1, X);
            ASSERT_EQ(jy.derivative, x * X * y * xi * yi - x * y * xi * yi * X);
        }
    }
}

TEST(Jets, DerivativeIsLinearInDirection) {
    PrimeField f(101);
    std::mt19937_64 rng(2);
    const auto w = parse_word("[[x,y], x [x,y] x^-1]");
    for (int k = 0; k < 30; ++k) {
        Tuple<ModP> t{random_sl2(f, rng), random_sl2(f, rng)};
        auto a = f.random(rng), b = f.random(rng);
        auto [E, F, H] = sl2_basis(f.one());
        auto lhs = directional_derivative(w, t, 1, E * a + H * b).derivative;
        auto rhs = directional_derivative(w, t, 1, E).derivative * a + directional_derivative(w, t, 1, H).derivative * b;
        ASSERT_EQ(lhs, rhs);
    }
}

TEST(Jets, JacobianRanks) {
    PrimeField f(101);
    const auto w = parse_word("[x,y]");
    auto id = Matrix<ModP>::identity(2, f.one());
    EXPECT_EQ(jet_jacobian(w, oracle::tup(id, id), Fiber::W).rank, 0u);
    EXPECT_EQ(jet_jacobian(w, oracle::tup(id, id), Fiber::T).rank, 0u);
    auto jw = jet_jacobian(w, oracle::tup(diag2(f.from_int(2)), diag2(f.from_int(3))), Fiber::W);
    EXPECT_EQ(jw.rank, 2u);
    EXPECT_EQ(jw.rank, oracle::naive_rank(jw.rows));
    std::mt19937_64 rng(3);
    Tuple<ModP> t{random_sl2(f, rng), random_sl2(f, rng)};
    EXPECT_EQ(jet_jacobian(w, t, Fiber::T).rank, 1u);
    auto full = jet_jacobian(w, t, Fiber::W);
    EXPECT_EQ(full.rank, 3u);
    EXPECT_EQ(full.rows.size(), 3u);
    EXPECT_EQ(full.rows[0].size(), 6u);
}

TEST(Jets, DominanceProbe) {
    PrimeField f(101);
    std::mt19937_64 rng(4);
    Tuple<ModP> t{random_sl2(f, rng), random_sl2(f, rng)};
    EXPECT_EQ(dominance_probe(parse_word("[x,y]"), t), 3u);
    auto id = Matrix<ModP>::identity(2, f.one());
    EXPECT_EQ(dominance_probe(parse_word("[x,y]"), oracle::tup(id, id)), 0u);
    Binding<ModP> b{{"s", diag2(f.from_int(5))}};
    EXPECT_EQ(dominance_probe(parse_word("x s x^-1"), oracle::tup(t[0]), b), 2u);
}

// ---------------------------------------------------------------------------
// commutators and trace preimages

TEST(Commutator, ClosedFormAndTrace) {
    PrimeField f(101);
    RationalField q;
    std::mt19937_64 rng(5);
    const auto w = parse_word("[x,y]");
    for (int k = 0; k < 200; ++k) {
        auto lambda = f.random(rng);
        if (lambda.is_zero())
            continue;
        auto g = random_sl2(f, rng);
        auto c = commutator_closed_form(lambda, g);
        ASSERT_EQ(c, naive(w.as_word(), {diag2(lambda), g}));
        ASSERT_EQ(c.trace(), commutator_trace_formula(lambda, g));
    }
    auto gq = random_sl2(q, rng);
    auto lq = Rational::fraction(3, 7);
    EXPECT_EQ(eval_group(w, oracle::tup(diag2(lq), gq)).trace(), commutator_trace_formula(lq, gq));
}

TEST(Preimage, EveryTraceOverF101) {
    PrimeField f(101);
    const auto lambda = f.from_int(2), beta = f.from_int(3);
    for (long a = 0; a < 101; ++a) {
        auto pr = trace_preimage_commutator(f.from_int(a), lambda, beta);
        ASSERT_TRUE(is_special(pr.g1));
        ASSERT_TRUE(is_special(pr.g2)) << a;
        ASSERT_EQ(naive(parse_word("[x,y]").as_word(), pr).trace(), f.from_int(a));
    }
}

TEST(Preimage, CoefficientIdentity) {
    PrimeField f(101);
    std::mt19937_64 rng(6);
    for (int k = 0; k < 100; ++k) {
        auto l = f.random(rng);
        if (l.is_zero() || power(l, 4) == f.one())
            continue;
        auto c = preimage_coefficients(f.random(rng), l);
        ASSERT_EQ(c.q - c.p, f.one());
    }
}

TEST(Preimage, QuaternionShape) {
    PrimeField f(13);
    auto i = *sqrt_minus_one(f);
    EXPECT_EQ(i, f.from_int(5));
    auto c = preimage_coefficients(f.from_int(-2), i);
    EXPECT_EQ(c.p, f.from_int(-1));
    EXPECT_TRUE(c.q.is_zero());
    auto pr = trace_preimage_commutator(f.from_int(-2), i, f.from_int(3));
    EXPECT_EQ(pr.g1, m2(f, 5, 0, 0, 8));
    EXPECT_TRUE(pr.g2(0, 0).is_zero());
    EXPECT_TRUE(pr.g2(1, 1).is_zero());
    EXPECT_TRUE(is_special(pr.g2));
    EXPECT_EQ(eval_group(parse_word("[x,y]"), pr.tuple()).trace(), f.from_int(-2));
}

TEST(Preimage, Errors) {
    PrimeField f(101);
    EXPECT_THROW(trace_preimage_commutator(f.from_int(3), f.one(), f.one()), DegenerateLambda);
    EXPECT_THROW(trace_preimage_commutator(f.from_int(3), -f.one(), f.one()), DegenerateLambda);
    EXPECT_THROW(trace_preimage_commutator(f.from_int(3), f.from_int(2), f.zero()), InvalidParams);
    EXPECT_THROW(preimage_coefficients(f.from_int(3), -f.one()), DegenerateLambda);
    EXPECT_NO_THROW(preimage_coefficients(f.from_int(3), *sqrt_minus_one(f)));
}

// ---------------------------------------------------------------------------
// fibers, separation, relations

TEST(Fiber, Membership) {
    PrimeField f(101);
    auto id = Matrix<ModP>::identity(2, f.one());
    const auto w = parse_word("[x,y]");
    auto at_id = fiber_membership(w, oracle::tup(id, id));
    EXPECT_TRUE(at_id.in_W);
    EXPECT_TRUE(at_id.in_T);
    auto u = fiber_membership(w, oracle::tup(diag2(f.from_int(2)), upper_unipotent(f.one())));
    EXPECT_FALSE(u.in_W);
    EXPECT_TRUE(u.in_T);
    auto g = fiber_membership(w, oracle::tup(diag2(f.from_int(2)), m2(f, 1, 1, 1, 2)));
    EXPECT_FALSE(g.in_W);
    EXPECT_FALSE(g.in_T);
}

TEST(Separation, WitnessesForAllFiveWords) {
    PrimeField f(101);
    for (auto e : {ExampleWord::Ex1, ExampleWord::Ex2, ExampleWord::Ex3, ExampleWord::Ex4, ExampleWord::Ex5}) {
        auto wit = separation_witness(f, e);
        ASSERT_TRUE(wit.has_value());
        auto v = naive(example_word(e).as_word(), *wit);
        EXPECT_EQ(v.trace(), f.from_int(2));
        EXPECT_FALSE(v.is_identity());
    }
    RationalField q;
    EXPECT_TRUE(separation_witness(q, ExampleWord::Ex5).has_value());
}

TEST(Separation, ExampleWordShapes) {
    EXPECT_EQ(render(example_word(ExampleWord::Ex2, 3)), "x^3 y x^-3 y^-1");
    EXPECT_EQ(example_word(ExampleWord::Ex4, 2, 7).as_word().length(), 28u);
    EXPECT_EQ(example_word(ExampleWord::Ex5).as_word().length(), 16u);
    EXPECT_THROW(parse_example_word("ex6"), InvalidParams);
}

TEST(RelationScan, QuaternionPair) {
    PrimeField f(13);
    auto pair = q8_witness(*sqrt_minus_one(f), f.from_int(2));
    auto scan = relation_scan(pair, 6);
    auto has = [&](const char* s) {
        auto w = parse_word(s).as_word();
        return std::find(scan.relations.begin(), scan.relations.end(), w) != scan.relations.end();
    };
    EXPECT_TRUE(has("x^4"));
    EXPECT_TRUE(has("x^2 y^-2"));
    EXPECT_TRUE(has("[x,y] x^-2"));
    EXPECT_FALSE(has("x^2"));
    EXPECT_EQ(scan.relations.front().length(), 4u);
    for (const auto& r : scan.relations)
        ASSERT_TRUE(naive(r, pair).is_identity()) << render(r);
    for (std::size_t k = 1; k < scan.relations.size(); ++k)
        ASSERT_LE(scan.relations[k - 1].length(), scan.relations[k].length());
    auto closure = group_closure<ModP>({pair.g1, pair.g2}, 100);
    ASSERT_TRUE(closure.has_value());
    EXPECT_EQ(closure->size(), 8u);
}

TEST(RelationScan, CountsReducedWords) {
    PrimeField f(101);
    Sl2Pair<ModP> pair{diag2(f.from_int(2)), m2(f, 1, 1, 1, 2)};
    // reduced words of length 1..L: 4 * 3^(k-1)
    auto scan = relation_scan(pair, 5);
    EXPECT_EQ(scan.words_checked, 4u + 12u + 36u + 108u + 324u);
    EXPECT_FALSE(scan.trivial_group);
    auto id = Matrix<ModP>::identity(2, f.one());
    EXPECT_TRUE(relation_scan(Sl2Pair<ModP>{id, id}, 3).trivial_group);
    EXPECT_THROW(relation_scan(pair, 13), InvalidParams);
}

TEST(RelationScan, ConjugationInvariant) {
    PrimeField f(13);
    std::mt19937_64 rng(7);
    auto pair = q8_witness(*sqrt_minus_one(f), f.from_int(3));
    auto g = random_sl2(f, rng), gi = inverse(g);
    Sl2Pair<ModP> conj{g * pair.g1 * gi, g * pair.g2 * gi};
    EXPECT_EQ(relation_scan(pair, 6).relations, relation_scan(conj, 6).relations);
}

TEST(RelationScan, ClosureLimit) {
    PrimeField f(101);
    auto big = group_closure<ModP>({diag2(f.from_int(2)), upper_unipotent(f.one())}, 50);
    EXPECT_FALSE(big.has_value());
}

// ---------------------------------------------------------------------------
// lemma checks

TEST(Lemma78, ExhaustiveOverF13) {
    PrimeField f(13);
    const auto w = example_word(ExampleWord::Ex5).as_word();
    int checked = 0;
    for (long l = 1; l < 13; ++l) {
        auto lambda = f.from_int(l);
        if (power(lambda, 4) == f.one()) {
            EXPECT_THROW(lemma78_check(lambda, f.one()), DegenerateLambda);
            continue;
        }
        for (long u = 0; u < 13; ++u) {
            auto r = lemma78_check(lambda, f.from_int(u));
            ASSERT_TRUE(r.in_Uminus);
            ASSERT_TRUE(r.trivial_iff_unit);
            auto v = naive(w, {diag2(lambda), weyl_element(f.one()) * upper_unipotent(f.from_int(u))});
            ASSERT_EQ(v, r.value);
            ASSERT_TRUE(v(0, 1).is_zero());
            ASSERT_EQ(v(0, 0), f.one());
            ++checked;
        }
    }
    EXPECT_EQ(checked, 8 * 13);
}

TEST(Lemma101, OverF17) {
    PrimeField f(17);
    auto r = lemma101_check(f);
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(r.trace, f.from_int(34));
    EXPECT_TRUE(is_special(r.g));
    // independently: w(u, g) by the letter product
    EXPECT_EQ(naive(example_word(ExampleWord::Ex5).as_word(), {upper_unipotent(f.one()), r.g}), r.value);
    EXPECT_THROW(lemma101_check(PrimeField(13)), RingLacksRoots);
    EXPECT_THROW(lemma101_check(PrimeField(7)), RingLacksRoots);
}

TEST(WsigmaProbe, Examples) {
    PrimeField f(101);
    std::mt19937_64 rng(8);
    auto sigma = diag2(f.from_int(2));
    auto many = wsigma_trace_probe(f, parse_word("[x,y]").as_word(), sigma, 100, rng);
    EXPECT_EQ(many.verdict, Verdict::TakesManyValues);
    auto one = wsigma_trace_probe(f, parse_word("x y x^-1 y^-1 y x y^-1 x^-1").as_word(), sigma, 20, rng);
    EXPECT_EQ(one.verdict, Verdict::ConstantSoFar);
    EXPECT_THROW(wsigma_trace_probe(f, parse_word("x y^2").as_word(), sigma, 5, rng), InvalidParams);
}

// ---------------------------------------------------------------------------
// catalogue

TEST(Catalogue, Table) {
    const auto& cat = component_catalogue();
    ASSERT_EQ(cat.size(), 9u);
    EXPECT_EQ(parse_component("EX5.w1"), ComponentId::Ex5W1);
    EXPECT_EQ(component_info(ComponentId::Ex3W1).claimed, 3);
    EXPECT_THROW(parse_component("ex9.W"), InvalidParams);
}

TEST(Catalogue, AllCertificatesOverF101) {
    PrimeField f(101);
    std::mt19937_64 rng(7);
    for (const auto& c : component_catalogue()) {
        auto cert = certify_component(f, c.id, CatalogueOptions{}, rng);
        EXPECT_TRUE(cert.on_fiber) << c.name;
        EXPECT_EQ(cert.lower, c.claimed) << c.name;
        EXPECT_EQ(cert.upper, c.claimed) << c.name;
        EXPECT_TRUE(cert.confirmed) << c.name;
        EXPECT_TRUE(is_special(cert.point.g1));
        EXPECT_TRUE(is_special(cert.point.g2));
    }
}

TEST(Catalogue, ParametrizationRanks) {
    PrimeField f(101);
    std::mt19937_64 rng(9);
    EXPECT_EQ(parametrization_rank(sample_component(f, ComponentId::Ex1W, {}, rng)), 4u);
    EXPECT_EQ(parametrization_rank(sample_component(f, ComponentId::Ex3W1, {}, rng)), 3u);
    EXPECT_EQ(parametrization_rank(sample_component(f, ComponentId::Ex5W1, {}, rng)), 4u);
}

TEST(Catalogue, PointsLieOnTheirFibers) {
    PrimeField f(101);
    std::mt19937_64 rng(10);
    for (const auto& c : component_catalogue())
        for (int k = 0; k < 10; ++k) {
            auto spec = sample_component(f, c.id, {}, rng);
            auto v = naive(spec.word.as_word(), component_point(spec));
            if (c.fiber == Fiber::W)
                ASSERT_TRUE(v.is_identity()) << c.name;
            else
                ASSERT_EQ(v.trace(), spec.target) << c.name;
        }
}

TEST(Catalogue, MissingRoots) {
    PrimeField f(103); // 103 = 3 mod 4 and 5 does not divide 102
    std::mt19937_64 rng(11);
    EXPECT_THROW(sample_component(f, ComponentId::Ex3W1, {}, rng), RingLacksRoots);
    EXPECT_THROW(sample_component(f, ComponentId::Ex4Tj, {}, rng), RingLacksRoots);
    CatalogueOptions bad;
    bad.j = 3;
    EXPECT_THROW(sample_component(PrimeField(101), ComponentId::Ex2Wj, bad, rng), InvalidParams);
}
