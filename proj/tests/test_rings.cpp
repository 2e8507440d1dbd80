#include <gtest/gtest.h>

#include <random>

#include "wordmap/literal.hpp"
#include "wordmap/rings.hpp"

using namespace wordmap;

namespace {

template <class R>
void field_axioms(const R& ring, std::mt19937_64& rng, int pairs) {
    for (int k = 0; k < pairs; ++k) {
        auto a = ring.random(rng), b = ring.random(rng), c = ring.random(rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a - a, ring.zero());
        if (!a.is_zero())
            ASSERT_EQ(a * a.inverse(), ring.one());
    }
}

} // namespace

TEST(Rational, InverseOfTwoThirds) {
    RationalField q;
    EXPECT_EQ(Rational::fraction(2, 3).inverse(), Rational::fraction(3, 2));
    EXPECT_EQ(q.from_int(6) * q.from_int(4).inverse(), Rational::fraction(3, 2));
    EXPECT_THROW(q.zero().inverse(), NotInvertible);
}

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational::fraction(4, -6).str(), "-2/3");
    EXPECT_EQ(Rational::fraction(4, 6), Rational::fraction(2, 3));
}

TEST(ModP, InverseOfFiveModThirteen) {
    PrimeField f(13);
    EXPECT_EQ(f.from_int(5).inverse(), f.from_int(8));
    for (long x = 1; x < 13; ++x) {
        long brute = 0;
        for (long y = 1; y < 13; ++y)
            if (x * y % 13 == 1)
                brute = y;
        EXPECT_EQ(f.from_int(x).inverse(), f.from_int(brute));
    }
    EXPECT_THROW(f.zero().inverse(), NotInvertible);
}

TEST(ModP, RejectsComposite) {
    EXPECT_THROW(PrimeField(15), InvalidRing);
    EXPECT_THROW(PrimeField(1), InvalidRing);
}

TEST(ModP, LargeModulusMultiplication) {
    PrimeField f(4611686018427387847ULL); // largest prime below 2^62
    auto a = f.from_int(-1);
    EXPECT_EQ(a * a, f.one());
    EXPECT_EQ(a * a.inverse(), f.one());
}

TEST(Dual, InverseOfTwoPlusThreeEps) {
    DualRing<RationalField> d{RationalField{}};
    auto x = d.make(Rational(2), Rational(3));
    auto inv = x.inverse();
    EXPECT_EQ(inv.real(), Rational::fraction(1, 2));
    EXPECT_EQ(inv.eps(), Rational::fraction(-3, 4));
    EXPECT_EQ(x * inv, d.one());
    EXPECT_THROW(d.epsilon().inverse(), NotInvertible);
}

TEST(Dual, EpsilonSquaresToZeroAndProductRule) {
    DualRing<PrimeField> d{PrimeField(101)};
    EXPECT_TRUE((d.epsilon() * d.epsilon()).is_zero());
    std::mt19937_64 rng(3);
    for (int k = 0; k < 1000; ++k) {
        auto x = d.random(rng), y = d.random(rng);
        auto p = x * y;
        EXPECT_EQ(p.real(), x.real() * y.real());
        EXPECT_EQ(p.eps(), x.real() * y.eps() + x.eps() * y.real());
    }
}

TEST(Axioms, RationalField) {
    std::mt19937_64 rng(1);
    field_axioms(RationalField{}, rng, 1000);
}

TEST(Axioms, PrimeField) {
    std::mt19937_64 rng(2);
    field_axioms(PrimeField(101), rng, 1000);
}

TEST(Axioms, QuadraticFields) {
    std::mt19937_64 rng(3);
    field_axioms(QuadraticField<RationalField>(RationalField{}, Rational(-1), "-1"), rng, 1000);
    PrimeField f7(7);
    field_axioms(QuadraticField<PrimeField>(f7, f7.from_int(3), "3"), rng, 1000);
}

TEST(Axioms, DualRing) {
    std::mt19937_64 rng(4);
    DualRing<PrimeField> d{PrimeField(13)};
    for (int k = 0; k < 1000; ++k) {
        auto a = d.random(rng), b = d.random(rng), c = d.random(rng);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * b, b * a);
        if (!a.real().is_zero())
            ASSERT_EQ(a * a.inverse(), d.one());
    }
}

TEST(QuadraticField, RejectsSquareDiscriminant) {
    PrimeField f13(13);
    EXPECT_THROW(QuadraticField<PrimeField>(f13, f13.from_int(4), "4"), InvalidRing);
    EXPECT_THROW(QuadraticField<RationalField>(RationalField{}, Rational(9), "9"), InvalidRing);
}

TEST(SqrtMinusOne, Examples) {
    EXPECT_EQ(*sqrt_minus_one(PrimeField(13)), PrimeField(13).from_int(5));
    EXPECT_FALSE(sqrt_minus_one(RationalField{}).has_value());
    QuadraticField<RationalField> qi(RationalField{}, Rational(-1), "-1");
    auto i = sqrt_minus_one(qi);
    ASSERT_TRUE(i.has_value());
    EXPECT_EQ(i->re(), Rational(0));
    EXPECT_EQ(i->im().value() * i->im().value(), 1);
}

TEST(SqrtMinusOne, ExistsIffOneModFour) {
    for (std::uint64_t p = 3; p < 100; ++p) {
        if (!is_prime(p))
            continue;
        PrimeField f(p);
        auto s = sqrt_minus_one(f);
        bool brute = false;
        for (std::uint64_t x = 0; x < p; ++x)
            brute = brute || (x * x) % p == p - 1;
        EXPECT_EQ(s.has_value(), p % 4 == 1) << p;
        EXPECT_EQ(s.has_value(), brute) << p;
        if (s)
            EXPECT_EQ(*s * *s, -f.one());
    }
}

TEST(SqrtMinusOne, FieldOfSeventeenHasIAndRootTwo) {
    PrimeField f(17);
    EXPECT_EQ(*sqrt_minus_one(f), f.from_int(4));
    EXPECT_EQ(*f.sqrt(f.from_int(2)), f.from_int(6));
}

TEST(RootOfUnity, Examples) {
    EXPECT_EQ(*primitive_root_of_unity(PrimeField(11), 5), PrimeField(11).from_int(3));
    EXPECT_FALSE(primitive_root_of_unity(PrimeField(13), 7).has_value());
    EXPECT_EQ(*primitive_root_of_unity(PrimeField(101), 1), PrimeField(101).one());
}

TEST(RootOfUnity, ExactOrderByExhaustion) {
    PrimeField f(101);
    for (std::uint64_t k : {2, 4, 5, 10, 20, 25, 50, 100}) {
        auto z = primitive_root_of_unity(f, k);
        ASSERT_TRUE(z.has_value()) << k;
        auto acc = f.one();
        std::uint64_t order = 0;
        do {
            acc = acc * *z;
            ++order;
        } while (!(acc == f.one()));
        EXPECT_EQ(order, k);
    }
}

TEST(PrimeFieldSqrt, AgreesWithBruteForce) {
    PrimeField f(97);
    for (std::uint64_t x = 0; x < 97; ++x) {
        auto r = f.sqrt(f.element(x));
        bool brute = false;
        for (std::uint64_t y = 0; y < 97; ++y)
            brute = brute || (y * y) % 97 == x;
        EXPECT_EQ(r.has_value(), brute);
        if (r)
            EXPECT_EQ(*r * *r, f.element(x));
    }
}

TEST(Literal, RingDescriptors) {
    EXPECT_EQ(parse_ring_descriptor("Q").str(), "Q");
    EXPECT_EQ(parse_ring_descriptor("Fp:13").str(), "Fp:13");
    EXPECT_EQ(parse_ring_descriptor("Q[i]").str(), "Q[i]");
    EXPECT_EQ(parse_ring_descriptor("Fp:7[sqrt(3)]").str(), "Fp:7[sqrt(3)]");
    EXPECT_EQ(parse_ring_descriptor("D(Q)").str(), "D(Q)");
    EXPECT_THROW(parse_ring_descriptor("Fp:12"), InvalidRing);
    EXPECT_THROW(parse_ring_descriptor("R"), InvalidRing);
}

TEST(Literal, Scalars) {
    RationalField q;
    EXPECT_EQ(parse_scalar(q, "-3/4"), Rational::fraction(-3, 4));
    PrimeField f(13);
    EXPECT_EQ(parse_scalar(f, "i"), f.from_int(5));
    EXPECT_EQ(parse_scalar(f, "1/2"), f.from_int(7));
    EXPECT_THROW(parse_scalar(q, "i"), RingLacksRoots);
    QuadraticField<RationalField> q2(q, Rational(2), "2");
    auto x = parse_scalar(q2, "1 + 3*sqrt(2)");
    EXPECT_EQ(x.re(), Rational(1));
    EXPECT_EQ(x.im(), Rational(3));
    EXPECT_THROW(parse_scalar(q, ""), SyntaxError);
}

TEST(Literal, VisitFieldDispatch) {
    auto name = visit_field(parse_ring_descriptor("Fp:101"), [](const auto& r) { return r.name(); });
    EXPECT_EQ(name, "Fp:101");
    EXPECT_THROW(visit_field(parse_ring_descriptor("D(Q)"), [](const auto& r) { return r.name(); }), InvalidRing);
}
