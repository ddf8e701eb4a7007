#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "quadratica/goldbach.hpp"

using namespace quadratica;

TEST(ParityLemma, Examples)
{
    const ParityLemma a = parity_lemma(17, 7);
    EXPECT_EQ(a.M, 12);
    EXPECT_EQ(a.I, 5);
    EXPECT_EQ(a.m_parity, Parity::Even);
    EXPECT_EQ(a.i_parity, Parity::Odd);
    EXPECT_TRUE(a.opposite);

    const ParityLemma b = parity_lemma(5, 5);
    EXPECT_EQ(b.M, 5);
    EXPECT_EQ(b.I, 0);
    EXPECT_TRUE(b.opposite);

    const ParityLemma c = parity_lemma(13, 3);
    EXPECT_EQ(c.M, 8);
    EXPECT_EQ(c.I, 5);
    EXPECT_EQ(c.residue_case, "4k+1,4k-1");

    try {
        parity_lemma(4, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EvenInput);
    }
}

TEST(ParityLemma, AllOddPairs)
{
    for (std::int64_t p = -301; p <= 301; p += 2) {
        for (std::int64_t q = -301; q <= 301; q += 2) {
            ASSERT_TRUE(parity_lemma(p, q).opposite) << p << "," << q;
        }
    }
}

TEST(FindWitness, Examples)
{
    const GoldbachWitness w24 = find_witness(24);
    EXPECT_EQ(w24.I, 1u);
    EXPECT_EQ(w24.p, 13u);
    EXPECT_EQ(w24.q, 11u);
    bool has_five = false;
    for (const GoldbachWitness& w : all_witnesses(24)) {
        has_five = has_five || (w.I == 5 && w.p == 17 && w.q == 7);
    }
    EXPECT_TRUE(has_five);

    const GoldbachWitness w4 = find_witness(4);
    EXPECT_EQ(w4.I, 0u);
    EXPECT_EQ(w4.p, 2u);
    EXPECT_EQ(w4.q, 2u);
    EXPECT_TRUE(w4.even_prime);

    const GoldbachWitness w100 = find_witness(100);
    EXPECT_EQ(w100.I, 3u);
    EXPECT_EQ(w100.p, 53u);
    EXPECT_EQ(w100.q, 47u);

    EXPECT_THROW(find_witness(7), Error);
    EXPECT_THROW(find_witness(2), Error);
}

TEST(FindWitness, MinimalAgainstAllWitnesses)
{
    for (std::uint64_t N = 4; N <= 3000; N += 2) {
        const auto all = all_witnesses(N);
        ASSERT_FALSE(all.empty()) << N;
        const GoldbachWitness w = find_witness(N);
        EXPECT_EQ(w.I, all.front().I) << N;
        EXPECT_EQ(w.p + w.q, N);
        for (const GoldbachWitness& x : all) {
            EXPECT_TRUE(is_prime_u64(x.p) && is_prime_u64(x.q));
        }
    }
}

TEST(VerifyGoldbach, SmallRangeInvariants)
{
    const GoldbachReport r = verify_goldbach(4, 20000, 3);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.witnesses.size(), (20000u - 4u) / 2 + 1);
    std::uint64_t expected_n = 4;
    for (const GoldbachWitness& w : r.witnesses) {
        ASSERT_EQ(w.N, expected_n);
        expected_n += 2;
        ASSERT_EQ(w.p + w.q, w.N);
        ASSERT_EQ(w.p - w.q, 2 * w.I);
        if (!w.even_prime) {
            ASSERT_TRUE(parity_lemma(static_cast<std::int64_t>(w.p), static_cast<std::int64_t>(w.q)).opposite);
        }
        if (w.M % 2 == 0) {
            // p = 2n + I, q = 2n - I with p + q = 4n
            const std::uint64_t n = w.M / 2;
            ASSERT_EQ(w.p, 2 * n + w.I);
            ASSERT_EQ(w.q, 2 * n - w.I);
        }
    }
    const std::uint64_t histogram_total = std::accumulate(
        r.i_histogram.begin(), r.i_histogram.end(), std::uint64_t{0}, [](auto acc, const auto& kv) { return acc + kv.second; });
    EXPECT_EQ(histogram_total, r.witnesses.size());
}

TEST(VerifyGoldbach, ThreadCountDoesNotChangeOutput)
{
    const GoldbachReport one = verify_goldbach(1000, 30000, 1);
    const GoldbachReport four = verify_goldbach(1000, 30000, 4);
    ASSERT_EQ(one.witnesses.size(), four.witnesses.size());
    for (std::size_t i = 0; i < one.witnesses.size(); ++i) {
        EXPECT_EQ(one.witnesses[i].I, four.witnesses[i].I);
    }
    std::ostringstream a, b;
    write_goldbach_csv(a, one);
    write_goldbach_csv(b, four);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str().substr(0, 12), "N,I_min,p,q\n");
}

TEST(VerifyGoldbach, FullRangeToOneMillion)
{
    const GoldbachReport r = verify_goldbach(4, 1000000);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.witnesses.size(), 499999u);
    EXPECT_EQ(r.witnesses.back().N, 1000000u);
}

TEST(WitnessParabola, Examples)
{
    const WitnessParabola a = witness_parabola(17, 7);
    EXPECT_EQ(a.equation, Quadratic(1, -24, 119));
    EXPECT_EQ(a.vertex_x, BigRational(12));
    EXPECT_EQ(a.vertex_y, BigRational(-25));
    EXPECT_TRUE(a.roots_verified);

    const WitnessParabola b = witness_parabola(5, 3);
    EXPECT_EQ(b.equation, Quadratic(1, -8, 15));
    EXPECT_EQ(b.vertex_y, BigRational(-1));

    const WitnessParabola c = witness_parabola(3, 3);
    EXPECT_EQ(c.equation, Quadratic(1, -6, 9));
    EXPECT_EQ(c.vertex_x, BigRational(3));
    EXPECT_EQ(c.vertex_y, BigRational(0));

    EXPECT_THROW(witness_parabola(9, 3), Error);
    EXPECT_THROW(witness_parabola(3, 5), Error);
}

TEST(WitnessAreas, Examples)
{
    const WitnessAreas a = witness_areas(17, 7);
    EXPECT_EQ(a.I, BigRational(5));
    EXPECT_EQ(a.segment, BigRational(500, 3));
    EXPECT_EQ(a.rectangle, BigRational(250));
    EXPECT_EQ(a.triangle, BigRational(125));
    EXPECT_TRUE(a.identities && a.ratios);

    const WitnessAreas b = witness_areas(5, 3);
    EXPECT_EQ(b.segment, BigRational(4, 3));
    EXPECT_EQ(b.rectangle, BigRational(2));
    EXPECT_EQ(b.triangle, BigRational(1));
    EXPECT_EQ(b.leading, BigRational(18));

    try {
        witness_areas(7, 7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidPair);
    }
}

TEST(WitnessAreas, RandomWitnessesAgainstQuadrature)
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::uint64_t> pick(3, 50000);
    for (int i = 0; i < 1000; ++i) {
        const auto all = all_witnesses(2 * pick(rng));
        const GoldbachWitness& w = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
        if (w.I == 0) {
            continue;
        }
        const WitnessAreas a = witness_areas(static_cast<std::int64_t>(w.p), static_cast<std::int64_t>(w.q));
        ASSERT_TRUE(a.identities && a.ratios) << w.p << "," << w.q;
        // Simpson on [q, p] is exact for the cubic-free integrand
        const double p = double(w.p), q = double(w.q), m = (p + q) / 2;
        auto f = [&](double x) { return (x - p) * (x - q); };
        const double simpson = (p - q) / 6 * (f(q) + 4 * f(m) + f(p));
        EXPECT_NEAR(a.segment.to_double(), -simpson, 1e-9 * std::abs(simpson));
    }
}

TEST(Hypotenuse, Examples)
{
    const HypotenuseNumber a = hypotenuse_number(6, 5, 1);
    EXPECT_EQ(a.H, 169);
    EXPECT_EQ(a.cls, HypotenuseClass::PrimeSquare);
    EXPECT_TRUE(a.quotient_identity);

    const HypotenuseNumber b = hypotenuse_number(6, 7, 1);
    EXPECT_EQ(b.H, 193);
    EXPECT_EQ(b.cls, HypotenuseClass::Prime);

    const HypotenuseNumber c = hypotenuse_number(2, 1, 2);
    EXPECT_EQ(c.H, 257);
    EXPECT_EQ(c.cls, HypotenuseClass::Prime);

    EXPECT_EQ(hypotenuse_number(3, 5, 1).cls, HypotenuseClass::Prime);     // 61
    EXPECT_EQ(hypotenuse_number(3, 7, 1).cls, HypotenuseClass::Composite); // 85
    EXPECT_EQ(hypotenuse_number(2, 3, 1).cls, HypotenuseClass::PrimeSquare); // 25
    try {
        hypotenuse_number(3, 3, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCoprime);
    }
}

TEST(Hypotenuse, QuotientIdentityOnCoprimePairs)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(1, 5000);
    int tested = 0;
    while (tested < 1000) {
        const long n = d(rng), I = d(rng);
        if (std::gcd(2 * n, I) != 1) {
            continue;
        }
        ++tested;
        for (unsigned long l : {1UL, 2UL, 3UL}) {
            const HypotenuseNumber h = hypotenuse_number(n, I, l);
            ASSERT_TRUE(h.quotient_identity);
            const BigInt expect = pow_big(BigInt(2 * n), 2 * l) + pow_big(BigInt(I), 2 * l);
            ASSERT_EQ(h.H, expect);
        }
    }
}
