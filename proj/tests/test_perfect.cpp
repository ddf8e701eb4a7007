#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "quadratica/perfect.hpp"

using namespace quadratica;

namespace {

BigRational rnd(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-2000, 2000);
    std::uniform_int_distribution<long> den(1, 60);
    return BigRational(num(rng), den(rng));
}

} // namespace

TEST(EliasEval, Examples)
{
    EXPECT_NEAR(elias_eval(std::numbers::pi), 30.1639, 1e-4);
    EXPECT_EQ(std::lround(elias_eval(std::numbers::pi)), 30);
    EXPECT_EQ(elias_eval(BigRational(-1)), BigRational(0));
    EXPECT_EQ(elias_eval(BigRational(-1, 2)), BigRational(0));
    EXPECT_NEAR(elias_eval(std::numbers::phi), 11.090, 1e-3);
    EXPECT_EQ(elias_parabola(), Quadratic(2, 3, 1));
}

TEST(EliasEval, FactorizationAndDifferenceIdentity)
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 10000; ++i) {
        const BigRational a = rnd(rng), b = rnd(rng);
        ASSERT_EQ(elias_eval(a), (a + BigRational(1)) * (BigRational(2) * a + BigRational(1)));
        ASSERT_TRUE(elias_difference_identity(a, b));
        ASSERT_EQ(elias_eval(a) - elias_eval(b), (a - b) * (BigRational(2) * a + BigRational(2) * b + BigRational(3)));
    }
}

TEST(PerfectFromExponent, Examples)
{
    const PerfectRecord five = perfect_from_exponent(5);
    EXPECT_EQ(five.value, 496);
    EXPECT_EQ(five.x1, 15);
    EXPECT_EQ(five.x2, BigRational(-33, 2));
    EXPECT_TRUE(five.perfect());

    const PerfectRecord two = perfect_from_exponent(2);
    EXPECT_EQ(two.value, 6);
    EXPECT_EQ(two.x1, 1);
    EXPECT_EQ(two.x2, BigRational(-5, 2));

    const PerfectRecord eleven = perfect_from_exponent(11);
    EXPECT_EQ(eleven.value, 2096128);
    EXPECT_EQ(eleven.x1, 1023);
    EXPECT_FALSE(eleven.perfect());
    // Vieta: x1 + x2 = -3/2
    EXPECT_EQ(eleven.x2, BigRational(-2049, 2));

    EXPECT_THROW(perfect_from_exponent(1), Error);
}

TEST(PerfectFromExponent, RecordInvariants)
{
    for (unsigned long p = 2; p <= 127; ++p) {
        const PerfectRecord r = perfect_from_exponent(p);
        ASSERT_EQ(elias_eval(r.x1), r.value) << p;
        const BigInt root = pow2(p + 1) - 1;
        ASSERT_EQ(8 * r.value + 1, root * root);
        ASSERT_EQ(BigRational(r.x1) + r.x2, BigRational(-3, 2));
        ASSERT_EQ(r.perfect(), is_prime(r.mersenne)) << p;
    }
}

TEST(PerfectFromExponent, DivisorSumOracle)
{
    for (unsigned long p = 2; p <= 19; ++p) {
        const PerfectRecord r = perfect_from_exponent(p);
        EXPECT_EQ(proper_divisor_sum(r.value) == r.value, r.perfect()) << p;
    }
    EXPECT_EQ(proper_divisor_sum(BigInt(12)), 16);
    EXPECT_EQ(proper_divisor_sum(BigInt(1)), 0);
}

TEST(PerfectTable, Rows)
{
    const auto rows = perfect_table(13);
    ASSERT_EQ(rows.size(), 12u);
    int perfect = 0;
    for (const PerfectRecord& r : rows) {
        perfect += r.perfect() ? 1 : 0;
    }
    // 6, 28, 496, 8128, 33550336
    EXPECT_EQ(perfect, 5);
}

TEST(EliasPreimage, Examples)
{
    const auto a = elias_preimage(BigInt(8128));
    ASSERT_TRUE(a.has_value());
    EXPECT_EQ(a->x1, 63);
    EXPECT_EQ(a->x2, BigRational(-129, 2));
    EXPECT_TRUE(a->rederived);

    const auto b = elias_preimage(BigInt(33550336));
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(b->x1, 4095);

    EXPECT_FALSE(elias_preimage(BigInt(7)).has_value());
    EXPECT_THROW(elias_preimage(BigInt(0)), Error);
}

TEST(EliasPreimage, InvertsEvaluation)
{
    for (long x = 0; x <= 3000; ++x) {
        const BigInt P = elias_eval(BigInt(x));
        if (P < 1) {
            continue;
        }
        const auto pre = elias_preimage(P);
        ASSERT_TRUE(pre.has_value()) << x;
        EXPECT_EQ(pre->x1, x);
        EXPECT_EQ(pre->slope, 4 * x + 3);
    }
    // only values of f at non-negative integers have a preimage
    long hits = 0;
    for (long P = 1; P <= 5000; ++P) {
        hits += elias_preimage(BigInt(P)).has_value() ? 1 : 0;
    }
    long expect = 0;
    for (long x = 0; 2 * x * x + 3 * x + 1 <= 5000; ++x) {
        ++expect;
    }
    EXPECT_EQ(hits, expect);
}

TEST(ParityMap, Examples)
{
    EXPECT_EQ(parity_map(ParityMap::F, BigInt(3)), 28);
    EXPECT_EQ(parity_map(ParityMap::H, BigInt(2)), 10);
    EXPECT_EQ(parity_map(ParityMap::F, BigInt(4)), 45);
}

TEST(ParityMap, ContractsOnRange)
{
    for (long n = -10000; n <= 10000; ++n) {
        ASSERT_TRUE(parity_contract_holds(ParityMap::F, BigInt(n))) << n;
        ASSERT_TRUE(parity_contract_holds(ParityMap::H, BigInt(n))) << n;
    }
}

TEST(ParityMap, SixteenDoesNotDivideSmallPerfects)
{
    // even outputs of f are not all multiples of 16
    EXPECT_NE(BigInt(parity_map(ParityMap::F, BigInt(1)) % 16), 0);
    EXPECT_NE(BigInt(parity_map(ParityMap::F, BigInt(3)) % 16), 0);
    EXPECT_EQ(BigInt(parity_map(ParityMap::F, BigInt(15)) % 16), 0);
}

TEST(SeriesClosedForms, Examples)
{
    const SeriesForms a = series_closed_forms({1, 1, 3});
    EXPECT_EQ(a.sum, BigRational(6));
    EXPECT_EQ(a.square_form, BigRational(6));
    EXPECT_EQ(a.square_form, BigRational(7 * 7 - 1, 8));
    EXPECT_TRUE(a.agree);
    EXPECT_EQ(series_closed_forms({1, 2, 4}).sum, BigRational(16));
    EXPECT_EQ(series_closed_forms({2, 2, 3}).sum, BigRational(12));
    try {
        series_closed_forms({1, 0, 3});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroDifference);
    }
}

TEST(SeriesClosedForms, RandomAgainstDirectSum)
{
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> nd(1, 80);
    for (int i = 0; i < 500; ++i) {
        BigRational b = rnd(rng), d = rnd(rng);
        if (d.is_zero()) {
            d = BigRational(1);
        }
        const long n = nd(rng);
        BigRational direct = 0;
        for (long k = 0; k < n; ++k) {
            direct += b + BigRational(k) * d;
        }
        const SeriesForms f = series_closed_forms({b, d, n});
        EXPECT_TRUE(f.agree);
        EXPECT_EQ(f.direct, direct);
        EXPECT_EQ(f.sum, direct);
        EXPECT_EQ(f.square_form, direct);
    }
}

TEST(SeriesClosedForms, OddSquaresOneModEight)
{
    EXPECT_TRUE(odd_squares_one_mod_eight(100001));
    for (long n = 1; n <= 2000; ++n) {
        EXPECT_EQ(((2 * n + 1) * (2 * n + 1) - 1) % 8, 0);
    }
}

TEST(SumSquares, Examples)
{
    const SumSquaresReport three = sum_squares_bridge(3);
    EXPECT_EQ(three.sum, 14);
    EXPECT_EQ(three.f_n, 28);
    EXPECT_TRUE(three.closed_form_ok);
    EXPECT_FALSE(three.asymptotic_ok.has_value());
    EXPECT_EQ(sum_squares_bridge(1).sum, 1);

    const PerfectRootCheck c = perfect_root_check(perfect_from_exponent(5));
    EXPECT_EQ(c.via_half, 15);
    EXPECT_TRUE(c.equal_x1);
}

TEST(SumSquares, AsymptoticBound)
{
    for (long n = 11; n <= 5000; ++n) {
        const SumSquaresReport r = sum_squares_bridge(n);
        ASSERT_TRUE(r.closed_form_ok);
        ASSERT_TRUE(r.asymptotic_ok.value_or(false)) << n;
    }
    for (unsigned long p = 2; p <= 89; ++p) {
        EXPECT_TRUE(perfect_root_check(perfect_from_exponent(p)).equal_x1) << p;
    }
}

TEST(EliasGeometry, Examples)
{
    const EliasGeometry a = elias_geometry(BigRational(-1), BigRational(-1, 2));
    EXPECT_EQ(a.chord_area, BigRational(1, 24));
    EXPECT_EQ(a.axis_area, BigRational(1, 24));
    const EliasGeometry b = elias_geometry(BigRational(-1, 2), BigRational(0));
    EXPECT_EQ(b.axis_area, BigRational(5, 24));
    EXPECT_EQ(a.axis_area + b.axis_area, BigRational(1, 4));
    const EliasGeometry c = elias_geometry(BigRational(0), BigRational(1));
    EXPECT_EQ(c.chord_area, BigRational(1, 3));
    EXPECT_EQ(c.slope, BigRational(5));
    EXPECT_EQ(c.intercept, BigRational(1));
    EXPECT_TRUE(a.consistent && b.consistent && c.consistent);
    try {
        elias_geometry(BigRational(1), BigRational(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyInterval);
    }
}

TEST(EliasGeometry, RandomIntervalsAgainstQuadrature)
{
    std::mt19937_64 rng(77);
    for (int i = 0; i < 300; ++i) {
        BigRational a = rnd(rng) / BigRational(100), b = rnd(rng) / BigRational(100);
        if (a == b) {
            continue;
        }
        if (b < a) {
            std::swap(a, b);
        }
        const EliasGeometry g = elias_geometry(a, b);
        ASSERT_TRUE(g.consistent);
        // Simpson's rule is exact for quadratics
        const double ad = a.to_double(), bd = b.to_double();
        const double simpson =
            (bd - ad) / 6 * (elias_eval(ad) + 4 * elias_eval((ad + bd) / 2) + elias_eval(bd));
        EXPECT_NEAR(g.parabola_integral.to_double(), simpson, 1e-9 * std::max(1.0, std::abs(simpson)));
    }
}

TEST(EliasForms, HoldUpToSixty)
{
    for (unsigned long l = 0; l <= 60; ++l) {
        EXPECT_TRUE(elias_forms_hold(l, BigInt(static_cast<unsigned long>(l)))) << l;
    }
}

TEST(EliasForms, HMissesPerfectNumbers)
{
    EXPECT_TRUE(h_misses_perfect_numbers(1000000, 31));
}

TEST(EliasConstants, OnlyOneDisplayedValueDisagrees)
{
    int mismatches = 0;
    for (const ConstantEntry& c : elias_constants()) {
        if (std::abs(c.reference - c.computed) > 1e-3) {
            ++mismatches;
            EXPECT_EQ(c.expression, "2(e + phi)");
            EXPECT_NEAR(c.computed, 2 * (std::numbers::e + std::numbers::phi), 1e-12);
            EXPECT_NEAR(c.computed - c.reference, 2.0, 1e-9);
        }
    }
    EXPECT_EQ(mismatches, 1);
}
