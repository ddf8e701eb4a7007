#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <complex>

#include "quadratica/fibgroup.hpp"

using namespace quadratica;

namespace {

// 2x2 matrix power [[1,1],[1,0]]^n = [[F(n+1), F(n)], [F(n), F(n-1)]]
BigInt matrix_fib(long n)
{
    std::array<BigInt, 4> result = {1, 0, 0, 1};
    std::array<BigInt, 4> base = {1, 1, 1, 0};
    auto mul = [](const std::array<BigInt, 4>& x, const std::array<BigInt, 4>& y) {
        return std::array<BigInt, 4>{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                                     x[2] * y[1] + x[3] * y[3]};
    };
    while (n > 0) {
        if (n & 1) {
            result = mul(result, base);
        }
        base = mul(base, base);
        n >>= 1;
    }
    return result[1];
}

} // namespace

TEST(Fib, TablePrefix)
{
    const long expected[] = {1, 1, 2, 3, 5, 8, 13};
    for (long n = 0; n < 7; ++n) {
        EXPECT_EQ(fib(n), expected[n]);
    }
    EXPECT_EQ(fib(2), 2);
    EXPECT_THROW(fib(-1), Error);
}

TEST(Fib, MatchesMatrixPower)
{
    for (long n = 0; n <= 300; ++n) {
        EXPECT_EQ(fib(n), matrix_fib(n + 1)) << n;
        EXPECT_EQ(fib_coeff(n), matrix_fib(n)) << n;
    }
    EXPECT_EQ(fib(50), BigInt("20365011074"));
}

TEST(PowerReduce, Examples)
{
    EXPECT_EQ(power_reduce(FibCase::I, 5), (FibPair{5, 3}));
    EXPECT_EQ(power_reduce(FibCase::I, 6), (FibPair{8, 5}));
    EXPECT_EQ(golden_ratio().pow(6), golden_ratio() * BigRational(8) + BigRational(5));
    EXPECT_EQ(power_reduce(FibCase::II, 2), (FibPair{-1, 1}));
    EXPECT_THROW(power_reduce(FibCase::I, 0), Error);
    EXPECT_THROW(power_reduce(FibCase::III, 3), Error);
}

TEST(PowerReduce, MatchesExactExponentiation)
{
    for (FibCase c : {FibCase::I, FibCase::II}) {
        for (bool conj : {false, true}) {
            const QuadElem x = fib_root(c, conj);
            QuadElem acc = x;
            for (long n = 1; n <= 90; ++n) {
                ASSERT_EQ(power_reduce(c, n).apply(x), acc) << fib_case_name(c) << " n = " << n;
                acc *= x;
            }
        }
    }
}

TEST(PartialSums, Examples)
{
    const QuadElem x4 = fib_root(FibCase::IV);
    EXPECT_EQ(partial_power_sum(FibCase::IV, 2), BigRational(-1));
    EXPECT_EQ(partial_power_sum(FibCase::IV, 3), BigRational(0));
    EXPECT_EQ(partial_power_sum(FibCase::IV, 4), x4);
    const QuadElem x1 = fib_root(FibCase::I);
    EXPECT_EQ(partial_power_sum(FibCase::I, 1), x1);
    EXPECT_EQ(partial_power_sum(FibCase::I, 1), x1.pow(3) - x1.pow(2));
    EXPECT_EQ(partial_power_sum(FibCase::I, 4), x1.pow(6) - x1.pow(2));
}

TEST(PartialSums, ClosedFormsForAllCases)
{
    for (FibCase c : {FibCase::I, FibCase::II, FibCase::III, FibCase::IV}) {
        for (bool conj : {false, true}) {
            for (long n = 1; n <= 60; ++n) {
                ASSERT_EQ(partial_power_sum(c, n, conj), closed_form_sum(c, n, conj))
                    << fib_case_name(c) << " n = " << n << " conj = " << conj;
            }
        }
    }
}

TEST(PartialSums, PeriodicCasesThreeAndFour)
{
    for (bool conj : {false, true}) {
        for (long n = 1; n <= 60; ++n) {
            EXPECT_EQ(partial_power_sum(FibCase::III, n + 6, conj), partial_power_sum(FibCase::III, n, conj));
            EXPECT_EQ(partial_power_sum(FibCase::IV, n + 3, conj), partial_power_sum(FibCase::IV, n, conj));
            EXPECT_EQ(partial_power_sum(FibCase::III, n, conj), case_three_residue_value(n, conj)) << n;
        }
    }
}

TEST(PartialSums, CaseThreeResiduesAgainstComplexFloats)
{
    // x = e^{i pi / 3} solves x^2 = x - 1
    const std::complex<double> x = std::polar(1.0, M_PI / 3);
    EXPECT_LT(std::abs(fib_root(FibCase::III).to_complex() - x), 1e-12);
    std::complex<double> sum = 0.0;
    std::complex<double> term = x;
    for (long n = 1; n <= 24; ++n) {
        sum += term;
        term *= x;
        EXPECT_LT(std::abs(case_three_residue_value(n).to_complex() - sum), 1e-9) << n;
    }
}

TEST(Telescoping, HoldsUnderShiftedIndexing)
{
    for (long n = 1; n <= 90; ++n) {
        EXPECT_TRUE(fib_telescoping_holds(n)) << n;
    }
}

TEST(UnitGroup, CaseThree)
{
    const UnitGroup g = unit_group(FibCase::III);
    EXPECT_EQ(g.order, 6u);
    EXPECT_TRUE(check_group(g).all());
    const QuadElem x = fib_root(FibCase::III);
    EXPECT_EQ(g.elements[1], x - BigRational(1));
    EXPECT_EQ(g.elements[2], BigRational(-1));
    EXPECT_TRUE(power_cycle_identities(FibCase::III, 10));
}

TEST(UnitGroup, CaseFour)
{
    const UnitGroup g = unit_group(FibCase::IV);
    EXPECT_EQ(g.order, 3u);
    EXPECT_TRUE(check_group(g).all());
    const QuadElem x = fib_root(FibCase::IV);
    EXPECT_EQ(x.pow(3), BigRational(1));
    EXPECT_EQ(x.pow(4), x);
    // element set is {x, x^2, 1}
    EXPECT_EQ(g.elements[0], x);
    EXPECT_EQ(g.elements[1], x * x);
    EXPECT_EQ(g.elements[2], BigRational(1));
    EXPECT_TRUE(power_cycle_identities(FibCase::IV, 10));
}

TEST(UnitGroup, RejectsRealCases)
{
    EXPECT_THROW(unit_group(FibCase::I), Error);
    EXPECT_THROW(power_cycle_identities(FibCase::II, 2), Error);
}

TEST(UnitGroup, BrokenTableFailsAxioms)
{
    UnitGroup g = unit_group(FibCase::III);
    std::swap(g.table[1][2], g.table[1][3]);
    EXPECT_FALSE(check_group(g).all());
}

TEST(GeometricSum, Examples)
{
    EXPECT_TRUE(geometric_sum_check(QuadElem::rational(2), 3));
    EXPECT_EQ(partial_power_sum(FibCase::I, 4), golden_ratio().pow(6) - golden_ratio().pow(2));
    EXPECT_TRUE(geometric_sum_check(golden_ratio(), 4));
    EXPECT_THROW(geometric_sum_check(QuadElem::rational(1), 3), Error);
    EXPECT_THROW(geometric_sum_check(std::complex<double>(1.0, 0.0), 3), Error);
    EXPECT_TRUE(geometric_sum_check(std::complex<double>(0.3, 0.8), 12));
}

TEST(PowerFamily, PlasticRoot)
{
    const double rho = power_family_real_root(PowerFamily::XPlusOne, 3);
    EXPECT_NEAR(rho, 1.324717957244746, 1e-12);
    EXPECT_LT(std::abs(power_family_residual(PowerFamily::XPlusOne, 3, rho)), 1e-12);
    for (const SumRewriting& r : power_family_sums(PowerFamily::XPlusOne, 3, 5)) {
        EXPECT_TRUE(r.matches) << r.label;
    }
}

TEST(PowerFamily, RewritingsMatchDirectSum)
{
    for (PowerFamily f : {PowerFamily::OneMinusX, PowerFamily::XMinusOne}) {
        for (long b : {3L, 5L}) {
            for (long n = 1; n <= 12; ++n) {
                for (const SumRewriting& r : power_family_sums(f, b, n)) {
                    EXPECT_TRUE(r.matches) << power_family_name(f) << " b = " << b << " n = " << n << ": " << r.label;
                }
            }
        }
    }
}
