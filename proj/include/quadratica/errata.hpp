#pragma once

// Versioned table of displayed formulas that disagree with what the algebra
// gives. Every entry carries a confirm() that recomputes the derived form and
// checks that the displayed form really fails, so the table cannot drift
// away from the library.

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "fibgroup.hpp"
#include "metallic.hpp"
#include "perfect.hpp"
#include "pnum.hpp"
#include "solver.hpp"

namespace quadratica {

inline constexpr const char* kErrataVersion = "1.0.0";

struct ErratumEntry {
    std::string id;
    std::string topic;
    std::string displayed;
    std::string derived;
    std::string oracle;
    std::function<bool()> confirm;
};

namespace detail {

inline bool shift_companion_confirms(int sign_p)
{
    // sign_p = +1: x^2 + px - p;  sign_p = -1: x^2 - px + p
    for (long p = 1; p <= 25; ++p) {
        const BigRational P(p);
        const Quadratic q(1, BigRational(sign_p) * P, BigRational(-sign_p) * P);
        const Quadratic s = shift_roots(q, 1);
        const BigRational derived = sign_p > 0 ? BigRational(1 - 2 * p) : BigRational(2 * p + 1);
        const BigRational displayed = sign_p > 0 ? BigRational(-(4 * p - 1)) : BigRational(4 * p + 1);
        if (s.c() != derived || s.c() == displayed) {
            return false;
        }
    }
    return true;
}

inline bool congruence_sign_confirms()
{
    // x^2 + x - 1 mod 11: disc = 5 is a nonzero square, 4ac - b^2 = 6 is not
    const PrimeModulus pm(11);
    const BigInt a = 1, b = 1, c = -1;
    const CongruenceSolution s = solve_quad_mod(a, b, c, pm);
    if (s.roots.empty()) {
        return false;
    }
    for (const BigInt& x : s.roots) {
        const BigInt u = 2 * a * x + b;
        const BigInt lhs = mod_floor(u * u, pm.value());
        if (lhs != mod_floor(b * b - 4 * a * c, pm.value()) || lhs == mod_floor(4 * a * c - b * b, pm.value())) {
            return false;
        }
    }
    return true;
}

inline bool partner_root_confirms()
{
    const Quadratic q(3, -7, 2); // roots 2 and 1/3
    const BigRational x1(2);
    const BigRational derived = -(q.a() * x1 + q.b()) / q.a();
    const BigRational displayed = -(q.a() * x1 + q.b()) / (BigRational(2) * q.a());
    return q.eval(derived).is_zero() && !q.eval(displayed).is_zero();
}

inline bool case_three_power_confirms()
{
    const QuadElem x = fib_root(FibCase::III);
    return x.pow(7) == -x.pow(4) && x.pow(7) != -x.pow(5);
}

inline bool case_three_sum_confirms()
{
    const QuadElem x = fib_root(FibCase::III);
    const QuadElem one = QuadElem::rational(1, x.m());
    for (long n = 5; n <= 200; n += 6) {
        const QuadElem s = partial_power_sum(FibCase::III, n);
        if (s != -one || s == -(x + one) / x) {
            return false;
        }
    }
    return true;
}

inline bool negative_power_confirms()
{
    const double x = power_family_real_root(PowerFamily::XMinusOne, 3);
    const double lhs = std::pow(x, -3.0);
    return std::abs(lhs - (std::pow(x, -2.0) - 1.0)) < 1e-12 && std::abs(lhs - (std::pow(x, -2.0) - x)) > 1e-3;
}

inline bool third_rewriting_confirms()
{
    const long b = 3;
    const long n = 9;
    const double x = power_family_real_root(PowerFamily::XMinusOne, b);
    double direct = 0.0;
    for (long k = 1; k <= n; ++k) {
        direct += std::pow(x, static_cast<double>(k));
    }
    const double derived = std::pow(x, static_cast<double>(n + 1 - b)) - x / (x - 1.0);
    const double displayed = std::pow(x, static_cast<double>(n - b)) - x / (x - 1.0);
    return std::abs(derived - direct) < 1e-10 && std::abs(displayed - direct) > 1e-3;
}

inline bool phi_difference_confirms()
{
    for (const PhiLedgerRow& row : phi_ledger(30)) {
        if (row.diff_coeff != fib_coeff(row.n) || row.diff_coeff == -fib_coeff(row.n)) {
            return false;
        }
    }
    return true;
}

inline bool complex_special_confirms()
{
    for (std::int64_t m : {-3, -7, -11}) {
        const SpecialCase sc = special_case(2, m, SpecialVariant::Plus, true);
        if (!sc.roots_solve || !sc.matches_displayed) {
            return false;
        }
        // the literal (1 + m)/4 with m < 0 misses the product of the roots
        const BigRational literal = BigRational(4 + 2, 1) + (BigRational(1) + BigRational(m)) / BigRational(4);
        if (sc.equation.c() == literal) {
            return false;
        }
    }
    return true;
}

inline bool parity_case_three_confirms()
{
    for (long k = -5; k <= 5; ++k) {
        for (long l = -5; l <= 5; ++l) {
            const long p = 4 * k - 1;
            const long q = 4 * l - 1;
            const long displayed2 = 4 * k + 1 - 4 * l + 1; // twice the displayed value
            if ((p - q) / 2 != 2 * (k - l) || displayed2 == 2 * (2 * (k - l))) {
                return false;
            }
        }
    }
    return true;
}

} // namespace detail

inline const std::vector<ErratumEntry>& errata()
{
    static const std::vector<ErratumEntry> table = {
        {"shift-companion-plus", "curiosities/root-shift companions",
         "x^2 + px - p shifted by 1 has constant -(4p - 1)", "constant 1 - 2p: x^2 - (2 - p)x + (1 - 2p)",
         "Vieta: sum + 2k, product + k*sum + k^2", [] { return detail::shift_companion_confirms(+1); }},
        {"shift-companion-minus", "curiosities/root-shift companions",
         "x^2 - px + p shifted by 1 has constant 4p + 1", "constant 2p + 1: x^2 - (p + 2)x + (2p + 1)",
         "Vieta: sum + 2k, product + k*sum + k^2", [] { return detail::shift_companion_confirms(-1); }},
        {"partner-root", "curiosities/second root", "x2 = -(a x1 + b)/(2a)", "x2 = -(a x1 + b)/a",
         "Vieta sum x1 + x2 = -b/a on 3x^2 - 7x + 2", [] { return detail::partner_root_confirms(); }},
        {"phi-sixth-power", "phi ledger/property 9", "phi^6 = 8 phi + 3", "phi^6 = 8 phi + 5",
         "recurrence phi^n = F_n phi + F_(n-1) in exact Q(sqrt 5)",
         [] {
             const QuadElem phi = golden_ratio();
             return phi.pow(6) == phi * BigRational(8) + BigRational(5) &&
                    phi.pow(6) != phi * BigRational(8) + BigRational(3);
         }},
        {"phi-difference-sign", "phi ledger/differences", "phi^n - conj(phi)^n = -sqrt(5) F_n",
         "phi^n - conj(phi)^n = +sqrt(5) F_n", "exact Q(sqrt 5) ledger for n <= 30",
         [] { return detail::phi_difference_confirms(); }},
        {"case-three-seventh-power", "Fibonacci groups/case III powers", "x^7 = -x^5", "x^7 = -x^4 = x",
         "exact Q(sqrt -3) with x^3 = -1", [] { return detail::case_three_power_confirms(); }},
        {"case-three-sum-mod5", "Fibonacci groups/case III partial sums",
         "sum_{k=1}^{n} x^k = -(x + 1)/x for n = 5 (mod 6)", "sum_{k=1}^{n} x^k = -1 for n = 5 (mod 6)",
         "direct accumulation in Q(sqrt -3) for n <= 200", [] { return detail::case_three_sum_confirms(); }},
        {"power-family-negative-power", "Fibonacci groups/x^b = x - 1 rewriting", "x^(-b) = x^(1-b) - x",
         "x^(-b) = x^(1-b) - 1, so the sum is x^(n+1-b) - x^(-b) - 1",
         "x^(1-b) = x/(x - 1) = 1 + x^(-b) at the real root of x^3 = x - 1",
         [] { return detail::negative_power_confirms(); }},
        {"power-family-third-rewriting", "Fibonacci groups/x^b = x - 1 rewriting", "x^(n-b) - x/(x - 1)",
         "x^(n+1-b) - x/(x - 1)", "direct summation at the real root of x^3 = x - 1, n = 9",
         [] { return detail::third_rewriting_confirms(); }},
        {"congruence-sign", "congruences/completing the square", "r = 4ac - b^2", "r = b^2 - 4ac",
         "(2ax + b)^2 = b^2 - 4ac (mod p) on x^2 + x - 1 mod 11", [] { return detail::congruence_sign_confirms(); }},
        {"perfect-table-x2", "perfect numbers/Elias table", "x1 = 1023 pairs with x2 = -2046/2",
         "x2 = -(3 + 2 x1)/2 = -2049/2", "Vieta on 2x^2 + 3x + 1 - P with P = 2096128",
         [] {
             const BigRational x1(1023);
             const BigRational x2 = elias_partner_root(x1);
             const BigRational P(2096128);
             return x2 == BigRational(-2049, 2) && elias_eval(x2) == P && elias_eval(BigRational(-1023)) != P;
         }},
        {"perfect-divisible-by-16", "perfect numbers/f-generated evens", "f-generated even numbers are divisible by 2^4",
         "6 and 28 are not divisible by 16", "direct remainder",
         [] { return BigInt(6) % 16 != 0 && BigInt(28) % 16 != 0 && elias_eval(BigInt(1)) == 6 && elias_eval(BigInt(3)) == 28; }},
        {"perfect-g-h-naming", "perfect numbers/h(x) = 2x^2 + x",
         "no integer n makes g(n) perfect, with g(x) = 2x^2 + 3x + 1", "the claim holds for h(x) = 2x^2 + x",
         "h(n) for 1 <= n <= 10^4 against the perfect numbers with exponent <= 31; g(1) = 6 is perfect",
         [] { return h_misses_perfect_numbers(10000, 31) && elias_eval(BigInt(1)) == 6; }},
        {"elias-constant-2e-phi", "perfect numbers/irrational combinations", "2(e + phi) = 6.67263163441788017072",
         "2(e + phi) = 8.67263163441788", "double evaluation",
         [] {
             const double v = 2.0 * (std::numbers::e + std::numbers::phi);
             return std::abs(v - 8.67263163441788) < 1e-12 && std::abs(v - 6.67263163441788017072) > 1.0;
         }},
        {"complex-special-constant", "special case/complex variant", "constant k^2 + k + (1 + m)/4 with m < 0",
         "constant k^2 + k + (1 + |m|)/4", "Vieta on (2k + 1 +- sqrt(-|m|))/2",
         [] { return detail::complex_special_confirms(); }},
        {"parity-case-three", "Goldbach/parity lemma, p = 4k - 1, q = 4l - 1", "(p - q)/2 = (4k + 1 - 4l + 1)/2",
         "(p - q)/2 = (4k - 1 - 4l + 1)/2 = 2(k - l)", "enumeration over |k|, |l| <= 5",
         [] { return detail::parity_case_three_confirms(); }},
        {"digital-root-80", "p-numbers/association", "digit sum 80 is assigned 0", "digital root of 80 is 8",
         "iterated digit sum", [] { return digital_root(BigInt(80)) == 8; }},
    };
    return table;
}

inline const ErratumEntry* find_erratum(const std::string& id)
{
    for (const ErratumEntry& e : errata()) {
        if (e.id == id) {
            return &e;
        }
    }
    return nullptr;
}

} // namespace quadratica
