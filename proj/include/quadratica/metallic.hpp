#pragma once

// Metallic means, the 4n +- 1 radicand families, the golden-ratio
// trigonometric relations and the table of golden-ratio powers.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fibgroup.hpp"
#include "qfield.hpp"
#include "solver.hpp"

namespace quadratica {

/// Positive root of x^2 - p x - q.
struct MetallicEntry {
    std::int64_t p;
    std::int64_t q;
    QuadElem sigma;

    Quadratic equation() const { return Quadratic(1, -p, -q); }
};

inline MetallicEntry metallic(std::int64_t p, std::int64_t q)
{
    if (p < 1 || q < 1) {
        fail(ErrorCode::NonPositiveParameter, "metallic means need p, q >= 1");
    }
    const BigRational disc = BigRational(p) * BigRational(p) + BigRational(4) * BigRational(q);
    QuadElem sigma = (QuadElem::rational(p) + sqrt_rational(disc)) / BigRational(2);
    return {p, q, sigma};
}

enum class RadicandFamily { Real, Complex, NotOdd };

inline const char* radicand_family_name(RadicandFamily f)
{
    switch (f) {
    case RadicandFamily::Real: return "RealFamily";
    case RadicandFamily::Complex: return "ComplexFamily";
    case RadicandFamily::NotOdd: return "NotOdd";
    }
    return "?";
}

/// m = 4n + 1 gives x^2 - x - n with roots (1 +- sqrt m)/2;
/// m = 4n - 1 gives x^2 - x + n with roots (1 +- sqrt(-m))/2.
struct RadicandClass {
    std::int64_t m;
    RadicandFamily family;
    std::int64_t n;
    std::optional<Quadratic> equation;
    std::optional<RootPair> roots;
    bool roots_verified;
    /// Set when m is an odd perfect square: the two integer roots.
    std::optional<std::pair<BigInt, BigInt>> integer_roots;
    /// k with sqrt(m) = 4k + 1, when that parameterization applies.
    std::optional<std::int64_t> k_parameter;
};

inline RadicandClass radicand_classify(std::int64_t m)
{
    if (m < 1) {
        fail(ErrorCode::NonPositiveParameter, "radicand must be >= 1");
    }
    RadicandClass out{m, RadicandFamily::NotOdd, 0, std::nullopt, std::nullopt, false, std::nullopt, std::nullopt};
    if (m % 2 == 0) {
        return out;
    }
    const BigRational half(1, 2);
    QuadElem r1;
    QuadElem r2;
    if (m % 4 == 1) {
        out.family = RadicandFamily::Real;
        out.n = (m - 1) / 4;
        out.equation = Quadratic(1, -1, -out.n);
        const QuadElem root = sqrt_rational(BigRational(m));
        r1 = (QuadElem::rational(1, root.m()) + root) * half;
        r2 = (QuadElem::rational(1, root.m()) - root) * half;
    } else {
        out.family = RadicandFamily::Complex;
        out.n = (m + 1) / 4;
        out.equation = Quadratic(1, -1, out.n);
        const QuadElem root = sqrt_rational(BigRational(-m));
        r1 = (QuadElem::rational(1, root.m()) + root) * half;
        r2 = (QuadElem::rational(1, root.m()) - root) * half;
    }
    out.roots_verified = out.equation->eval(r1).is_zero() && out.equation->eval(r2).is_zero();
    out.roots = solve(*out.equation);
    out.roots_verified = out.roots_verified && ((out.roots->r1 == r1 && out.roots->r2 == r2) ||
                                                (out.roots->r1 == r2 && out.roots->r2 == r1));
    const BigInt mm = big(m);
    if (out.family == RadicandFamily::Real && is_perfect_square(mm)) {
        const BigInt s = isqrt(mm);
        out.integer_roots = std::make_pair(BigInt((1 + s) / 2), BigInt((1 - s) / 2));
        if (s % 4 == 1) {
            out.k_parameter = to_int64(BigInt((s - 1) / 4));
        }
    }
    return out;
}

/// Phi^2 + conj(Phi)^2 for Phi = (1 + sqrt m)/2, evaluated exactly in Q(sqrt m).
inline BigRational creation_equation(std::int64_t m)
{
    const QuadElem phi = QuadElem::make(BigRational(1, 2), BigRational(1, 2), m);
    const QuadElem sum = phi * phi + phi.conj() * phi.conj();
    if (!sum.is_rational()) {
        fail(ErrorCode::InvalidArgument, "creation sum is not rational");
    }
    return sum.a();
}

/// Whether cos(theta) = Phi/2 has a real solution, i.e. Phi real and
/// -2 <= Phi <= 2, decided exactly.
inline bool cos_feasible(std::int64_t m)
{
    if (m < 0) {
        return false;
    }
    const QuadElem phi = QuadElem::make(BigRational(1, 2), BigRational(1, 2), m);
    return (phi - BigRational(2)).sign() <= 0 && (phi + BigRational(2)).sign() >= 0;
}

struct NumericCheck {
    std::string name;
    double residual;
    bool ok;
};

struct GoldenTrigReport {
    std::vector<NumericCheck> checks;
    bool normalization_exact;
    std::size_t quintuple_samples;
    double quintuple_max_residual;
    std::vector<std::int64_t> feasible_m;
    std::vector<std::int64_t> infeasible_m;

    bool ok() const
    {
        bool all = normalization_exact && quintuple_max_residual <= 1e-12;
        for (const auto& c : checks) {
            all = all && c.ok;
        }
        return all;
    }
};

/// Golden-ratio / pi relations. Trigonometric values are compared at 1e-12;
/// the algebraic identities are exact.
inline GoldenTrigReport golden_trig(std::size_t samples = 1000, std::uint64_t seed = 20260521, std::int64_t m_max = 12)
{
    constexpr double kTol = 1e-12;
    constexpr double pi = std::numbers::pi;
    const QuadElem phi = golden_ratio();
    const QuadElem phib = golden_conjugate();
    const double phid = phi.to_double();
    const double phibd = phib.to_double();
    GoldenTrigReport r{};
    auto add = [&r](std::string name, double residual) {
        r.checks.push_back({std::move(name), residual, std::abs(residual) <= kTol});
    };
    add("cos(pi/5) - phi/2", std::cos(pi / 5) - phid / 2);
    add("2cos(pi/5) - phi", 2 * std::cos(pi / 5) - phid);
    add("2cos(2pi/5) - (-1 + sqrt5)/2", 2 * std::cos(2 * pi / 5) - (-1 + std::sqrt(5.0)) / 2);
    add("cos^2(pi/5) - phi^2/4", std::pow(std::cos(pi / 5), 2) - phid * phid / 4);
    add("sin^2(pi/5) - (conj(phi)^2/4 + 1/4)", std::pow(std::sin(pi / 5), 2) - (phibd * phibd / 4 + 0.25));
    add("sin(5 * pi/5)", std::sin(pi));

    const QuadElem lhs = phi * phi / BigRational(4) + phib * phib / BigRational(4) + BigRational(1, 4);
    r.normalization_exact = lhs == BigRational(1) && (phi * phi + phib * phib) == BigRational(3);

    // sin(5t) = 5 sin t - 20 sin^3 t + 16 sin^5 t
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-pi, pi);
    r.quintuple_samples = samples;
    r.quintuple_max_residual = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = i == 0 ? 0.0 : dist(rng);
        const double s = std::sin(t);
        const double rhs = 5 * s - 20 * s * s * s + 16 * s * s * s * s * s;
        r.quintuple_max_residual = std::max(r.quintuple_max_residual, std::abs(std::sin(5 * t) - rhs));
    }

    // Generalized normalization Phi^2/4 + (7 - m)/8 + conj(Phi)^2/4 = 1.
    for (std::int64_t m = 2; m <= m_max; ++m) {
        if (is_perfect_square(big(m))) {
            continue;
        }
        const QuadElem big_phi = QuadElem::make(BigRational(1, 2), BigRational(1, 2), m);
        const QuadElem norm = big_phi * big_phi / BigRational(4) + BigRational(7 - m, 8) +
                              big_phi.conj() * big_phi.conj() / BigRational(4);
        r.normalization_exact = r.normalization_exact && norm == BigRational(1);
        (cos_feasible(m) ? r.feasible_m : r.infeasible_m).push_back(m);
    }
    return r;
}

enum class SpecialVariant { Plus, Minus };

/// Roots x1, x2 = (+-1 + 2k +- sqrt m)/2 and the quadratic they solve.
/// For the complex variant the radicand is -|m|, so the constant term is
/// k^2 +- k + (1 + |m|)/4.
struct SpecialCase {
    Quadratic equation;
    Quadratic displayed;
    QuadElem x1;
    QuadElem x2;
    bool matches_displayed;
    bool roots_solve;
};

inline SpecialCase special_case(std::int64_t k, std::int64_t m, SpecialVariant variant, bool complex)
{
    const std::int64_t radicand = complex ? -(m < 0 ? -m : m) : m;
    const QuadElem root = QuadElem::sqrt_of(radicand);
    const BigRational shift = BigRational(variant == SpecialVariant::Plus ? 1 : -1) + BigRational(2 * k);
    const QuadElem x1 = (QuadElem::rational(shift, root.m()) + root) / BigRational(2);
    const QuadElem x2 = (QuadElem::rational(shift, root.m()) - root) / BigRational(2);
    const QuadElem sum = x1 + x2;
    const QuadElem product = x1 * x2;
    Quadratic eq(1, -sum.a(), product.a());

    const BigRational kk(k);
    const BigRational sign = variant == SpecialVariant::Plus ? 1 : -1;
    const BigRational absm(m < 0 ? -m : m);
    const BigRational tail = complex ? (BigRational(1) + absm) / BigRational(4) : (BigRational(1) - BigRational(m)) / BigRational(4);
    Quadratic displayed(1, -(BigRational(2) * kk + sign), kk * kk + sign * kk + tail);
    return {eq, displayed, x1, x2, sum.is_rational() && product.is_rational() && eq == displayed,
            eq.eval(x1).is_zero() && eq.eval(x2).is_zero()};
}

/// phi^n = coeff*phi + constant; sum = phi^n + conj^n; diff_coeff with
/// phi^n - conj^n = diff_coeff * sqrt 5.
struct PhiLedgerRow {
    long n;
    BigInt coeff;
    BigInt constant;
    BigInt sum;
    BigInt diff_coeff;
    bool verified;
};

inline std::vector<PhiLedgerRow> phi_ledger(long n_max)
{
    if (n_max < 2) {
        fail(ErrorCode::InvalidArgument, "ledger needs n_max >= 2");
    }
    const QuadElem phi = golden_ratio();
    const QuadElem phib = golden_conjugate();
    const QuadElem sqrt5 = QuadElem::sqrt_of(5);
    std::vector<PhiLedgerRow> rows;
    QuadElem pn = phi;
    QuadElem qn = phib;
    for (long n = 2; n <= n_max; ++n) {
        pn *= phi;
        qn *= phib;
        FibPair pair = power_reduce(FibCase::I, n);
        const QuadElem sum = pn + qn;
        const QuadElem diff = pn - qn;
        const BigInt fn = fib_coeff(n);
        const BigInt fn1 = fib_coeff(n - 1);
        const BigInt fn2 = fib_coeff(n - 2);
        const BigInt expected_sum = 3 * fn1 + fn2;
        bool ok = pair.apply(phi) == pn && pair.apply(phib) == qn && sum == BigRational(expected_sum) &&
                  expected_sum == fib_coeff(n + 1) + fn1 && diff == sqrt5 * BigRational(fn);
        rows.push_back({n, pair.coeff, pair.constant, expected_sum, fn, ok});
    }
    return rows;
}

/// One item of the golden-ratio property list.
struct PhiProperty {
    int index;
    std::string displayed;
    std::string derived;
    bool holds;
};

inline std::vector<PhiProperty> phi_properties()
{
    const QuadElem phi = golden_ratio();
    const QuadElem phib = golden_conjugate();
    auto lin = [&phi](long a, long b) { return phi * BigRational(a) + BigRational(b); };
    auto power_str = [](int n, const FibPair& p) {
        return "phi^" + std::to_string(n) + " = " + to_string(p.coeff) + "phi + " + to_string(p.constant);
    };
    std::vector<PhiProperty> out;
    out.push_back({1, "phi + conj(phi) = 1", "phi + conj(phi) = 1", phi + phib == BigRational(1)});
    out.push_back({2, "phi * conj(phi) = -1", "phi * conj(phi) = -1", phi * phib == BigRational(-1)});
    out.push_back({3, "phi^2 + conj(phi)^2 = 3", "phi^2 + conj(phi)^2 = 3", phi * phi + phib * phib == BigRational(3)});
    out.push_back({4, "phi^2 = phi + 1", power_str(2, power_reduce(FibCase::I, 2)), phi.pow(2) == lin(1, 1)});
    out.push_back({5, "phi^2 + phi*conj(phi) = phi", "phi^2 + phi*conj(phi) = phi", phi * phi + phi * phib == phi});
    out.push_back({6, "phi^3 = 2phi + 1", power_str(3, power_reduce(FibCase::I, 3)), phi.pow(3) == lin(2, 1)});
    out.push_back({7, "phi^4 = 3phi + 2", power_str(4, power_reduce(FibCase::I, 4)), phi.pow(4) == lin(3, 2)});
    out.push_back({8, "phi^5 = 5phi + 3", power_str(5, power_reduce(FibCase::I, 5)), phi.pow(5) == lin(5, 3)});
    out.push_back({9, "phi^6 = 8phi + 3", power_str(6, power_reduce(FibCase::I, 6)), phi.pow(6) == lin(8, 3)});
    return out;
}

inline constexpr double kGoldenBracketLow = 1.6;
inline constexpr double kGoldenBracketHigh = 1.7;

inline bool in_golden_bracket(double v)
{
    return kGoldenBracketLow < v && v < kGoldenBracketHigh;
}

inline std::pair<double, double> irrationality_bracket()
{
    if (!in_golden_bracket(golden_ratio().to_double())) {
        fail(ErrorCode::InvalidArgument, "golden ratio outside its bracket");
    }
    return {kGoldenBracketLow, kGoldenBracketHigh};
}

/// Integer-root case: roots 2k + 1 and -2k solve x^2 - x - 2k(2k+1) and the
/// radicand is m = 4n + 1 = (4k + 1)^2.
inline bool integer_root_case_holds(std::int64_t k)
{
    const BigInt n = 2 * big(k) * (2 * big(k) + 1);
    const Quadratic q(1, -1, BigRational(-n));
    const BigInt m = 4 * n + 1;
    return q.eval(BigRational(2 * k + 1)).is_zero() && q.eval(BigRational(-2 * k)).is_zero() &&
           m == (4 * big(k) + 1) * (4 * big(k) + 1);
}

} // namespace quadratica
