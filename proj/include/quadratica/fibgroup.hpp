#pragma once

// The four equations x^2 = x + 1, x^2 = -x + 1, x^2 = x - 1, x^2 = -x - 1.
//
// Two Fibonacci conventions live here and must not be mixed:
//   - fib(n):      f_0 = f_1 = 1, f_n = f_{n-1} + f_{n-2}   (1, 1, 2, 3, 5, 8, ...)
//   - fib_coeff(n): F_0 = 0, F_1 = 1                      (0, 1, 1, 2, 3, 5, ...)
// so fib(n) == fib_coeff(n + 1). Power reduction x^n = F_n x + F_{n-1} uses
// the second; the telescoping sum of f_{k-2} uses the first.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "qfield.hpp"
#include "solver.hpp"

namespace quadratica {

enum class FibCase { I, II, III, IV };

inline const char* fib_case_name(FibCase c)
{
    switch (c) {
    case FibCase::I: return "I";
    case FibCase::II: return "II";
    case FibCase::III: return "III";
    case FibCase::IV: return "IV";
    }
    return "?";
}

inline FibCase parse_fib_case(const std::string& s)
{
    if (s == "I" || s == "1") return FibCase::I;
    if (s == "II" || s == "2") return FibCase::II;
    if (s == "III" || s == "3") return FibCase::III;
    if (s == "IV" || s == "4") return FibCase::IV;
    fail(ErrorCode::InvalidArgument, "unknown case '" + s + "' (expected I, II, III or IV)");
}

/// f_n with f_0 = f_1 = 1.
inline BigInt fib(long n)
{
    if (n < 0) {
        fail(ErrorCode::NegativeIndex, "index " + std::to_string(n) + " is negative");
    }
    BigInt prev = 1;
    BigInt cur = 1;
    for (long i = 1; i < n; ++i) {
        BigInt next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// F_n with F_0 = 0, F_1 = 1.
inline BigInt fib_coeff(long n)
{
    if (n < 0) {
        fail(ErrorCode::NegativeIndex, "index " + std::to_string(n) + " is negative");
    }
    return n == 0 ? BigInt(0) : fib(n - 1);
}

/// The equation x^2 = s1*x + s0 of each case, as a monic Quadratic.
inline Quadratic fib_equation(FibCase c)
{
    switch (c) {
    case FibCase::I: return Quadratic(1, -1, -1);
    case FibCase::II: return Quadratic(1, 1, -1);
    case FibCase::III: return Quadratic(1, -1, 1);
    case FibCase::IV: return Quadratic(1, 1, 1);
    }
    fail(ErrorCode::InvalidArgument, "unknown case");
}

/// The "+" root of the case's equation, or its conjugate.
inline QuadElem fib_root(FibCase c, bool conjugate = false)
{
    QuadElem r = solve(fib_equation(c)).r1;
    return conjugate ? r.conj() : r;
}

/// x^n = coeff*x + constant for both roots of the case's equation.
struct FibPair {
    BigInt coeff;
    BigInt constant;

    QuadElem apply(const QuadElem& x) const { return x * BigRational(coeff) + BigRational(constant); }
    friend bool operator==(const FibPair&, const FibPair&) = default;
};

inline FibPair power_reduce(FibCase c, long n)
{
    if (n < 1) {
        fail(ErrorCode::NegativeIndex, "power reduction needs n >= 1");
    }
    BigInt fn = fib_coeff(n);
    BigInt fn1 = fib_coeff(n - 1);
    switch (c) {
    case FibCase::I: return {fn, fn1};
    case FibCase::II: {
        // x^n = (-1)^(n+1) F_n x + (-1)^n F_{n-1}
        const bool odd = n % 2 == 1;
        return {odd ? fn : BigInt(-fn), odd ? BigInt(-fn1) : fn1};
    }
    default:
        break;
    }
    fail(ErrorCode::InvalidArgument, "power reduction is defined for cases I and II");
}

/// sum_{k=1}^{n} x^k by direct accumulation.
inline QuadElem partial_power_sum(FibCase c, long n, bool conjugate = false)
{
    const QuadElem x = fib_root(c, conjugate);
    QuadElem term = x;
    QuadElem sum = QuadElem::rational(0, x.m());
    for (long k = 1; k <= n; ++k) {
        sum += term;
        term *= x;
    }
    return sum;
}

/// The case's closed form for sum_{k=1}^{n} x^k:
///   I:   x^{n+2} - x^2
///   II:  (x + 1)(1 - x^n)
///   III: (x^n - 1)/x
///   IV:  -1, 0 or x according to n mod 3
inline QuadElem closed_form_sum(FibCase c, long n, bool conjugate = false)
{
    const QuadElem x = fib_root(c, conjugate);
    const QuadElem one = QuadElem::rational(1, x.m());
    switch (c) {
    case FibCase::I: return x.pow(n + 2) - x.pow(2);
    case FibCase::II: return (x + one) * (one - x.pow(n));
    case FibCase::III: return (x.pow(n) - one) / x;
    case FibCase::IV:
        switch (n % 3) {
        case 0: return QuadElem::rational(0, x.m());
        case 1: return x;
        default: return QuadElem::rational(-1, x.m());
        }
    }
    fail(ErrorCode::InvalidArgument, "unknown case");
}

/// Case III residue table for sum_{k=1}^{n} x^k, keyed by n mod 6, as
/// derived from x^6 = 1 and x^3 = -1:
///   1 -> x, 2 -> (x-2)/x, 3 -> -2/x, 4 -> (-x-1)/x, 5 -> -1, 0 -> 0.
inline QuadElem case_three_residue_value(long n, bool conjugate = false)
{
    const QuadElem x = fib_root(FibCase::III, conjugate);
    const QuadElem one = QuadElem::rational(1, x.m());
    switch (n % 6) {
    case 1: return x;
    case 2: return (x - BigRational(2)) / x;
    case 3: return QuadElem::rational(-2, x.m()) / x;
    case 4: return (-x - one) / x;
    case 5: return -one;
    default: return QuadElem::rational(0, x.m());
    }
}

/// Telescoping identity sum_{k=1}^{n} f_{k-2} = f_n - 1, with f_{-1} = 0.
inline bool fib_telescoping_holds(long n)
{
    BigInt sum = 0;
    for (long k = 1; k <= n; ++k) {
        sum += k - 2 < 0 ? BigInt(0) : fib(k - 2);
    }
    return sum == fib(n) - 1;
}

/// Finite multiplicative group generated by a root of case III or IV.
/// elements[i] = x^(i+1); table[i][j] is the index of elements[i]*elements[j].
struct UnitGroup {
    FibCase which;
    std::vector<QuadElem> elements;
    std::vector<std::vector<std::size_t>> table;
    std::size_t identity;
    std::size_t order;
};

struct GroupAxioms {
    bool closure = false;
    bool identity = false;
    bool inverses = false;
    bool associative = false;
    bool commutative = false;
    bool cyclic = false;

    bool all() const { return closure && identity && inverses && associative && commutative && cyclic; }
};

inline UnitGroup unit_group(FibCase c)
{
    if (c != FibCase::III && c != FibCase::IV) {
        fail(ErrorCode::InvalidArgument, "unit groups exist for cases III and IV only");
    }
    const QuadElem x = fib_root(c);
    UnitGroup g{c, {}, {}, 0, 0};
    QuadElem power = x;
    constexpr std::size_t kMaxOrder = 64;
    while (g.elements.size() < kMaxOrder) {
        g.elements.push_back(power);
        if (power == BigRational(1)) {
            break;
        }
        power *= x;
    }
    g.order = g.elements.size();
    g.identity = g.order - 1;
    auto index_of = [&g](const QuadElem& z) {
        for (std::size_t i = 0; i < g.elements.size(); ++i) {
            if (g.elements[i] == z) {
                return i;
            }
        }
        return g.elements.size();
    };
    g.table.assign(g.order, std::vector<std::size_t>(g.order));
    for (std::size_t i = 0; i < g.order; ++i) {
        for (std::size_t j = 0; j < g.order; ++j) {
            g.table[i][j] = index_of(g.elements[i] * g.elements[j]);
        }
    }
    return g;
}

/// Axiom checks on the exact multiplication table.
inline GroupAxioms check_group(const UnitGroup& g)
{
    GroupAxioms ax;
    const std::size_t n = g.order;
    ax.closure = true;
    for (const auto& row : g.table) {
        for (std::size_t v : row) {
            ax.closure = ax.closure && v < n;
        }
    }
    if (!ax.closure) {
        return ax;
    }
    ax.identity = g.elements[g.identity] == BigRational(1);
    for (std::size_t i = 0; i < n; ++i) {
        ax.identity = ax.identity && g.table[g.identity][i] == i && g.table[i][g.identity] == i;
    }
    ax.inverses = true;
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < n; ++j) {
            found = found || (g.table[i][j] == g.identity && g.table[j][i] == g.identity);
        }
        ax.inverses = ax.inverses && found;
    }
    ax.associative = true;
    ax.commutative = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ax.commutative = ax.commutative && g.table[i][j] == g.table[j][i];
            for (std::size_t k = 0; k < n; ++k) {
                ax.associative = ax.associative && g.table[g.table[i][j]][k] == g.table[i][g.table[j][k]];
            }
        }
    }
    // elements[0] is the root itself; its powers enumerate the group.
    ax.cyclic = true;
    std::size_t cur = 0;
    std::vector<bool> seen(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        seen[cur] = true;
        cur = g.table[cur][0];
    }
    for (bool s : seen) {
        ax.cyclic = ax.cyclic && s;
    }
    return ax;
}

/// Case III: x^{2+6t} = x - 1, x^{4+6t} = -x, x^{6+6t} = 1, together with
/// x^{5+6t} = -(x - 1), x^{7+6t} = x, x^{3+6t} = -1.
/// Case IV: x^{2+3t} = x^2, x^{3+3t} = 1, x^{4+3t} = x.
inline bool power_cycle_identities(FibCase c, long t_max)
{
    for (bool conjugate : {false, true}) {
        const QuadElem x = fib_root(c, conjugate);
        const QuadElem one = QuadElem::rational(1, x.m());
        for (long t = 0; t <= t_max; ++t) {
            bool ok = true;
            if (c == FibCase::III) {
                ok = x.pow(2 + 6 * t) == x - one && x.pow(5 + 6 * t) == -(x - one) && x.pow(4 + 6 * t) == -x &&
                     x.pow(7 + 6 * t) == x && x.pow(6 + 6 * t) == one && x.pow(3 + 6 * t) == -one;
            } else if (c == FibCase::IV) {
                ok = x.pow(2 + 3 * t) == x * x && x.pow(3 + 3 * t) == one && x.pow(4 + 3 * t) == x;
            } else {
                fail(ErrorCode::InvalidArgument, "power cycles exist for cases III and IV only");
            }
            if (!ok) {
                return false;
            }
        }
    }
    return true;
}

/// sum_{k=1}^{n} x^k == x(x^n - 1)/(x - 1), exactly.
inline bool geometric_sum_check(const QuadElem& x, long n)
{
    const QuadElem one = QuadElem::rational(1, x.m());
    if (x == one) {
        fail(ErrorCode::UnitRatio, "ratio x = 1");
    }
    QuadElem sum = QuadElem::rational(0, x.m());
    QuadElem term = x;
    for (long k = 1; k <= n; ++k) {
        sum += term;
        term *= x;
    }
    return sum == x * (x.pow(n) - one) / (x - one);
}

/// Floating-point version; relative tolerance `tol`.
inline bool geometric_sum_check(std::complex<double> x, long n, double tol = 1e-12)
{
    if (x == std::complex<double>(1.0, 0.0)) {
        fail(ErrorCode::UnitRatio, "ratio x = 1");
    }
    std::complex<double> sum = 0.0;
    std::complex<double> term = x;
    for (long k = 1; k <= n; ++k) {
        sum += term;
        term *= x;
    }
    std::complex<double> closed = x * (std::pow(x, static_cast<double>(n)) - 1.0) / (x - 1.0);
    return std::abs(sum - closed) <= tol * std::max(1.0, std::abs(closed));
}

/// Equations x^b = x + 1, x^b = 1 - x and x^b = x - 1.
enum class PowerFamily { XPlusOne, OneMinusX, XMinusOne };

inline const char* power_family_name(PowerFamily f)
{
    switch (f) {
    case PowerFamily::XPlusOne: return "x^b = x + 1";
    case PowerFamily::OneMinusX: return "x^b = 1 - x";
    case PowerFamily::XMinusOne: return "x^b = x - 1";
    }
    return "?";
}

inline double power_family_residual(PowerFamily f, long b, double x)
{
    const double xb = std::pow(x, static_cast<double>(b));
    switch (f) {
    case PowerFamily::XPlusOne: return xb - x - 1.0;
    case PowerFamily::OneMinusX: return xb - 1.0 + x;
    case PowerFamily::XMinusOne: return xb - x + 1.0;
    }
    return 0.0;
}

/// A real root of the family's equation by bisection, found by scanning
/// [-4, 4] for the first sign change.
inline double power_family_real_root(PowerFamily f, long b, double tol = 1e-15)
{
    constexpr int kSteps = 800;
    double lo = -4.0;
    double flo = power_family_residual(f, b, lo);
    for (int i = 1; i <= kSteps; ++i) {
        double hi = -4.0 + 8.0 * i / kSteps;
        double fhi = power_family_residual(f, b, hi);
        if (flo == 0.0) {
            return lo;
        }
        if ((flo < 0.0) != (fhi < 0.0)) {
            for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
                double mid = 0.5 * (lo + hi);
                double fmid = power_family_residual(f, b, mid);
                if ((fmid < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fmid;
                } else {
                    hi = mid;
                }
            }
            return 0.5 * (lo + hi);
        }
        lo = hi;
        flo = fhi;
    }
    fail(ErrorCode::InvalidArgument, std::string("no real root in [-4, 4] for ") + power_family_name(f));
}

/// One rewriting of sum_{k=1}^{n} x^k for a root of a power family,
/// evaluated numerically against direct summation.
struct SumRewriting {
    std::string label;
    double value;
    bool matches;
};

/// Evaluates every x^{1-b} rewriting of the partial sum at a real root:
///   x^b = x + 1:  x(x^n - 1)/(x - 1)
///   x^b = 1 - x:  x^{1-b}(1 - x^n)
///   x^b = x - 1:  x^{1-b}(x^n - 1), x(x^n - 1)/(x - 1),
///                 x^{n+1-b} - x^{-b} - 1 and x^{n+1-b} - x/(x - 1)
inline std::vector<SumRewriting> power_family_sums(PowerFamily f, long b, long n, double tol = 1e-10)
{
    const double x = power_family_real_root(f, b);
    double direct = 0.0;
    for (long k = 1; k <= n; ++k) {
        direct += std::pow(x, static_cast<double>(k));
    }
    auto p = [x](double e) { return std::pow(x, e); };
    const double nb = static_cast<double>(n);
    const double bb = static_cast<double>(b);
    std::vector<std::pair<std::string, double>> forms;
    forms.emplace_back("geometric x(x^n - 1)/(x - 1)", x * (p(nb) - 1.0) / (x - 1.0));
    switch (f) {
    case PowerFamily::XPlusOne: break;
    case PowerFamily::OneMinusX: forms.emplace_back("x^(1-b)(1 - x^n)", p(1.0 - bb) * (1.0 - p(nb))); break;
    case PowerFamily::XMinusOne:
        forms.emplace_back("x^(1-b)(x^n - 1)", p(1.0 - bb) * (p(nb) - 1.0));
        forms.emplace_back("x^(n+1-b) - x^(-b) - 1", p(nb + 1.0 - bb) - p(-bb) - 1.0);
        forms.emplace_back("x^(n+1-b) - x/(x - 1)", p(nb + 1.0 - bb) - x / (x - 1.0));
        break;
    }
    std::vector<SumRewriting> out;
    for (auto& [label, value] : forms) {
        out.push_back({label, value, std::abs(value - direct) <= tol * std::max(1.0, std::abs(direct))});
    }
    out.insert(out.begin(), {"direct sum", direct, true});
    return out;
}

} // namespace quadratica
