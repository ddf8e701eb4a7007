#pragma once

// The parabola f(x) = 2x^2 + 3x + 1 = (x + 1)(2x + 1) and even perfect
// numbers.
//
// Every even perfect number 2^(p-1)(2^p - 1) equals f(2^(p-1) - 1), and
// 8P + 1 = (2^(p+1) - 1)^2. Areas are computed from exact antiderivatives.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "primes.hpp"
#include "rational.hpp"
#include "solver.hpp"

namespace quadratica {

inline Quadratic elias_parabola()
{
    return Quadratic(2, 3, 1);
}

inline BigRational elias_eval(const BigRational& x)
{
    return elias_parabola().eval(x);
}

inline double elias_eval(double x)
{
    return (2.0 * x + 3.0) * x + 1.0;
}

inline BigInt elias_eval(const BigInt& x)
{
    return (2 * x + 3) * x + 1;
}

/// f(a) - f(b) == (a - b)(2a + 2b + 3)
inline bool elias_difference_identity(const BigRational& a, const BigRational& b)
{
    return elias_eval(a) - elias_eval(b) == (a - b) * (BigRational(2) * a + BigRational(2) * b + BigRational(3));
}

struct PerfectRecord {
    unsigned long exponent;
    BigInt mersenne;
    BigInt value;
    BigInt x1;
    BigRational x2;
    bool mersenne_prime;

    bool perfect() const { return mersenne_prime; }
};

/// x2 = -(3 + 2 x1)/2, the second root of f(x) = P.
inline BigRational elias_partner_root(const BigRational& x1)
{
    return -(BigRational(3) + BigRational(2) * x1) / BigRational(2);
}

inline PerfectRecord perfect_from_exponent(unsigned long p)
{
    if (p < 2) {
        fail(ErrorCode::InvalidArgument, "exponent must be >= 2");
    }
    PerfectRecord r;
    r.exponent = p;
    r.mersenne = pow2(p) - 1;
    r.value = pow2(p - 1) * r.mersenne;
    r.x1 = pow2(p - 1) - 1;
    r.x2 = elias_partner_root(BigRational(r.x1));
    r.mersenne_prime = lucas_lehmer(p);
    return r;
}

/// Records for exponents 2..max_exp in order.
inline std::vector<PerfectRecord> perfect_table(unsigned long max_exp)
{
    std::vector<PerfectRecord> out;
    for (unsigned long p = 2; p <= max_exp; ++p) {
        out.push_back(perfect_from_exponent(p));
    }
    return out;
}

/// Sum of proper divisors by trial division (small inputs only).
inline BigInt proper_divisor_sum(const BigInt& n)
{
    BigInt sum = 0;
    if (n <= 1) {
        return sum;
    }
    sum = 1;
    BigInt d = 2;
    for (; d * d < n; ++d) {
        if (n % d == 0) {
            sum += d + n / d;
        }
    }
    if (d * d == n) {
        sum += d;
    }
    return sum;
}

struct EliasPreimage {
    BigInt x1;
    BigRational x2;
    BigInt slope; // f'(x1) = 4x1 + 3
    bool rederived; // P == (f'(x1)^2 - 1)/8
};

/// Integer x1 with f(x1) = P, when 1 + 8P is a square whose root is 3 mod 4.
inline std::optional<EliasPreimage> elias_preimage(const BigInt& P)
{
    if (P < 1) {
        fail(ErrorCode::InvalidArgument, "P must be >= 1");
    }
    const BigInt disc = 8 * P + 1;
    if (!is_perfect_square(disc)) {
        return std::nullopt;
    }
    const BigInt s = isqrt(disc);
    if (mod_floor(s - 3, BigInt(4)) != 0) {
        return std::nullopt;
    }
    BigInt x1 = (s - 3) / 4;
    BigInt slope = 4 * x1 + 3;
    bool ok = (slope * slope - 1) / 8 == P && elias_eval(x1) == P;
    return EliasPreimage{x1, elias_partner_root(BigRational(x1)), slope, ok};
}

enum class ParityMap { F, H };

/// f(n) = 2n^2 + 3n + 1 flips parity; h(n) = 2n^2 + n preserves it.
inline BigInt parity_map(ParityMap which, const BigInt& n)
{
    return which == ParityMap::F ? elias_eval(n) : (2 * n + 1) * n;
}

inline bool parity_contract_holds(ParityMap which, const BigInt& n)
{
    const bool in_odd = mpz_odd_p(n.get_mpz_t()) != 0;
    const bool out_odd = mpz_odd_p(parity_map(which, n).get_mpz_t()) != 0;
    return which == ParityMap::F ? in_odd != out_odd : in_odd == out_odd;
}

/// Arithmetic series b + (b + d) + ... with n terms.
struct SeriesSpec {
    BigRational b;
    BigRational d;
    long n;
};

struct SeriesForms {
    BigRational direct;
    BigRational sum;         // (d n^2 + (2b - d) n)/2
    BigRational square_form; // ((2dn + 2b - d)^2 - (2b - d)^2)/(8d)
    bool agree;
};

inline SeriesForms series_closed_forms(const SeriesSpec& s)
{
    if (s.n < 1) {
        fail(ErrorCode::InvalidArgument, "series needs n >= 1");
    }
    if (s.d.is_zero()) {
        fail(ErrorCode::ZeroDifference, "square form needs a nonzero difference");
    }
    const BigRational n(s.n);
    BigRational direct = 0;
    for (long i = 0; i < s.n; ++i) {
        direct += s.b + BigRational(i) * s.d;
    }
    const BigRational lead = BigRational(2) * s.b - s.d;
    BigRational sum = (s.d * n * n + lead * n) / BigRational(2);
    BigRational outer = BigRational(2) * s.d * n + lead;
    BigRational square = (outer * outer - lead * lead) / (BigRational(8) * s.d);
    return {direct, sum, square, direct == sum && sum == square};
}

/// Every odd square below `limit`^2 is 1 mod 8.
inline bool odd_squares_one_mod_eight(long limit)
{
    for (long k = 1; k <= limit; k += 2) {
        if ((k * k) % 8 != 1) {
            return false;
        }
    }
    return true;
}

struct SumSquaresReport {
    long n;
    BigInt sum;          // sum_{i=1}^{n} i^2
    BigInt f_n;          // (n + 1)(2n + 1)
    bool closed_form_ok; // sum == n(n+1)(2n+1)/6 == n f(n)/6
    double ratio;        // f(n)/n^2
    /// |f(n)/n^2 - 2| < 3.1/n; only meaningful once n > 10, where the
    /// 1/n^2 term drops below 0.1/n.
    std::optional<bool> asymptotic_ok;
};

inline SumSquaresReport sum_squares_bridge(long n)
{
    if (n < 1) {
        fail(ErrorCode::InvalidArgument, "n must be >= 1");
    }
    SumSquaresReport r;
    r.n = n;
    r.sum = 0;
    for (long i = 1; i <= n; ++i) {
        r.sum += BigInt(i) * i;
    }
    const BigInt nn(n);
    r.f_n = (nn + 1) * (2 * nn + 1);
    r.closed_form_ok = r.sum * 6 == nn * r.f_n;
    r.ratio = r.f_n.get_d() / (static_cast<double>(n) * static_cast<double>(n));
    if (n > 10) {
        r.asymptotic_ok = std::abs(r.ratio - 2.0) < 3.1 / static_cast<double>(n);
    }
    return r;
}

/// floor(sqrt(P/2)) == floor(sqrt((2^(p+1) - 1)^2 - 1)/4) == x1 for a record.
struct PerfectRootCheck {
    BigInt via_half;
    BigInt via_mersenne;
    bool equal_x1;
};

inline PerfectRootCheck perfect_root_check(const PerfectRecord& rec)
{
    const BigInt via_half = isqrt(rec.value / 2);
    const BigInt big_m = pow2(rec.exponent + 1) - 1;
    const BigInt via_mersenne = isqrt(big_m * big_m - 1) / 4;
    return {via_half, via_mersenne, via_half == via_mersenne && via_half == rec.x1};
}

/// Secant, integrals and enclosed areas of f over [a, b].
struct EliasGeometry {
    BigRational a;
    BigRational b;
    BigRational slope;               // 2a + 2b + 3
    BigRational intercept;           // 1 - 2ab
    BigRational chord_integral;      // (b - a)/2 (f(a) + f(b))
    BigRational parabola_integral;   // exact antiderivative
    BigRational displayed_integral;  // (b - a)/6 (2f(a) + 2f(b) + 4ab + 3a + 3b + 2)
    BigRational chord_area;          // chord minus parabola, (b - a)^3/3
    BigRational axis_area;           // integral of |f|
    bool consistent;
};

inline BigRational elias_antiderivative(const BigRational& x)
{
    // 2x^3/3 + 3x^2/2 + x
    return BigRational(2, 3) * x * x * x + BigRational(3, 2) * x * x + x;
}

inline BigRational elias_integral(const BigRational& a, const BigRational& b)
{
    return elias_antiderivative(b) - elias_antiderivative(a);
}

/// Integral of |f| over [a, b], splitting at the roots -1 and -1/2.
inline BigRational elias_axis_area(const BigRational& a, const BigRational& b)
{
    std::vector<BigRational> cuts{a};
    for (const BigRational& r : {BigRational(-1), BigRational(-1, 2)}) {
        if (a < r && r < b) {
            cuts.push_back(r);
        }
    }
    cuts.push_back(b);
    BigRational area = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        area += abs(elias_integral(cuts[i], cuts[i + 1]));
    }
    return area;
}

inline EliasGeometry elias_geometry(const BigRational& a, const BigRational& b)
{
    if (!(a < b)) {
        fail(ErrorCode::EmptyInterval, "need a < b");
    }
    EliasGeometry g;
    g.a = a;
    g.b = b;
    const BigRational fa = elias_eval(a);
    const BigRational fb = elias_eval(b);
    g.slope = BigRational(2) * a + BigRational(2) * b + BigRational(3);
    g.intercept = BigRational(1) - BigRational(2) * a * b;
    const BigRational width = b - a;
    g.chord_integral = width / BigRational(2) * (fa + fb);
    g.parabola_integral = elias_integral(a, b);
    g.displayed_integral = width / BigRational(6) *
                           (BigRational(2) * fa + BigRational(2) * fb + BigRational(4) * a * b + BigRational(3) * a +
                            BigRational(3) * b + BigRational(2));
    g.chord_area = width * width * width / BigRational(3);
    g.axis_area = elias_axis_area(a, b);
    const bool line_ok = g.slope * a + g.intercept == fa && g.slope * b + g.intercept == fb;
    g.consistent = line_ok && g.parabola_integral == g.displayed_integral &&
                   g.chord_integral - g.parabola_integral == g.chord_area;
    return g;
}

/// Candidate forms of x1 on the parabola:
///   x1 = 2^l - 1 -> P = 2^l (2^(l+1) - 1)
///   x1 = 2^l + 1 -> P = 2^l (2^(l+1) + 7) + 6
///   x1 = 2n + 1  -> P = 8n^2 + 14n + 6
inline bool elias_forms_hold(unsigned long l, const BigInt& n)
{
    const BigInt two_l = pow2(l);
    const BigInt two_l1 = pow2(l + 1);
    return elias_eval(BigInt(two_l - 1)) == two_l * (two_l1 - 1) &&
           elias_eval(BigInt(two_l + 1)) == two_l * (two_l1 + 7) + 6 &&
           elias_eval(BigInt(2 * n + 1)) == 8 * n * n + 14 * n + 6;
}

/// h(n) = 2n^2 + n never hits an even perfect number 2^(p-1)(2^p - 1),
/// p <= max_exp, for 0 <= n <= n_max.
inline bool h_misses_perfect_numbers(long n_max, unsigned long max_exp)
{
    std::vector<BigInt> perfects;
    for (const PerfectRecord& r : perfect_table(max_exp)) {
        if (r.perfect()) {
            perfects.push_back(r.value);
        }
    }
    for (long n = 0; n <= n_max; ++n) {
        const BigInt h = parity_map(ParityMap::H, BigInt(n));
        for (const BigInt& p : perfects) {
            if (h == p) {
                return false;
            }
        }
    }
    return true;
}

/// Irrational arguments and combinations with their reference decimals.
struct ConstantEntry {
    std::string expression;
    double reference;
    double computed;
};

inline std::vector<ConstantEntry> elias_constants()
{
    const double pi = 3.14159265358979323846;
    const double e = 2.71828182845904523536;
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return {
        {"f(pi)", 30.1639, elias_eval(pi)},
        {"f(e)", 23.9329, elias_eval(e)},
        {"f(phi)", 11.090, elias_eval(phi)},
        {"pi - e", 0.423310825130748, pi - e},
        {"2(pi + e)", 11.719748964097677, 2 * (pi + e)},
        {"pi - phi", 1.52355866483989838846, pi - phi},
        {"2(pi + phi)", 9.51925328467937617692, 2 * (pi + phi)},
        {"e - phi", 1.10024783970915038536, e - phi},
        {"2(e + phi)", 6.67263163441788017072, 2 * (e + phi)},
        {"2pi + e", 9.0014671356386317, 2 * pi + e},
        {"2e + pi", 8.5781563105078837, 2 * e + pi},
        {"2pi + phi", 7.90121929592948132693, 2 * pi + phi},
        {"2phi + pi", 6.3776606310895829385, 2 * phi + pi},
        {"2e + phi", 7.05459764566798532072, 2 * e + phi},
        {"2phi + e", 5.9543498059588349354, 2 * phi + e},
        {"2pi + 3e", 14.4380307925567222, 2 * pi + 3 * e},
        {"2e + 3pi", 14.8613416176874702, 2 * e + 3 * pi},
        {"2phi + 3pi", 12.6608459382691694154, 2 * phi + 3 * pi},
        {"3phi + 2pi", 11.13728727342927102693, 3 * phi + 2 * pi},
    };
}

} // namespace quadratica
