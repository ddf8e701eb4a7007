#pragma once

// Quadratic congruences modulo a prime.
//
// ax^2 + bx + c = 0 (mod p) is reduced with u = 2ax + b to
// u^2 = b^2 - 4ac (mod p). Square roots use Tonelli-Shanks with the
// p = 3 (mod 4) shortcut; sums of two squares use Cornacchia's reduction.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "primes.hpp"

namespace quadratica {

/// A prime modulus. Construction rejects composites; operations that need an
/// odd prime reject 2 with EvenModulusUnsupported.
class PrimeModulus {
public:
    explicit PrimeModulus(BigInt p) : p_(std::move(p))
    {
        if (!is_prime(p_)) {
            fail(ErrorCode::CompositeModulus, to_string(p_) + " is not prime");
        }
    }

    explicit PrimeModulus(long p) : PrimeModulus(BigInt(p)) {}

    const BigInt& value() const noexcept { return p_; }
    bool is_odd() const { return p_ != 2; }

    void require_odd() const
    {
        if (!is_odd()) {
            fail(ErrorCode::EvenModulusUnsupported, "modulus 2 is not supported here");
        }
    }

private:
    BigInt p_;
};

enum class CongruenceKind { TwoRoots, OneRoot, NoSolution };

inline const char* congruence_kind_name(CongruenceKind k)
{
    switch (k) {
    case CongruenceKind::TwoRoots: return "TwoRoots";
    case CongruenceKind::OneRoot: return "OneRoot";
    case CongruenceKind::NoSolution: return "NoSolution";
    }
    return "?";
}

/// Roots are distinct residues in [0, p), ascending.
struct CongruenceSolution {
    CongruenceKind kind;
    std::vector<BigInt> roots;
};

/// Euler's criterion r^((p-1)/2) mod p, mapped to +1, -1 or 0.
inline int legendre(const BigInt& r, const PrimeModulus& pm)
{
    pm.require_odd();
    const BigInt& p = pm.value();
    const BigInt a = mod_floor(r, p);
    if (sgn(a) == 0) {
        return 0;
    }
    const BigInt e = powmod(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

namespace detail {

inline BigInt tonelli_shanks(const BigInt& a, const BigInt& p)
{
    if (mod_floor(p, BigInt(4)) == 3) {
        return powmod(a, (p + 1) / 4, p);
    }
    // p - 1 = q * 2^s with q odd
    BigInt q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

    BigInt z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) {
        ++z;
    }
    BigInt c = powmod(z, q, p);
    BigInt x = powmod(a, (q + 1) / 2, p);
    BigInt t = powmod(a, q, p);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        BigInt t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        BigInt b = powmod(c, pow2(m - i - 1), p);
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

} // namespace detail

/// All solutions of u^2 = r (mod p).
inline CongruenceSolution sqrt_mod(const BigInt& r, const PrimeModulus& pm)
{
    const int symbol = legendre(r, pm);
    const BigInt& p = pm.value();
    if (symbol == 0) {
        return {CongruenceKind::OneRoot, {BigInt(0)}};
    }
    if (symbol < 0) {
        return {CongruenceKind::NoSolution, {}};
    }
    BigInt x = detail::tonelli_shanks(mod_floor(r, p), p);
    BigInt y = p - x;
    if (y < x) {
        std::swap(x, y);
    }
    return {CongruenceKind::TwoRoots, {x, y}};
}

inline BigInt inverse_mod(const BigInt& a, const BigInt& p)
{
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) {
        fail(ErrorCode::DivisionByZero, to_string(a) + " is not invertible modulo " + to_string(p));
    }
    return inv;
}

/// ax^2 + bx + c = 0 (mod p) for an odd prime p not dividing a.
inline CongruenceSolution solve_quad_mod(const BigInt& a, const BigInt& b, const BigInt& c, const PrimeModulus& pm)
{
    pm.require_odd();
    const BigInt& p = pm.value();
    if (sgn(mod_floor(a, p)) == 0) {
        fail(ErrorCode::DegenerateLeading, "modulus divides the leading coefficient");
    }
    const BigInt disc = b * b - 4 * a * c;
    CongruenceSolution us = sqrt_mod(disc, pm);
    const BigInt inv_2a = inverse_mod(mod_floor(2 * a, p), p);
    std::vector<BigInt> xs;
    for (const BigInt& u : us.roots) {
        xs.push_back(mod_floor((u - b) * inv_2a, p));
    }
    std::sort(xs.begin(), xs.end());
    return {us.kind, xs};
}

/// a^2 + b^2 = p with a <= b, for p = 2 or p = 1 (mod 4).
inline std::pair<BigInt, BigInt> two_squares(const PrimeModulus& pm)
{
    const BigInt& p = pm.value();
    if (p == 2) {
        return {BigInt(1), BigInt(1)};
    }
    if (mod_floor(p, BigInt(4)) != 1) {
        fail(ErrorCode::NotRepresentable, to_string(p) + " = 3 (mod 4) is not a sum of two squares");
    }
    // Cornacchia: run Euclid on (p, x0) with x0^2 = -1 (mod p) until the
    // remainder drops below sqrt(p).
    CongruenceSolution roots = sqrt_mod(BigInt(-1), pm);
    BigInt r0 = p;
    BigInt r1 = roots.roots.back();
    const BigInt bound = isqrt(p);
    while (r1 > bound) {
        BigInt next = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(next);
    }
    BigInt a = r1;
    BigInt rest = p - a * a;
    if (!is_perfect_square(rest)) {
        fail(ErrorCode::NotRepresentable, "Cornacchia reduction failed for " + to_string(p));
    }
    BigInt b = isqrt(rest);
    if (b < a) {
        std::swap(a, b);
    }
    return {a, b};
}

} // namespace quadratica
