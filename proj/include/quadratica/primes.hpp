#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace quadratica {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

// The first twelve prime bases make Miller-Rabin deterministic below 3.3e24,
// which covers every 64-bit input.
inline constexpr std::array<std::uint64_t, 12> kMillerRabinBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Extra bases used only above 64 bits, where the test is probabilistic.
inline constexpr std::array<unsigned long, 8> kExtraBases = {41, 43, 47, 53, 59, 61, 67, 71};

} // namespace detail

inline bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : detail::kMillerRabinBases) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : detail::kMillerRabinBases) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

inline bool is_prime(const BigInt& n)
{
    if (sgn(n) <= 0) {
        return false;
    }
    if (fits_uint64(n)) {
        return is_prime_u64(to_uint64(n));
    }
    if (mpz_even_p(n.get_mpz_t()) != 0) {
        return false;
    }
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    const BigInt n_minus_1 = n - 1;

    auto witness_passes = [&](unsigned long base) {
        BigInt x = powmod(BigInt(base), d, n);
        if (x == 1 || x == n_minus_1) {
            return true;
        }
        for (unsigned long r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n_minus_1) {
                return true;
            }
        }
        return false;
    };
    for (std::uint64_t a : detail::kMillerRabinBases) {
        if (!witness_passes(static_cast<unsigned long>(a))) {
            return false;
        }
    }
    for (unsigned long a : detail::kExtraBases) {
        if (!witness_passes(a)) {
            return false;
        }
    }
    return true;
}

/// Sieve of Eratosthenes over the odd numbers up to `limit`. Immutable after
/// construction, so one instance may be shared read-only across threads.
class PrimeSieve {
public:
    explicit PrimeSieve(std::uint64_t limit) : limit_(limit), odd_composite_(limit / 2 + 1, false)
    {
        for (std::uint64_t i = 3; i * i <= limit_; i += 2) {
            if (odd_composite_[i / 2]) {
                continue;
            }
            for (std::uint64_t j = i * i; j <= limit_; j += 2 * i) {
                odd_composite_[j / 2] = true;
            }
        }
    }

    std::uint64_t limit() const noexcept { return limit_; }

    /// Falls back to Miller-Rabin above the sieve limit.
    bool is_prime(std::uint64_t n) const
    {
        if (n > limit_) {
            return is_prime_u64(n);
        }
        if (n < 2) {
            return false;
        }
        if (n % 2 == 0) {
            return n == 2;
        }
        return !odd_composite_[n / 2];
    }

    std::vector<std::uint64_t> primes() const
    {
        std::vector<std::uint64_t> out;
        for (std::uint64_t n = 2; n <= limit_; ++n) {
            if (is_prime(n)) {
                out.push_back(n);
            }
        }
        return out;
    }

private:
    std::uint64_t limit_;
    std::vector<bool> odd_composite_;
};

/// Lucas-Lehmer test for 2^p - 1. Composite exponents give composite
/// Mersenne numbers and return false without running the recurrence.
inline bool lucas_lehmer(unsigned long p)
{
    if (p == 2) {
        return true;
    }
    if (!is_prime_u64(p)) {
        return false;
    }
    const BigInt mersenne = pow2(p) - 1;
    BigInt s = 4;
    for (unsigned long i = 0; i < p - 2; ++i) {
        s = s * s - 2;
        s = mod_floor(s, mersenne);
    }
    return sgn(s) == 0;
}

struct SquarefreeSplit {
    BigInt square_root; // s in n = s^2 * core
    BigInt core;        // squarefree, carries the sign of n
};

/// Writes n = s^2 * core with core squarefree.
///
/// Trial division runs up to the cube root of the cofactor; what remains then
/// has at most two prime factors and is squarefree unless it is a perfect
/// square. Inputs whose cube root exceeds the trial bound are still handled
/// when the cofactor is 1, a square or prime; otherwise RadicandTooLarge.
inline SquarefreeSplit squarefree_split(const BigInt& n)
{
    if (sgn(n) == 0) {
        return {BigInt(0), BigInt(0)};
    }
    constexpr unsigned long kTrialBound = 2000000;
    BigInt rest = abs(n);
    BigInt s = 1;
    BigInt core = 1;

    auto strip = [&](unsigned long d) {
        unsigned exponent = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
            ++exponent;
        }
        for (unsigned e = 0; e + 1 < exponent; e += 2) {
            s *= d;
        }
        if (exponent % 2 == 1) {
            core *= d;
        }
    };

    strip(2);
    unsigned long d = 3;
    for (; d <= kTrialBound; d += 2) {
        BigInt cube = BigInt(d) * d * d;
        if (cube > rest) {
            break;
        }
        strip(d);
    }
    const bool complete = d <= kTrialBound || BigInt(d) * d * d > rest;
    if (rest != 1) {
        if (is_perfect_square(rest)) {
            s *= isqrt(rest);
        } else if (complete || is_prime(rest)) {
            core *= rest;
        } else {
            fail(ErrorCode::RadicandTooLarge, "cannot certify squarefree part of " + to_string(n));
        }
    }
    if (sgn(n) < 0) {
        core = -core;
    }
    return {s, core};
}

} // namespace quadratica
