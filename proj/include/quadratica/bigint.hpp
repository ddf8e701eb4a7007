#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace quadratica {

using BigInt = mpz_class;

inline BigInt big(std::int64_t v)
{
    return BigInt(static_cast<long>(v));
}

inline std::string to_string(const BigInt& v)
{
    return v.get_str(10);
}

inline BigInt parse_bigint(std::string_view text)
{
    std::string s(text);
    if (!s.empty() && s.front() == '+') {
        s.erase(0, 1);
    }
    if (s.empty()) {
        fail(ErrorCode::ParseError, "empty integer");
    }
    std::size_t start = s.front() == '-' ? 1 : 0;
    if (start == s.size()) {
        fail(ErrorCode::ParseError, "malformed integer '" + std::string(text) + "'");
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            fail(ErrorCode::ParseError, "malformed integer '" + std::string(text) + "'");
        }
    }
    return BigInt(s, 10);
}

inline bool fits_int64(const BigInt& v)
{
    static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()), 10);
    static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()), 10);
    return v >= lo && v <= hi;
}

inline std::int64_t to_int64(const BigInt& v)
{
    if (!fits_int64(v)) {
        fail(ErrorCode::InvalidArgument, "integer " + to_string(v) + " exceeds 64 bits");
    }
    return static_cast<std::int64_t>(v.get_si());
}

inline bool fits_uint64(const BigInt& v)
{
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_uint64(const BigInt& v)
{
    if (!fits_uint64(v)) {
        fail(ErrorCode::InvalidArgument, "integer " + to_string(v) + " is not an unsigned 64-bit value");
    }
    // mpz_get_ui is 64-bit on LP64 targets
    return static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

inline BigInt from_uint64(std::uint64_t v)
{
    BigInt r;
    mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
    return r;
}

/// floor(sqrt(n)) for n >= 0.
inline BigInt isqrt(const BigInt& n)
{
    if (sgn(n) < 0) {
        fail(ErrorCode::InvalidArgument, "isqrt of negative integer");
    }
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const BigInt& n)
{
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline BigInt pow_big(const BigInt& base, unsigned long exp)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt pow2(unsigned long exp)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, exp);
    return r;
}

inline BigInt gcd_big(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Least non-negative residue of a modulo m (m > 0).
inline BigInt mod_floor(const BigInt& a, const BigInt& m)
{
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline BigInt powmod(const BigInt& base, const BigInt& exp, const BigInt& mod)
{
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

} // namespace quadratica
