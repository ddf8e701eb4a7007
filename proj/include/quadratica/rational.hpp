#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "bigint.hpp"
#include "errors.hpp"

namespace quadratica {

/// Exact rational number, always in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(int v) : value_(static_cast<long>(v)) {}
    BigRational(long v) : value_(v) {}
    BigRational(long long v) : value_(static_cast<long>(v)) {}
    BigRational(const BigInt& v) : value_(v) {}

    BigRational(const BigInt& num, const BigInt& den)
    {
        if (sgn(den) == 0) {
            fail(ErrorCode::DivisionByZero, "zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    BigRational(long long num, long long den) : BigRational(big(num), big(den)) {}

    static BigRational from_mpq(mpq_class v)
    {
        v.canonicalize();
        BigRational r;
        r.value_ = std::move(v);
        return r;
    }

    /// Accepts "p", "p/q" and plain decimals such as "-0.125".
    static BigRational parse(std::string_view text)
    {
        std::string s(text);
        if (s.empty()) {
            fail(ErrorCode::ParseError, "empty rational");
        }
        if (auto slash = s.find('/'); slash != std::string::npos) {
            return BigRational(parse_bigint(s.substr(0, slash)), parse_bigint(s.substr(slash + 1)));
        }
        if (auto dot = s.find('.'); dot != std::string::npos) {
            std::string whole = s.substr(0, dot);
            std::string frac = s.substr(dot + 1);
            bool negative = !whole.empty() && whole.front() == '-';
            if (negative || (!whole.empty() && whole.front() == '+')) {
                whole.erase(0, 1);
            }
            if (whole.empty()) {
                whole = "0";
            }
            if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
                fail(ErrorCode::ParseError, "malformed decimal '" + s + "'");
            }
            BigInt num = parse_bigint(whole + frac);
            BigRational r(num, pow_big(BigInt(10), frac.size()));
            return negative ? -r : r;
        }
        return BigRational(parse_bigint(s));
    }

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    const mpq_class& mpq() const noexcept { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    double to_double() const { return value_.get_d(); }

    /// "p" for integers, otherwise "p/q".
    std::string str() const
    {
        if (is_integer()) {
            return to_string(num());
        }
        return to_string(num()) + "/" + to_string(den());
    }

    BigRational operator-() const { return from_mpq(-value_); }

    BigRational& operator+=(const BigRational& o)
    {
        value_ += o.value_;
        return *this;
    }
    BigRational& operator-=(const BigRational& o)
    {
        value_ -= o.value_;
        return *this;
    }
    BigRational& operator*=(const BigRational& o)
    {
        value_ *= o.value_;
        return *this;
    }
    BigRational& operator/=(const BigRational& o)
    {
        if (o.is_zero()) {
            fail(ErrorCode::DivisionByZero, "rational division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

inline BigRational abs(const BigRational& r)
{
    return r.sign() < 0 ? -r : r;
}

inline BigRational pow(const BigRational& base, long exp)
{
    BigRational result = 1;
    BigRational b = exp < 0 ? BigRational(1) / base : base;
    unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    while (e != 0) {
        if (e & 1UL) {
            result *= b;
        }
        b *= b;
        e >>= 1U;
    }
    return result;
}

/// floor of a rational.
inline BigInt floor(const BigRational& r)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

} // namespace quadratica
