#pragma once

// Exact arithmetic in quadratic fields Q(sqrt m).
//
// A QuadElem is a + b*sqrt(m) with rational a, b and a squarefree integer
// radicand m (m != 0, 1). Negative radicands are allowed; sqrt(-1) plays the
// role of the imaginary unit and the numeric embedding maps into C.
//
// Elements whose radical coefficient is zero are plain rationals and combine
// with elements of any radicand. Two irrational operands must share m.

#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"
#include "primes.hpp"
#include "rational.hpp"

namespace quadratica {

/// Radicand carried by purely rational values that were not built from a
/// specific field. It never participates in arithmetic because b == 0.
inline constexpr std::int64_t kRationalRadicand = -1;

class QuadElem {
public:
    QuadElem() : a_(0), b_(0), m_(kRationalRadicand) {}

    /// Canonicalizing constructor: square factors of m move into b.
    static QuadElem make(const BigRational& a, const BigRational& b, const BigInt& m)
    {
        if (sgn(m) == 0 || m == 1 || is_perfect_square(m)) {
            fail(ErrorCode::PerfectSquareRadicand, "radicand " + to_string(m) + " is a perfect square");
        }
        SquarefreeSplit split = squarefree_split(m);
        if (!fits_int64(split.core)) {
            fail(ErrorCode::RadicandTooLarge, "squarefree radicand " + to_string(split.core) + " exceeds 64 bits");
        }
        return QuadElem(a, b * BigRational(split.square_root), to_int64(split.core));
    }

    static QuadElem make(const BigRational& a, const BigRational& b, std::int64_t m) { return make(a, b, big(m)); }

    static QuadElem rational(const BigRational& a, std::int64_t m = kRationalRadicand) { return QuadElem(a, 0, m); }

    /// sqrt(m), with m canonicalized.
    static QuadElem sqrt_of(std::int64_t m) { return make(0, 1, m); }

    const BigRational& a() const noexcept { return a_; }
    const BigRational& b() const noexcept { return b_; }
    std::int64_t m() const noexcept { return m_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    /// True when the numeric embedding is real.
    bool is_real() const { return m_ > 0 || b_.is_zero(); }

    QuadElem conj() const { return QuadElem(a_, -b_, m_); }
    BigRational norm() const { return a_ * a_ - BigRational(m_) * b_ * b_; }

    QuadElem inverse() const
    {
        if (is_zero()) {
            fail(ErrorCode::DivisionByZero, "inverse of zero");
        }
        BigRational n = norm();
        return QuadElem(a_ / n, -b_ / n, m_);
    }

    QuadElem pow(long exp) const
    {
        QuadElem base = exp < 0 ? inverse() : *this;
        unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
        QuadElem result = rational(1, m_);
        while (e != 0) {
            if (e & 1UL) {
                result *= base;
            }
            base *= base;
            e >>= 1U;
        }
        return result;
    }

    std::complex<double> to_complex() const
    {
        const double root = std::sqrt(static_cast<double>(m_ < 0 ? -m_ : m_));
        if (b_.is_zero()) {
            return {a_.to_double(), 0.0};
        }
        if (m_ > 0) {
            return {a_.to_double() + b_.to_double() * root, 0.0};
        }
        return {a_.to_double(), b_.to_double() * root};
    }

    double to_double() const
    {
        if (!is_real()) {
            fail(ErrorCode::InvalidArgument, "element " + str() + " is not real");
        }
        return to_complex().real();
    }

    /// Exact sign of a real element.
    int sign() const
    {
        if (!is_real()) {
            fail(ErrorCode::InvalidArgument, "sign of non-real element " + str());
        }
        const int sa = a_.sign();
        const int sb = b_.sign();
        if (sb == 0 || sa == sb) {
            return sa != 0 ? sa : sb;
        }
        if (sa == 0) {
            return sb;
        }
        // a and b*sqrt(m) have opposite signs; the larger magnitude wins.
        auto cmp = a_ * a_ <=> BigRational(m_) * b_ * b_;
        if (cmp == 0) {
            return 0;
        }
        return cmp > 0 ? sa : sb;
    }

    /// Canonical text "a + b√m" (or "a - b√m"); parse() inverts it exactly.
    std::string str() const
    {
        std::string out = a_.str();
        out += b_.sign() < 0 ? " - " : " + ";
        out += abs(b_).str();
        out += "√";
        out += std::to_string(m_);
        return out;
    }

    /// Parses the canonical form. "sqrt(m)" and "sqrt m" are accepted in place
    /// of "√m"; a bare rational parses to a rational element.
    static QuadElem parse(std::string_view text);

    QuadElem operator-() const { return QuadElem(-a_, -b_, m_); }

    QuadElem& operator+=(const QuadElem& o)
    {
        const std::int64_t m = common_radicand(*this, o);
        a_ += o.a_;
        b_ += o.b_;
        m_ = m;
        return *this;
    }

    QuadElem& operator-=(const QuadElem& o) { return *this += -o; }

    QuadElem& operator*=(const QuadElem& o)
    {
        const std::int64_t m = common_radicand(*this, o);
        BigRational a = a_ * o.a_ + b_ * o.b_ * BigRational(m);
        BigRational b = b_ * o.a_ + a_ * o.b_;
        a_ = std::move(a);
        b_ = std::move(b);
        m_ = m;
        return *this;
    }

    QuadElem& operator/=(const QuadElem& o)
    {
        if (o.is_zero()) {
            fail(ErrorCode::DivisionByZero, "division by zero element");
        }
        common_radicand(*this, o);
        return *this *= o.inverse();
    }

    friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
    friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
    friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
    friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }

    friend QuadElem operator+(QuadElem x, const BigRational& r) { return x += rational(r); }
    friend QuadElem operator-(QuadElem x, const BigRational& r) { return x -= rational(r); }
    friend QuadElem operator*(QuadElem x, const BigRational& r) { return x *= rational(r); }
    friend QuadElem operator/(QuadElem x, const BigRational& r) { return x /= rational(r); }
    friend QuadElem operator+(const BigRational& r, const QuadElem& x) { return rational(r) + x; }
    friend QuadElem operator-(const BigRational& r, const QuadElem& x) { return rational(r) - x; }
    friend QuadElem operator*(const BigRational& r, const QuadElem& x) { return rational(r) * x; }
    friend QuadElem operator/(const BigRational& r, const QuadElem& x) { return rational(r) / x; }

    /// Structural equality on canonical form. The radicand is ignored when
    /// both radical coefficients vanish.
    friend bool operator==(const QuadElem& x, const QuadElem& y)
    {
        if (x.a_ != y.a_ || x.b_ != y.b_) {
            return false;
        }
        return x.b_.is_zero() || x.m_ == y.m_;
    }

    friend bool operator==(const QuadElem& x, const BigRational& r) { return x.b_.is_zero() && x.a_ == r; }

    friend std::ostream& operator<<(std::ostream& os, const QuadElem& z) { return os << z.str(); }

private:
    QuadElem(BigRational a, BigRational b, std::int64_t m) : a_(std::move(a)), b_(std::move(b)), m_(m) {}

    static std::int64_t common_radicand(const QuadElem& x, const QuadElem& y)
    {
        if (y.b_.is_zero()) {
            return x.m_;
        }
        if (x.b_.is_zero() || x.m_ == y.m_) {
            return y.m_;
        }
        fail(ErrorCode::MixedRadicands,
             "radicands " + std::to_string(x.m_) + " and " + std::to_string(y.m_) + " do not share a field");
    }

    BigRational a_;
    BigRational b_;
    std::int64_t m_;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace detail

inline QuadElem QuadElem::parse(std::string_view text)
{
    const std::string original(text);
    std::string_view s = detail::trim(text);
    std::string_view root_token;
    std::size_t root_pos = s.find("√");
    std::size_t root_len = std::string_view("√").size();
    if (root_pos == std::string_view::npos) {
        root_pos = s.find("sqrt");
        root_len = 4;
    }
    if (root_pos == std::string_view::npos) {
        return rational(BigRational::parse(s));
    }

    std::string radicand(detail::trim(s.substr(root_pos + root_len)));
    if (!radicand.empty() && radicand.front() == '(') {
        if (radicand.back() != ')') {
            fail(ErrorCode::ParseError, "unbalanced parenthesis in '" + original + "'");
        }
        radicand = std::string(detail::trim(std::string_view(radicand).substr(1, radicand.size() - 2)));
    }
    std::string head;
    for (char ch : s.substr(0, root_pos)) {
        if (ch != ' ' && ch != '\t') {
            head += ch;
        }
    }
    if (!head.empty() && head.back() == '*') {
        head.pop_back();
    }

    // "a + b" / "a - b": split at the last sign that is not the leading one
    BigRational a = 0;
    std::string coeff;
    const std::size_t split = head.find_last_of("+-");
    if (split == std::string::npos || split == 0) {
        coeff = head;
    } else {
        a = BigRational::parse(head.substr(0, split));
        coeff = head.substr(split);
    }
    BigRational b;
    if (coeff.empty() || coeff == "+") {
        b = 1;
    } else if (coeff == "-") {
        b = -1;
    } else {
        b = BigRational::parse(coeff);
    }
    BigInt m = parse_bigint(radicand);
    QuadElem z = make(a, b, m);
    return z;
}

/// Conjugate and norm together; the norm is always rational.
inline std::pair<QuadElem, BigRational> conj_norm(const QuadElem& z)
{
    return {z.conj(), z.norm()};
}

/// Both solutions of x^2 = m inside Q(sqrt m).
inline std::pair<QuadElem, QuadElem> sqrt_solution(std::int64_t m)
{
    QuadElem root = QuadElem::sqrt_of(m);
    return {root, -root};
}

/// Additive coordinates (a, b). Linear, not multiplicative.
inline std::pair<BigRational, BigRational> coords(const QuadElem& z)
{
    return {z.a(), z.b()};
}

enum class ArithOp { Add, Sub, Mul, Div };

inline QuadElem arith(ArithOp op, const QuadElem& z, const QuadElem& w)
{
    switch (op) {
    case ArithOp::Add: return z + w;
    case ArithOp::Sub: return z - w;
    case ArithOp::Mul: return z * w;
    case ArithOp::Div: return z / w;
    }
    fail(ErrorCode::InvalidArgument, "unknown arithmetic operation");
}

/// Exact square root of a rational, living in Q(sqrt core) where core is the
/// squarefree part of num*den; purely rational when that core is 1.
inline QuadElem sqrt_rational(const BigRational& r)
{
    if (r.is_zero()) {
        return QuadElem::rational(0);
    }
    const BigInt nd = r.num() * r.den();
    SquarefreeSplit split = squarefree_split(nd);
    BigRational scale(split.square_root, r.den());
    if (split.core == 1) {
        return QuadElem::rational(scale);
    }
    if (!fits_int64(split.core)) {
        fail(ErrorCode::RadicandTooLarge, "squarefree radicand " + to_string(split.core) + " exceeds 64 bits");
    }
    return QuadElem::make(0, scale, split.core);
}

/// The golden ratio (1 + sqrt 5)/2 and its conjugate.
inline QuadElem golden_ratio()
{
    return QuadElem::make(BigRational(1, 2), BigRational(1, 2), 5);
}

inline QuadElem golden_conjugate()
{
    return golden_ratio().conj();
}

} // namespace quadratica
