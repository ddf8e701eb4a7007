#pragma once

// Exact solving and classification of ax^2 + bx + c.
//
// Roots are returned as QuadElem values in Q(sqrt d), d the squarefree part of
// the discriminant, or as plain rationals when the discriminant is a rational
// square. No floating point is used here.

#include <array>
#include <string>
#include <utility>

#include "errors.hpp"
#include "qfield.hpp"
#include "rational.hpp"

namespace quadratica {

class Quadratic {
public:
    Quadratic(BigRational a, BigRational b, BigRational c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c))
    {
        if (a_.is_zero()) {
            fail(ErrorCode::DegenerateLeadingCoefficient, "leading coefficient is zero");
        }
    }

    const BigRational& a() const noexcept { return a_; }
    const BigRational& b() const noexcept { return b_; }
    const BigRational& c() const noexcept { return c_; }

    BigRational discriminant() const { return b_ * b_ - BigRational(4) * a_ * c_; }

    BigRational eval(const BigRational& x) const { return (a_ * x + b_) * x + c_; }
    QuadElem eval(const QuadElem& x) const { return (x * a_ + b_) * x + c_; }
    double eval(double x) const { return (a_.to_double() * x + b_.to_double()) * x + c_.to_double(); }

    /// f'(x) = 2ax + b
    QuadElem derivative(const QuadElem& x) const { return x * (BigRational(2) * a_) + b_; }

    /// Divides through by a.
    Quadratic monic() const { return Quadratic(1, b_ / a_, c_ / a_); }

    /// Human-readable polynomial, e.g. "x^2 - 24x + 119".
    std::string str() const
    {
        std::string out;
        auto term = [&out](const BigRational& coeff, const char* var) {
            if (coeff.is_zero()) {
                return;
            }
            const bool first = out.empty();
            if (first) {
                out += coeff.sign() < 0 ? "-" : "";
            } else {
                out += coeff.sign() < 0 ? " - " : " + ";
            }
            BigRational mag = abs(coeff);
            bool bare = *var != '\0' && mag == 1;
            if (!bare) {
                out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
            }
            out += var;
        };
        term(a_, "x^2");
        term(b_, "x");
        term(c_, "");
        return out;
    }

    friend bool operator==(const Quadratic&, const Quadratic&) = default;

private:
    BigRational a_;
    BigRational b_;
    BigRational c_;
};

enum class RootKind { RealDistinct, RealDouble, ComplexPair };

inline const char* root_kind_name(RootKind k)
{
    switch (k) {
    case RootKind::RealDistinct: return "RealDistinct";
    case RootKind::RealDouble: return "RealDouble";
    case RootKind::ComplexPair: return "ComplexPair";
    }
    return "?";
}

/// r1 takes the + branch of the quadratic formula, r2 the - branch.
struct RootPair {
    RootKind kind;
    QuadElem r1;
    QuadElem r2;
};

struct VertexForm {
    BigRational h;
    BigRational k;
    BigRational leading;

    Quadratic expand() const { return Quadratic(leading, BigRational(-2) * leading * h, leading * h * h + k); }
};

inline RootPair solve(const Quadratic& q)
{
    const BigRational disc = q.discriminant();
    const QuadElem root = sqrt_rational(disc);
    const BigRational two_a = BigRational(2) * q.a();
    const QuadElem minus_b = QuadElem::rational(-q.b(), root.m());
    RootKind kind = disc.sign() > 0 ? RootKind::RealDistinct
                                    : (disc.is_zero() ? RootKind::RealDouble : RootKind::ComplexPair);
    return {kind, (minus_b + root) / two_a, (minus_b - root) / two_a};
}

inline VertexForm vertex(const Quadratic& q)
{
    const BigRational four_a = BigRational(4) * q.a();
    return {-q.b() / (BigRational(2) * q.a()), (four_a * q.c() - q.b() * q.b()) / four_a, q.a()};
}

/// Roots of the four equations x^2 + px + q, x^2 - px + q, x^2 + px - q,
/// x^2 - px - q, indexed (a)..(d), and the sign-flip relations between them.
struct FourFamily {
    std::array<Quadratic, 4> equations;
    std::array<RootPair, 4> roots;
    bool a_negates_b;
    bool c_negates_d;
    bool d_real_distinct;
};

namespace detail {

inline bool negated_pair(const RootPair& x, const RootPair& y)
{
    return (x.r1 == -y.r1 && x.r2 == -y.r2) || (x.r1 == -y.r2 && x.r2 == -y.r1);
}

} // namespace detail

inline FourFamily four_family(const BigRational& p, const BigRational& q)
{
    if (p.sign() <= 0 || q.sign() <= 0) {
        fail(ErrorCode::NonPositiveParameter, "p and q must be positive");
    }
    std::array<Quadratic, 4> eqs = {Quadratic(1, p, q), Quadratic(1, -p, q), Quadratic(1, p, -q), Quadratic(1, -p, -q)};
    std::array<RootPair, 4> roots = {solve(eqs[0]), solve(eqs[1]), solve(eqs[2]), solve(eqs[3])};
    return {eqs, roots, detail::negated_pair(roots[0], roots[1]), detail::negated_pair(roots[2], roots[3]),
            roots[3].kind == RootKind::RealDistinct};
}

/// Monic quadratic whose roots are the roots of q shifted by k, built from
/// Vieta's relations: sum' = sum + 2k, product' = product + k*sum + k^2.
inline Quadratic shift_roots(const Quadratic& q, const BigRational& k)
{
    const BigRational sum = -q.b() / q.a();
    const BigRational product = q.c() / q.a();
    const BigRational new_sum = sum + BigRational(2) * k;
    const BigRational new_product = product + k * sum + k * k;
    return Quadratic(1, -new_sum, new_product);
}

/// sqrt(disc) = f'(x1) for x1 = (-b + sqrt(disc))/2a.
struct DiscDerivative {
    QuadElem h;
    QuadElem x1;
    QuadElem x2;
    QuadElem slope_at_x1;
    bool check;
};

inline DiscDerivative disc_derivative_identity(const Quadratic& q)
{
    const BigRational disc = q.discriminant();
    const QuadElem h = sqrt_rational(disc);
    const QuadElem x1 = (QuadElem::rational(-q.b(), h.m()) + h) / (BigRational(2) * q.a());
    const QuadElem slope = q.derivative(x1);
    const QuadElem x2 = -(x1 * q.a() + q.b()) / q.a();
    const bool check = slope == h && slope * slope == disc && q.eval(x1).is_zero() && q.eval(x2).is_zero();
    return {h, x1, x2, slope, check};
}

enum class OdeKind { Overdamped, Critical, Oscillatory };

inline const char* ode_kind_name(OdeKind k)
{
    switch (k) {
    case OdeKind::Overdamped: return "Overdamped";
    case OdeKind::Critical: return "Critical";
    case OdeKind::Oscillatory: return "Oscillatory";
    }
    return "?";
}

/// Classification of a*y'' + b*y' + c*y = 0 by its characteristic equation
/// (also used for indicial equations r^2 + br + c = 0).
/// For Oscillatory, exponents are alpha +- beta*j with beta^2 given exactly.
struct OdeClass {
    OdeKind kind;
    QuadElem r1;
    QuadElem r2;
    BigRational alpha;
    BigRational beta_squared;
};

inline OdeClass ode_classify(const BigRational& a, const BigRational& b, const BigRational& c)
{
    Quadratic q(a, b, c);
    RootPair roots = solve(q);
    OdeKind kind = roots.kind == RootKind::RealDistinct
                       ? OdeKind::Overdamped
                       : (roots.kind == RootKind::RealDouble ? OdeKind::Critical : OdeKind::Oscillatory);
    BigRational alpha = -b / (BigRational(2) * a);
    BigRational beta_sq = 0;
    if (kind == OdeKind::Oscillatory) {
        beta_sq = -roots.r1.b() * roots.r1.b() * BigRational(roots.r1.m());
    }
    return {kind, roots.r1, roots.r2, alpha, beta_sq};
}

} // namespace quadratica
