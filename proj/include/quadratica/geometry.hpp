#pragma once

// Golden cut, Platonic-solid measures with V = A * apothem / 3, and
// the projectile trajectory.
//
// Nested radicals such as sqrt((7 + 3 sqrt 5)/6) are held as
// scale * sqrt(inner) with inner in Q(sqrt 5) and compared by squaring;
// every quantity is positive, so equal squares mean equal values.

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "qfield.hpp"
#include "solver.hpp"

namespace quadratica {

/// scale * sqrt(inner), inner >= 0 in the numeric embedding.
struct RadicalExpr {
    BigRational scale;
    QuadElem inner;

    double value() const { return scale.to_double() * std::sqrt(inner.to_double()); }
    QuadElem squared() const { return inner * (scale * scale); }

    RadicalExpr scaled(const BigRational& factor) const { return {scale * factor, inner}; }
    std::string str() const { return "(" + scale.str() + ")*sqrt(" + inner.str() + ")"; }
};

enum class Solid { Tetrahedron, Octahedron, Icosahedron, Hexahedron, Dodecahedron };

inline constexpr std::array<Solid, 5> kAllSolids = {Solid::Tetrahedron, Solid::Octahedron, Solid::Icosahedron,
                                                    Solid::Hexahedron, Solid::Dodecahedron};

inline const char* solid_name(Solid s)
{
    switch (s) {
    case Solid::Tetrahedron: return "tetrahedron";
    case Solid::Octahedron: return "octahedron";
    case Solid::Icosahedron: return "icosahedron";
    case Solid::Hexahedron: return "hexahedron";
    case Solid::Dodecahedron: return "dodecahedron";
    }
    return "?";
}

inline Solid parse_solid(const std::string& s)
{
    if (s == "tetra" || s == "tetrahedron") return Solid::Tetrahedron;
    if (s == "octa" || s == "octahedron") return Solid::Octahedron;
    if (s == "icosa" || s == "icosahedron") return Solid::Icosahedron;
    if (s == "hexa" || s == "cube" || s == "hexahedron") return Solid::Hexahedron;
    if (s == "dodeca" || s == "dodecahedron") return Solid::Dodecahedron;
    fail(ErrorCode::InvalidArgument, "unknown solid '" + s + "'");
}

struct PlatonicRow {
    Solid solid;
    BigRational edge;
    RadicalExpr face_area;
    RadicalExpr total_area;
    RadicalExpr apothem;
    RadicalExpr volume;

    /// V^2 == (A * apothem / 3)^2 in exact arithmetic.
    bool volume_identity_exact() const
    {
        return volume.squared() == total_area.squared() * apothem.squared() / BigRational(9);
    }

    double volume_identity_residual() const
    {
        const double v = volume.value();
        return std::abs(v - total_area.value() * apothem.value() / 3.0) / v;
    }
};

namespace detail {

inline RadicalExpr rad(BigRational scale, const BigRational& inner)
{
    return {std::move(scale), QuadElem::rational(inner)};
}

inline RadicalExpr rad5(BigRational scale, long a, long b, long den)
{
    return {std::move(scale), QuadElem::make(BigRational(a, den), BigRational(b, den), 5)};
}

inline PlatonicRow unit_platonic(Solid s)
{
    const BigRational q4(1, 4);
    switch (s) {
    case Solid::Tetrahedron:
        return {s, 1, rad(q4, 3), rad(1, 3), rad(BigRational(1, 12), 6), rad(BigRational(1, 12), 2)};
    case Solid::Octahedron:
        return {s, 1, rad(q4, 3), rad(2, 3), rad(BigRational(1, 6), 6), rad(BigRational(1, 3), 2)};
    case Solid::Icosahedron:
        return {s, 1, rad(q4, 3), rad(5, 3), rad5(BigRational(1, 2), 7, 3, 6), rad5(BigRational(5, 6), 7, 3, 2)};
    case Solid::Hexahedron:
        return {s, 1, rad(1, 1), rad(6, 1), rad(BigRational(1, 2), 1), rad(1, 1)};
    case Solid::Dodecahedron:
        return {s, 1, rad5(BigRational(5, 4), 5, 2, 5), rad5(15, 5, 2, 5), rad5(BigRational(1, 2), 25, 11, 10),
                rad5(BigRational(5, 2), 47, 21, 10)};
    }
    fail(ErrorCode::InvalidArgument, "unknown solid");
}

} // namespace detail

/// Face area, total area, apothem (inradius) and volume for the given edge.
inline PlatonicRow platonic(Solid s, const BigRational& edge)
{
    if (edge.sign() <= 0) {
        fail(ErrorCode::NonPositiveLength, "edge must be positive");
    }
    PlatonicRow r = detail::unit_platonic(s);
    const BigRational e2 = edge * edge;
    r.edge = edge;
    r.face_area = r.face_area.scaled(e2);
    r.total_area = r.total_area.scaled(e2);
    r.apothem = r.apothem.scaled(edge);
    r.volume = r.volume.scaled(e2 * edge);
    return r;
}

/// a + b = L with (a + b)/a = a/b = phi.
struct GoldenCut {
    QuadElem a;
    QuadElem b;
    bool proportion;     // (a + b)/a == a/b == phi
    bool multiplicative; // a^2 == b (a + b)
};

inline GoldenCut golden_cut(const QuadElem& length)
{
    if (!length.is_real() || length.sign() <= 0) {
        fail(ErrorCode::NonPositiveLength, "length must be positive");
    }
    const QuadElem phi = golden_ratio();
    const QuadElem a = length / phi;
    const QuadElem b = length - a;
    const bool proportion = (a + b) / a == phi && a / b == phi;
    return {a, b, proportion, a * a == b * (a + b)};
}

inline GoldenCut golden_cut(const BigRational& length)
{
    return golden_cut(QuadElem::rational(length, 5));
}

/// y = A x^2 + B x with A = -g/(2 v0^2 cos^2 beta), B = tan beta.
struct Trajectory {
    double v0;
    double beta;
    double g;
    double a;
    double b;
    double c;
    double apex_x;
    double apex_y;
    double range;
    bool cross_checked;

    double y(double x) const { return (a * x + b) * x + c; }
};

inline Trajectory trajectory(double v0, double beta, double g)
{
    if (!(beta > 0.0 && beta < std::numbers::pi / 2)) {
        fail(ErrorCode::InvalidAngle, "launch angle must lie in (0, pi/2)");
    }
    if (!(v0 > 0.0) || !(g > 0.0)) {
        fail(ErrorCode::NonPositiveParameter, "v0 and g must be positive");
    }
    Trajectory t{};
    t.v0 = v0;
    t.beta = beta;
    t.g = g;
    const double cb = std::cos(beta);
    t.a = -g / (2.0 * v0 * v0 * cb * cb);
    t.b = std::tan(beta);
    t.c = 0.0;
    // vertex (-b/2a, (4ac - b^2)/4a)
    t.apex_x = -t.b / (2.0 * t.a);
    t.apex_y = (4.0 * t.a * t.c - t.b * t.b) / (4.0 * t.a);
    t.range = v0 * v0 * std::sin(2.0 * beta) / g;

    constexpr double kTol = 1e-9;
    auto close = [](double x, double y) { return std::abs(x - y) <= kTol * std::max(1.0, std::abs(y)); };
    const double kinematic_apex_x = v0 * v0 * std::sin(beta) * cb / g;
    const double kinematic_apex_y = v0 * v0 * std::sin(beta) * std::sin(beta) / (2.0 * g);
    t.cross_checked = close(t.apex_x, kinematic_apex_x) && close(t.apex_y, kinematic_apex_y) &&
                      close(-t.b / t.a, t.range) && close(2.0 * t.apex_x, t.range);
    return t;
}

/// Evenly spaced (x, y) samples from 0 to the range, inclusive.
inline std::vector<std::pair<double, double>> sample_trajectory(const Trajectory& t, std::size_t samples)
{
    if (samples < 2) {
        fail(ErrorCode::InvalidArgument, "need at least two samples");
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = t.range * static_cast<double>(i) / static_cast<double>(samples - 1);
        out.emplace_back(x, t.y(x));
    }
    return out;
}

} // namespace quadratica
