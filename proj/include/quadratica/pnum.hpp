#pragma once

// Repdigits ("p-numbers") d x t = ddd...d (t digits), the association of an
// integer to a p-number, digital roots, and the parabola of a p-number.

#include <optional>
#include <string>
#include <utility>

#include "bigint.hpp"
#include "errors.hpp"
#include "solver.hpp"

namespace quadratica {

struct PNumber {
    int digit;
    long reps;

    friend bool operator==(const PNumber&, const PNumber&) = default;
};

inline void validate(const PNumber& pn)
{
    if (pn.digit < 1 || pn.digit > 9 || pn.reps < 1) {
        fail(ErrorCode::InvalidArgument, "p-number needs digit in [1, 9] and reps >= 1");
    }
}

/// digit * (10^reps - 1)/9
inline BigInt pnum_value(const PNumber& pn)
{
    validate(pn);
    return BigInt(pn.digit) * (pow_big(BigInt(10), static_cast<unsigned long>(pn.reps)) - 1) / 9;
}

/// The p-number whose value is n, if n is a repdigit.
inline std::optional<PNumber> as_pnumber(const BigInt& n)
{
    if (n < 1) {
        return std::nullopt;
    }
    const std::string s = to_string(n);
    if (s.find_first_not_of(s.front()) != std::string::npos) {
        return std::nullopt;
    }
    return PNumber{s.front() - '0', static_cast<long>(s.size())};
}

/// Repdigits map to themselves; otherwise the units digit d gives d x 1,
/// and a units digit of 0 gives 1 x 1.
inline PNumber associate(const BigInt& n)
{
    if (n < 0) {
        fail(ErrorCode::InvalidArgument, "associate needs n >= 0");
    }
    if (auto self = as_pnumber(n)) {
        return *self;
    }
    const int units = static_cast<int>(mpz_fdiv_ui(n.get_mpz_t(), 10));
    return PNumber{units == 0 ? 1 : units, 1};
}

/// Iterated digit sum down to a single digit.
inline int digital_root(const BigInt& n)
{
    if (n < 0) {
        fail(ErrorCode::InvalidArgument, "digital root needs n >= 0");
    }
    std::string s = to_string(n);
    while (s.size() > 1) {
        unsigned long sum = 0;
        for (char ch : s) {
            sum += static_cast<unsigned long>(ch - '0');
        }
        s = std::to_string(sum);
    }
    return s.front() - '0';
}

/// x^2 - (d + t)x + dt and its mirror x^2 + (d + t)x + dt.
inline std::pair<Quadratic, Quadratic> pnum_parabola(const PNumber& pn)
{
    validate(pn);
    const BigRational s(static_cast<long>(pn.digit) + pn.reps);
    const BigRational prod(static_cast<long>(pn.digit) * pn.reps);
    return {Quadratic(1, -s, prod), Quadratic(1, s, prod)};
}

} // namespace quadratica
