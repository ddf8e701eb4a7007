#pragma once

// Self-verification: the twelve acceptance criteria and the per-module
// invariant sweep behind `quadratica verify`.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "errata.hpp"
#include "fibgroup.hpp"
#include "geometry.hpp"
#include "goldbach.hpp"
#include "metallic.hpp"
#include "perfect.hpp"
#include "pnum.hpp"
#include "primes.hpp"
#include "qfield.hpp"
#include "solver.hpp"

namespace quadratica {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

namespace detail {

class Tally {
public:
    void check(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok && failures_.size() < 20) {
            failures_.push_back(what);
        }
        if (!ok) {
            ++failed_;
        }
    }

    std::size_t checks() const { return checks_; }
    std::size_t failed() const { return failed_; }
    const std::vector<std::string>& failures() const { return failures_; }
    bool ok() const { return failed_ == 0; }

    std::string summary() const
    {
        std::ostringstream os;
        os << (checks_ - failed_) << "/" << checks_ << " checks";
        if (!failures_.empty()) {
            os << "; first failure: " << failures_.front();
        }
        return os.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
};

inline BigRational random_rational(std::mt19937_64& rng, long span, long max_den)
{
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, max_den);
    return BigRational(num(rng), den(rng));
}

inline QuadElem random_elem(std::mt19937_64& rng, std::int64_t m)
{
    const BigRational a = random_rational(rng, 60, 12);
    const BigRational b = random_rational(rng, 60, 12);
    return b.is_zero() ? QuadElem::rational(a, m) : QuadElem::make(a, b, m);
}

/// One randomized trial of the field axioms in Q(sqrt m).
inline bool field_axioms_trial(std::mt19937_64& rng, std::int64_t m)
{
    const QuadElem x = random_elem(rng, m);
    const QuadElem y = random_elem(rng, m);
    const QuadElem z = random_elem(rng, m);
    const QuadElem zero = QuadElem::rational(0, m);
    const QuadElem one = QuadElem::rational(1, m);
    bool ok = (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) && x + y == y + x && x * y == y * x &&
              x * (y + z) == x * y + x * z && x + zero == x && x * one == x && x + (-x) == zero &&
              (x * y).norm() == x.norm() * y.norm() && (x * y).conj() == x.conj() * y.conj() &&
              (x + y).conj() == x.conj() + y.conj();
    if (!x.is_zero()) {
        ok = ok && x * x.inverse() == one && (y / x) * x == y;
    }
    return ok;
}

inline const std::vector<std::int64_t>& axiom_radicands()
{
    static const std::vector<std::int64_t> r = {-11, -7, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10, 13};
    return r;
}

inline std::vector<BigInt> brute_sqrt_mod(const BigInt& r, long p, const std::vector<std::vector<long>>& by_square)
{
    std::vector<BigInt> out;
    for (long x : by_square[mod_floor(r, BigInt(p)).get_si()]) {
        out.emplace_back(x);
    }
    return out;
}

} // namespace detail

// ---- acceptance criteria ---------------------------------------------------

inline CriterionResult criterion_perfect_table()
{
    // (x1, x2 as listed, P as listed)
    struct Row {
        long x1;
        BigRational x2;
        BigInt P;
    };
    const std::vector<Row> rows = {
        {1, BigRational(-5, 2), BigInt(6)},          {3, BigRational(-9, 2), BigInt(28)},
        {5, BigRational(-13, 2), BigInt(66)},        {7, BigRational(-17, 2), BigInt(120)},
        {15, BigRational(-33, 2), BigInt(496)},      {63, BigRational(-129, 2), BigInt(8128)},
        {4095, BigRational(-8193, 2), BigInt(33550336)}, {1023, BigRational(-2046, 2), BigInt(2096128)},
    };
    detail::Tally t;
    std::vector<long> mismatched;
    for (const Row& r : rows) {
        const BigRational x1(r.x1);
        const BigInt P = elias_eval(BigInt(r.x1));
        const BigRational x2 = elias_partner_root(x1);
        t.check(P == r.P, "P for x1 = " + std::to_string(r.x1));
        t.check(elias_eval(x2) == BigRational(P), "f(x2) = P for x1 = " + std::to_string(r.x1));
        if (x2 != r.x2) {
            mismatched.push_back(r.x1);
        }
    }
    // A listed x2 that disagrees with -(3 + 2 x1)/2 is only acceptable when it
    // is the documented erratum and that erratum re-derives.
    const ErratumEntry* e = find_erratum("perfect-table-x2");
    const bool documented = mismatched == std::vector<long>{1023} && e != nullptr && e->confirm();
    t.check(mismatched.empty() || documented, "unexplained x2 mismatch");
    std::string detail = t.summary();
    if (!mismatched.empty()) {
        detail += "; listed x2 for x1 = 1023 is -2046/2, derived -2049/2 (erratum perfect-table-x2)";
    }
    return {1, "perfect-number table", t.ok(), detail, 0.0};
}

inline CriterionResult criterion_elias_constants()
{
    detail::Tally t;
    const VertexForm v = vertex(elias_parabola());
    t.check(v.h == BigRational(-3, 4) && v.k == BigRational(-1, 8), "vertex (-3/4, -1/8)");
    const BigRational a1 = elias_axis_area(-1, BigRational(-1, 2));
    const BigRational a2 = elias_axis_area(BigRational(-1, 2), 0);
    t.check(a1 == BigRational(1, 24), "area on [-1, -1/2] = 1/24");
    t.check(a2 == BigRational(5, 24), "area on [-1/2, 0] = 5/24");
    t.check(a1 + a2 == BigRational(1, 4), "areas sum to 1/4");

    std::vector<std::string> off;
    for (const ConstantEntry& c : elias_constants()) {
        const bool is_f = c.expression.rfind("f(", 0) == 0;
        const double tol = is_f ? 1e-3 : 1e-6;
        if (std::abs(c.computed - c.reference) > tol) {
            off.push_back(c.expression);
        }
    }
    const ErratumEntry* e = find_erratum("elias-constant-2e-phi");
    const bool documented = off == std::vector<std::string>{"2(e + phi)"} && e != nullptr && e->confirm();
    t.check(off.empty() || documented, "constant outside tolerance");
    t.check(elias_constants().size() == 19, "all listed constants present");
    std::string detail = t.summary();
    if (!off.empty()) {
        detail += "; listed 2(e + phi) = 6.6726316344, computed 8.6726316344 (erratum elias-constant-2e-phi)";
    }
    return {2, "Elias constants and areas", t.ok(), detail, 0.0};
}

inline CriterionResult criterion_metallic_table()
{
    detail::Tally t;
    t.check(metallic(1, 1).sigma == QuadElem::make(BigRational(1, 2), BigRational(1, 2), 5), "sigma_{1,1}");
    t.check(metallic(2, 1).sigma == QuadElem::make(1, 1, 2), "sigma_{2,1}");
    t.check(metallic(3, 1).sigma == QuadElem::make(BigRational(3, 2), BigRational(1, 2), 13), "sigma_{3,1}");
    t.check(metallic(4, 1).sigma == QuadElem::make(2, 1, 5), "sigma_{4,1}");
    for (std::int64_t p = 1; p <= 4; ++p) {
        const MetallicEntry m = metallic(p, 1);
        t.check(m.equation().eval(m.sigma).is_zero(), "sigma solves x^2 - px - 1");
    }
    return {3, "metallic table", t.ok(), t.summary(), 0.0};
}

inline CriterionResult criterion_groups()
{
    detail::Tally t;
    const UnitGroup g3 = unit_group(FibCase::III);
    const UnitGroup g4 = unit_group(FibCase::IV);
    t.check(g3.order == 6, "case III order 6");
    t.check(g4.order == 3, "case IV order 3");
    for (const UnitGroup* g : {&g3, &g4}) {
        const GroupAxioms ax = check_group(*g);
        t.check(ax.closure, "closure");
        t.check(ax.identity, "identity");
        t.check(ax.inverses, "inverses");
        t.check(ax.associative, "associativity");
        t.check(ax.commutative, "commutativity");
        t.check(ax.cyclic, "cyclic");
        t.check(g->elements.front().m() == -3, "arithmetic in Q(sqrt -3)");
    }
    return {4, "unit groups of order 6 and 3", t.ok(), t.summary(), 0.0};
}

inline CriterionResult criterion_goldbach(std::uint64_t to = 1000000, const std::string& csv_path = "")
{
    detail::Tally t;
    const GoldbachReport r = verify_goldbach(4, to);
    t.check(r.ok(), "every even N has a witness");
    t.check(r.witnesses.size() == (to - 4) / 2 + 1, "one witness per even N");
    std::ostringstream csv;
    write_goldbach_csv(csv, r);
    const std::string body = csv.str();
    t.check(body.rfind("N,I_min,p,q\n", 0) == 0, "CSV header");
    t.check(static_cast<std::size_t>(std::count(body.begin(), body.end(), '\n')) == r.witnesses.size() + 1,
            "CSV row count");
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        out << body;
        t.check(static_cast<bool>(out), "CSV written to " + csv_path);
    }
    bool has_17_7 = false;
    bool has_19_5 = false;
    for (const GoldbachWitness& w : all_witnesses(24)) {
        has_17_7 = has_17_7 || (w.p == 17 && w.q == 7);
        has_19_5 = has_19_5 || (w.p == 19 && w.q == 5);
    }
    t.check(has_17_7 && has_19_5, "N = 24 lists 17 + 7 and 19 + 5");
    std::ostringstream d;
    d << t.summary() << "; N <= " << to << ", max minimal I = " << r.max_i << " at N = " << r.max_i_at << ", "
      << r.threads << " thread(s)";
    return {5, "Goldbach witnesses", t.ok(), d.str(), 0.0};
}

inline CriterionResult criterion_congruence()
{
    detail::Tally t;
    t.check(two_squares(PrimeModulus(5)) == std::pair<BigInt, BigInt>(1, 2), "5 = 1 + 4");
    t.check(two_squares(PrimeModulus(13)) == std::pair<BigInt, BigInt>(2, 3), "13 = 4 + 9");
    t.check(two_squares(PrimeModulus(17)) == std::pair<BigInt, BigInt>(1, 4), "17 = 1 + 16");

    const PrimeSieve small(2000);
    for (std::uint64_t p : small.primes()) {
        if (p == 2) {
            continue;
        }
        const long lp = static_cast<long>(p);
        std::vector<std::vector<long>> by_square(p);
        for (long x = 0; x < lp; ++x) {
            by_square[(x * x) % lp].push_back(x);
        }
        const PrimeModulus pm(lp);
        bool all = true;
        for (long r = 0; r < lp; ++r) {
            const CongruenceSolution s = sqrt_mod(BigInt(r), pm);
            all = all && s.roots == detail::brute_sqrt_mod(BigInt(r), lp, by_square);
        }
        t.check(all, "sqrt_mod brute force mod " + std::to_string(p));
    }

    const PrimeSieve big(100000);
    bool euler = true;
    for (std::uint64_t p : big.primes()) {
        if (p == 2) {
            continue;
        }
        const bool plus = legendre(BigInt(-1), PrimeModulus(static_cast<long>(p))) == 1;
        euler = euler && plus == (p % 4 == 1);
    }
    t.check(euler, "legendre(-1, p) = 1 iff p = 1 (mod 4) for p < 10^5");
    return {6, "quadratic congruences", t.ok(), t.summary(), 0.0};
}

inline CriterionResult criterion_fibonacci_ledger()
{
    detail::Tally t;
    const QuadElem phi = golden_ratio();
    const QuadElem phib = golden_conjugate();
    const QuadElem sqrt5 = QuadElem::sqrt_of(5);
    QuadElem pn = phi;
    QuadElem qn = phib;
    for (long n = 1; n <= 90; ++n) {
        const FibPair fp = power_reduce(FibCase::I, n);
        t.check(fp.coeff == fib_coeff(n) && fp.constant == fib_coeff(n - 1), "power_reduce coefficients");
        t.check(pn == phi * BigRational(fib_coeff(n)) + BigRational(fib_coeff(n - 1)),
                "phi^" + std::to_string(n) + " = F_n phi + F_(n-1)");
        t.check(pn - qn == sqrt5 * BigRational(fib_coeff(n)), "phi^n - conj^n = sqrt5 F_n");
        pn *= phi;
        qn *= phib;
    }
    const std::vector<PhiProperty> props = phi_properties();
    for (const PhiProperty& p : props) {
        if (p.index <= 8) {
            t.check(p.holds, "property " + std::to_string(p.index));
        }
    }
    const ErratumEntry* e = find_erratum("phi-sixth-power");
    t.check(props.size() >= 9 && !props[8].holds, "property 9 flagged");
    t.check(e != nullptr && e->derived == "phi^6 = 8 phi + 5" && e->confirm(), "erratum phi-sixth-power");
    return {7, "Fibonacci ledger", t.ok(), t.summary(), 0.0};
}

inline CriterionResult criterion_shift_companions(std::size_t trials = 10000)
{
    detail::Tally t;
    std::mt19937_64 rng(0x5eed0008);
    std::size_t good = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const BigRational p = detail::random_rational(rng, 500, 20);
        const BigRational q = detail::random_rational(rng, 500, 20);
        const BigRational k = detail::random_rational(rng, 500, 20);
        const Quadratic base(1, -p, q);
        const Quadratic shifted = shift_roots(base, k);
        const Quadratic expected(1, -(p + BigRational(2) * k), k * k + p * k + q);
        // independent oracle: the shifted equation vanishes at r + k
        const RootPair roots = solve(base);
        const QuadElem kk = QuadElem::rational(k, roots.r1.m());
        const bool vanishes = shifted.eval(roots.r1 + kk).is_zero() && shifted.eval(roots.r2 + kk).is_zero();
        good += (shifted == expected && vanishes) ? 1 : 0;
    }
    t.check(good == trials, std::to_string(trials - good) + " randomized shift trials failed");
    for (const char* id : {"shift-companion-plus", "shift-companion-minus"}) {
        const ErratumEntry* e = find_erratum(id);
        t.check(e != nullptr && e->confirm(), std::string("erratum ") + id);
    }
    std::ostringstream d;
    d << good << "/" << trials << " randomized trials; " << t.summary();
    return {8, "shift companions", t.ok(), d.str(), 0.0};
}

inline CriterionResult criterion_platonic()
{
    detail::Tally t;
    for (Solid s : kAllSolids) {
        for (const BigRational& edge : {BigRational(1), BigRational(7, 3), BigRational(12)}) {
            const PlatonicRow r = platonic(s, edge);
            t.check(r.volume_identity_exact(), std::string(solid_name(s)) + " exact V = A ap / 3");
            t.check(r.volume_identity_residual() <= 1e-12, std::string(solid_name(s)) + " numeric V = A ap / 3");
        }
    }
    return {9, "Platonic V = A ap / 3", t.ok(), t.summary(), 0.0};
}

inline CriterionResult criterion_goldbach_areas(std::size_t pairs = 1000)
{
    detail::Tally t;
    std::mt19937_64 rng(0x5eed0010);
    std::uniform_int_distribution<std::uint64_t> pick_n(4, 50000);
    std::size_t done = 0;
    while (done < pairs) {
        const std::uint64_t N = 2 * pick_n(rng);
        const std::vector<GoldbachWitness> ws = all_witnesses(N);
        std::vector<GoldbachWitness> usable;
        for (const GoldbachWitness& w : ws) {
            if (w.p > w.q) {
                usable.push_back(w);
            }
        }
        if (usable.empty()) {
            continue;
        }
        const GoldbachWitness& w = usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)];
        const auto p = static_cast<std::int64_t>(w.p);
        const auto q = static_cast<std::int64_t>(w.q);
        const WitnessAreas a = witness_areas(p, q);
        const BigRational i3 = a.I * a.I * a.I;
        const bool ok = a.segment == BigRational(4, 3) * i3 && a.rectangle == BigRational(2) * i3 && a.triangle == i3 &&
                        a.rectangle / a.segment == BigRational(3, 2) && a.rectangle / a.triangle == BigRational(2) &&
                        a.segment / a.triangle == BigRational(4, 3) &&
                        a.leading == BigRational(q * q) * BigRational(3 * p - q) / BigRational(6) && a.identities &&
                        a.ratios;
        t.check(ok, "areas for (" + std::to_string(p) + ", " + std::to_string(q) + ")");
        ++done;
    }
    const HypotenuseNumber h169 = hypotenuse_number(6, 5, 1);
    const HypotenuseNumber h193 = hypotenuse_number(6, 7, 1);
    t.check(h169.H == 169 && h169.cls == HypotenuseClass::PrimeSquare, "169 = 13^2");
    t.check(h193.H == 193 && h193.cls == HypotenuseClass::Prime, "193 prime");
    return {10, "Goldbach areas and hypotenuse numbers", t.ok(), t.summary(), 0.0};
}

inline CriterionResult criterion_residue_tables(long n_max = 200)
{
    detail::Tally t;
    for (bool conj : {false, true}) {
        const QuadElem x3 = fib_root(FibCase::III, conj);
        const QuadElem x4 = fib_root(FibCase::IV, conj);
        const QuadElem one3 = QuadElem::rational(1, x3.m());
        const QuadElem one4 = QuadElem::rational(1, x4.m());
        for (long n = 1; n <= n_max; ++n) {
            const QuadElem s3 = partial_power_sum(FibCase::III, n, conj);
            t.check(s3 == case_three_residue_value(n, conj), "case III residue n = " + std::to_string(n));
            t.check(s3 == closed_form_sum(FibCase::III, n, conj), "case III closed form n = " + std::to_string(n));
            // the displayed case values
            switch (n % 6) {
            case 0: t.check(s3.is_zero(), "case III 0"); break;
            case 1: t.check(s3 == x3, "case III x"); break;
            case 5: t.check(s3 == -one3, "case III -1"); break;
            default: break;
            }
            const QuadElem s4 = partial_power_sum(FibCase::IV, n, conj);
            const QuadElem expected4 = n % 3 == 0 ? QuadElem::rational(0, x4.m()) : (n % 3 == 1 ? x4 : -one4);
            t.check(s4 == expected4, "case IV residue n = " + std::to_string(n));
            t.check(s4 == closed_form_sum(FibCase::IV, n, conj), "case IV closed form n = " + std::to_string(n));
        }
    }
    return {11, "partial-sum residue tables", t.ok(), t.summary(), 0.0};
}

inline CriterionResult criterion_field_axioms(std::size_t trials = 10000)
{
    detail::Tally t;
    std::mt19937_64 rng(0x5eed0012);
    std::ostringstream d;
    for (std::int64_t m : detail::axiom_radicands()) {
        std::size_t bad = 0;
        for (std::size_t i = 0; i < trials; ++i) {
            bad += detail::field_axioms_trial(rng, m) ? 0 : 1;
        }
        t.check(bad == 0, "Q(sqrt " + std::to_string(m) + "): " + std::to_string(bad) + " failures");
    }
    d << trials << " trials per radicand over " << detail::axiom_radicands().size() << " radicands; " << t.summary();
    return {12, "field axioms", t.ok(), d.str(), 0.0};
}

/// Runs all twelve criteria at their stated bounds.
inline std::vector<CriterionResult> acceptance_criteria(const std::string& goldbach_csv = "")
{
    std::vector<std::function<CriterionResult()>> runs = {
        criterion_perfect_table,
        criterion_elias_constants,
        criterion_metallic_table,
        criterion_groups,
        [&] { return criterion_goldbach(1000000, goldbach_csv); },
        criterion_congruence,
        criterion_fibonacci_ledger,
        [] { return criterion_shift_companions(10000); },
        criterion_platonic,
        [] { return criterion_goldbach_areas(1000); },
        [] { return criterion_residue_tables(200); },
        [] { return criterion_field_axioms(10000); },
    };
    std::vector<CriterionResult> out;
    for (auto& run : runs) {
        const auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = run();
        } catch (const std::exception& ex) {
            r = {static_cast<int>(out.size()) + 1, "criterion", false, std::string("exception: ") + ex.what(), 0.0};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

// ---- module sweep ----------------------------------------------------------

enum class VerifyScale { Quick, Full };

struct ModuleCheck {
    std::string module;
    std::size_t checks;
    std::size_t failed;
    std::vector<std::string> failures;
    double seconds;
};

struct VerifyReport {
    VerifyScale scale;
    std::vector<ModuleCheck> modules;

    bool ok() const
    {
        for (const ModuleCheck& m : modules) {
            if (m.failed != 0) {
                return false;
            }
        }
        return true;
    }
};

namespace detail {

inline void sweep_qfield(Tally& t)
{
    std::mt19937_64 rng(0x51);
    for (std::int64_t m : axiom_radicands()) {
        for (int i = 0; i < 300; ++i) {
            t.check(field_axioms_trial(rng, m), "field axioms in Q(sqrt " + std::to_string(m) + ")");
        }
        for (int i = 0; i < 50; ++i) {
            const QuadElem z = random_elem(rng, m);
            t.check(QuadElem::parse(z.str()) == z, "text round trip " + z.str());
        }
    }
    for (std::int64_t m : {2, 3, 5, 6, 7, 10, -1, -3}) {
        const auto [r1, r2] = sqrt_solution(m);
        t.check(r1 * r1 == QuadElem::rational(BigRational(m), r1.m()) && r2 == -r1, "sqrt solution");
    }
}

inline void sweep_solver(Tally& t)
{
    std::mt19937_64 rng(0x52);
    for (int i = 0; i < 500; ++i) {
        BigRational a = random_rational(rng, 40, 6);
        if (a.is_zero()) {
            a = 1;
        }
        const Quadratic q(a, random_rational(rng, 40, 6), random_rational(rng, 40, 6));
        const RootPair r = solve(q);
        t.check(q.eval(r.r1).is_zero() && q.eval(r.r2).is_zero(), "roots of " + q.str());
        t.check(vertex(q).expand() == q, "vertex form of " + q.str());
        t.check(disc_derivative_identity(q).check, "sqrt(disc) = f'(x1) for " + q.str());
    }
    const RootPair golden = solve(Quadratic(1, -1, -1));
    t.check(golden.r1 == golden_ratio() && golden.kind == RootKind::RealDistinct, "x^2 - x - 1");
    for (long p = 1; p <= 12; ++p) {
        for (long q = 1; q <= 12; ++q) {
            const FourFamily f = four_family(p, q);
            t.check(f.a_negates_b && f.c_negates_d && f.d_real_distinct, "four-equation family");
        }
    }
    t.check(ode_classify(1, 2, 1).kind == OdeKind::Critical, "critical damping");
    t.check(ode_classify(1, 3, 2).kind == OdeKind::Overdamped, "overdamped");
    t.check(ode_classify(1, 0, 4).kind == OdeKind::Oscillatory, "oscillatory");
}

inline void sweep_fibgroup(Tally& t, long n_max)
{
    for (FibCase c : {FibCase::I, FibCase::II}) {
        const QuadElem x = fib_root(c);
        for (long n = 1; n <= n_max; ++n) {
            t.check(power_reduce(c, n).apply(x) == x.pow(n), "power reduction");
            t.check(partial_power_sum(c, n) == closed_form_sum(c, n), "closed form sum");
        }
    }
    for (FibCase c : {FibCase::III, FibCase::IV}) {
        t.check(check_group(unit_group(c)).all(), "group axioms");
        t.check(power_cycle_identities(c, 20), "power cycle identities");
    }
    for (long n = 1; n <= n_max; ++n) {
        t.check(fib_telescoping_holds(n), "telescoping sum");
        t.check(partial_power_sum(FibCase::III, n) == case_three_residue_value(n), "case III residue");
    }
    t.check(fib(50) == BigInt("20365011074"), "f_50");
    for (const SumRewriting& s : power_family_sums(PowerFamily::XMinusOne, 3, 9)) {
        t.check(s.matches, "rewriting " + s.label);
    }
}

inline void sweep_metallic(Tally& t, long ledger_n)
{
    for (std::int64_t p = 1; p <= 6; ++p) {
        for (std::int64_t q = 1; q <= 4; ++q) {
            const MetallicEntry e = metallic(p, q);
            t.check(e.equation().eval(e.sigma).is_zero() && e.sigma.sign() > 0, "metallic root");
        }
    }
    for (const PhiLedgerRow& row : phi_ledger(ledger_n)) {
        t.check(row.verified, "ledger row " + std::to_string(row.n));
    }
    for (const PhiProperty& p : phi_properties()) {
        t.check(p.holds == (p.index != 9), "property " + std::to_string(p.index));
    }
    t.check(golden_trig(200).ok(), "golden trigonometry");
    for (std::int64_t m = 1; m <= 60; ++m) {
        const RadicandClass rc = radicand_classify(m);
        t.check(rc.family == RadicandFamily::NotOdd || rc.roots_verified, "radicand " + std::to_string(m));
    }
    for (std::int64_t k = 1; k <= 10; ++k) {
        t.check(integer_root_case_holds(k), "integer root case");
        for (std::int64_t m : {5, 13, 17}) {
            const SpecialCase sc = special_case(k, m, SpecialVariant::Plus, false);
            t.check(sc.matches_displayed && sc.roots_solve, "special case");
        }
    }
}

inline void sweep_congruence(Tally& t, long p_max)
{
    const PrimeSieve sieve(static_cast<std::uint64_t>(p_max));
    for (std::uint64_t up : sieve.primes()) {
        const long p = static_cast<long>(up);
        const PrimeModulus pm(p);
        if (p % 4 != 3) {
            const auto [a, b] = two_squares(pm);
            t.check(a * a + b * b == p && a <= b, "two squares " + std::to_string(p));
        }
        if (p == 2) {
            continue;
        }
        for (long a = 1; a < std::min(p, 6L); ++a) {
            for (long c = 0; c < std::min(p, 6L); ++c) {
                const CongruenceSolution s = solve_quad_mod(a, 3, c, pm);
                std::vector<BigInt> brute;
                for (long x = 0; x < p; ++x) {
                    if ((a * x * x + 3 * x + c) % p == 0) {
                        brute.emplace_back(x);
                    }
                }
                t.check(s.roots == brute, "solve_quad_mod brute force");
            }
        }
    }
}

inline void sweep_perfect(Tally& t)
{
    for (const PerfectRecord& r : perfect_table(13)) {
        t.check(perfect_root_check(r).equal_x1, "perfect root check");
        if (r.perfect()) {
            t.check(proper_divisor_sum(r.value) == r.value, "perfect " + to_string(r.value));
            const auto pre = elias_preimage(r.value);
            t.check(pre.has_value() && pre->rederived, "preimage");
        }
    }
    for (long n = -200; n <= 200; ++n) {
        t.check(parity_contract_holds(ParityMap::F, BigInt(n)) && parity_contract_holds(ParityMap::H, BigInt(n)),
                "parity contract");
    }
    t.check(odd_squares_one_mod_eight(2000), "odd squares mod 8");
    for (long n = 1; n <= 60; ++n) {
        t.check(sum_squares_bridge(n).closed_form_ok, "sum of squares");
        t.check(series_closed_forms({BigRational(n, 3), BigRational(2 * n + 1, 5), n}).agree, "series forms");
    }
    const EliasGeometry g = elias_geometry(BigRational(-2), BigRational(1, 3));
    t.check(g.consistent, "chord geometry");
    for (unsigned long l = 1; l <= 12; ++l) {
        for (long n = 0; n <= 5; ++n) {
            t.check(elias_forms_hold(l, BigInt(n)), "x1 = 2^l +- 1 forms");
        }
    }
}

inline void sweep_goldbach(Tally& t, std::uint64_t to)
{
    const GoldbachReport r = verify_goldbach(4, to);
    t.check(r.ok(), "witnesses up to " + std::to_string(to));
    const GoldbachWitness w24 = find_witness(24);
    t.check(w24.I == 1 && w24.p == 13 && w24.q == 11, "N = 24");
    const GoldbachWitness w100 = find_witness(100);
    t.check(w100.I == 3 && w100.p == 53 && w100.q == 47, "N = 100");
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        for (std::int64_t q : {3, 5, 7, 11, 13}) {
            t.check(parity_lemma(p, q).opposite, "parity lemma");
            if (p > q) {
                const WitnessAreas a = witness_areas(p, q);
                t.check(a.identities && a.ratios, "areas");
                t.check(witness_parabola(p, q).roots_verified, "witness parabola");
            }
        }
    }
}

inline void sweep_pnum(Tally& t)
{
    t.check(pnum_value({7, 3}) == 777, "7 x 3 = 777");
    t.check(associate(BigInt(777)) == PNumber{7, 3}, "777 maps to itself");
    t.check(associate(BigInt(1234)) == PNumber{4, 1}, "units digit");
    t.check(associate(BigInt(120)) == PNumber{1, 1}, "units digit 0");
    for (long n = 0; n <= 5000; ++n) {
        const int dr = digital_root(BigInt(n));
        t.check(n == 0 ? dr == 0 : dr == 1 + static_cast<int>((n - 1) % 9), "digital root " + std::to_string(n));
    }
    for (int d = 1; d <= 9; ++d) {
        for (long r = 1; r <= 6; ++r) {
            const auto [up, down] = pnum_parabola({d, r});
            t.check(up.eval(BigRational(d)).is_zero() && up.eval(BigRational(r)).is_zero() &&
                        down.eval(BigRational(-d)).is_zero(),
                    "p-number parabola");
        }
    }
}

inline void sweep_geometry(Tally& t)
{
    for (Solid s : kAllSolids) {
        const PlatonicRow one = platonic(s, 1);
        const PlatonicRow three = platonic(s, 3);
        t.check(one.volume_identity_exact(), "V = A ap / 3");
        t.check(three.volume.squared() == one.volume.squared() * BigRational(729), "volume scales by 27");
        t.check(three.total_area.squared() == one.total_area.squared() * BigRational(81), "area scales by 9");
    }
    for (long L = 1; L <= 20; ++L) {
        const GoldenCut g = golden_cut(BigRational(L));
        t.check(g.proportion && g.multiplicative, "golden cut");
    }
    for (double beta : {0.2, 0.5, 0.785, 1.1, 1.4}) {
        t.check(trajectory(20.0, beta, 9.81).cross_checked, "trajectory cross-check");
    }
}

inline void sweep_errata(Tally& t)
{
    for (const ErratumEntry& e : errata()) {
        bool ok = false;
        try {
            ok = e.confirm();
        } catch (const std::exception&) {
            ok = false;
        }
        t.check(ok, "erratum " + e.id);
    }
}

} // namespace detail

/// Quick runs each module's invariants at small bounds; full adds the
/// acceptance criteria. inject_fault plants one failing check so the harness
/// itself can be tested.
inline VerifyReport verify_all(VerifyScale scale, bool inject_fault = false)
{
    VerifyReport report{scale, {}};
    auto run = [&](const std::string& name, const std::function<void(detail::Tally&)>& body) {
        const auto start = std::chrono::steady_clock::now();
        detail::Tally t;
        try {
            body(t);
        } catch (const std::exception& ex) {
            t.check(false, std::string("exception: ") + ex.what());
        }
        report.modules.push_back({name, t.checks(), t.failed(), t.failures(),
                                  std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});
    };
    run("qfield", detail::sweep_qfield);
    run("solver", detail::sweep_solver);
    run("fibgroup", [](detail::Tally& t) { detail::sweep_fibgroup(t, 60); });
    run("metallic", [](detail::Tally& t) { detail::sweep_metallic(t, 30); });
    run("congruence", [](detail::Tally& t) { detail::sweep_congruence(t, 300); });
    run("perfect", detail::sweep_perfect);
    run("goldbach", [](detail::Tally& t) { detail::sweep_goldbach(t, 10000); });
    run("pnum", detail::sweep_pnum);
    run("geometry", detail::sweep_geometry);
    run("errata", detail::sweep_errata);
    if (inject_fault) {
        run("injected-fault", [](detail::Tally& t) { t.check(false, "deliberate failure"); });
    }
    if (scale == VerifyScale::Full) {
        for (const CriterionResult& c : acceptance_criteria()) {
            ModuleCheck m{"acceptance-" + std::to_string(c.id), 1, c.pass ? 0u : 1u, {}, c.seconds};
            if (!c.pass) {
                m.failures.push_back(c.name + ": " + c.detail);
            }
            report.modules.push_back(std::move(m));
        }
    }
    return report;
}

} // namespace quadratica
