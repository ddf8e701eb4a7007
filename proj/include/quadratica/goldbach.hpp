#pragma once

// Goldbach witnesses N = (M + I) + (M - I), the parabolas
// x^2 - (p + q)x + pq rooted at a witness pair, and hypotenuse numbers.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "primes.hpp"
#include "rational.hpp"
#include "solver.hpp"

namespace quadratica {

enum class Parity { Even, Odd };

inline const char* parity_name(Parity p)
{
    return p == Parity::Even ? "even" : "odd";
}

inline Parity parity_of(std::int64_t v)
{
    return v % 2 == 0 ? Parity::Even : Parity::Odd;
}

struct ParityLemma {
    std::int64_t M; // (p + q)/2
    std::int64_t I; // (p - q)/2
    Parity m_parity;
    Parity i_parity;
    /// Which of the four residue cases (p, q) mod 4 applies: "4k+1,4l-1" etc.
    std::string residue_case;
    bool opposite;
};

/// For odd p, q the halves (p + q)/2 and (p - q)/2 have opposite parity.
inline ParityLemma parity_lemma(std::int64_t p, std::int64_t q)
{
    if (p % 2 == 0 || q % 2 == 0) {
        fail(ErrorCode::EvenInput, "parity lemma needs odd inputs");
    }
    auto form = [](std::int64_t v) { return ((v % 4) + 4) % 4 == 1 ? "4k+1" : "4k-1"; };
    ParityLemma out;
    out.M = (p + q) / 2;
    out.I = (p - q) / 2;
    out.m_parity = parity_of(out.M);
    out.i_parity = parity_of(out.I);
    out.residue_case = std::string(form(p)) + "," + form(q);
    out.opposite = out.m_parity != out.i_parity;
    return out;
}

/// N = p + q with p = M + I, q = M - I both prime.
struct GoldbachWitness {
    std::uint64_t N;
    std::uint64_t M;
    std::uint64_t I;
    std::uint64_t p;
    std::uint64_t q;
    /// p = q = 2 (N = 4): the only witness with an even prime; the parity
    /// lemma does not apply.
    bool even_prime;
};

namespace detail {

inline void require_goldbach_input(std::uint64_t N)
{
    if (N < 4 || N % 2 != 0) {
        fail(ErrorCode::InvalidArgument, "N must be even and >= 4");
    }
}

template <typename IsPrime>
bool minimal_witness(std::uint64_t N, const IsPrime& is_p, GoldbachWitness& out)
{
    const std::uint64_t M = N / 2;
    // I runs over the parity opposite to M; I = 0 is admissible when M is
    // prime (M odd, or M = 2).
    std::uint64_t start = M % 2 == 0 ? 1 : 0;
    if (M == 2) {
        start = 0;
    }
    for (std::uint64_t I = start; I < M; I += 2) {
        if (is_p(M - I) && is_p(M + I)) {
            out = {N, M, I, M + I, M - I, M == 2};
            return true;
        }
    }
    return false;
}

} // namespace detail

/// Smallest admissible I. Throws NoWitnessFound if I < M is exhausted,
/// which would be a counterexample to Goldbach.
inline GoldbachWitness find_witness(std::uint64_t N)
{
    detail::require_goldbach_input(N);
    GoldbachWitness w{};
    if (!detail::minimal_witness(N, is_prime_u64, w)) {
        fail(ErrorCode::NoWitnessFound, "no witness for N = " + std::to_string(N) + " (Goldbach counterexample)");
    }
    return w;
}

/// Every witness p >= q, ordered by increasing I.
inline std::vector<GoldbachWitness> all_witnesses(std::uint64_t N)
{
    detail::require_goldbach_input(N);
    const std::uint64_t M = N / 2;
    std::vector<GoldbachWitness> out;
    for (std::uint64_t I = 0; I < M; ++I) {
        if (is_prime_u64(M - I) && is_prime_u64(M + I)) {
            out.push_back({N, M, I, M + I, M - I, M - I == 2 && M + I == 2});
        }
    }
    return out;
}

/// Thread count from QUADRATICA_THREADS, else hardware concurrency.
inline unsigned worker_threads()
{
    unsigned n = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("QUADRATICA_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) {
            n = static_cast<unsigned>(v);
        }
    }
    return n;
}

struct GoldbachReport {
    std::uint64_t from;
    std::uint64_t to;
    std::vector<GoldbachWitness> witnesses; // ascending N
    std::vector<std::uint64_t> failures;    // N with no witness
    std::map<std::uint64_t, std::uint64_t> i_histogram;
    std::uint64_t max_i;
    std::uint64_t max_i_at;
    unsigned threads;

    bool ok() const { return failures.empty(); }
};

/// Minimal witnesses for every even N in [from, to]. The sieve is built once
/// and shared read-only; disjoint chunks run in parallel and are merged in
/// N order, so the output does not depend on the thread count.
inline GoldbachReport verify_goldbach(std::uint64_t from, std::uint64_t to, unsigned threads = 0)
{
    if (from < 4) {
        from = 4;
    }
    if (from % 2 != 0) {
        ++from;
    }
    GoldbachReport r{from, to, {}, {}, {}, 0, 0, threads == 0 ? worker_threads() : threads};
    if (to < from) {
        return r;
    }
    const PrimeSieve sieve(to + 16);
    auto is_p = [&sieve](std::uint64_t n) { return sieve.is_prime(n); };
    const std::uint64_t count = (to - from) / 2 + 1;
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(r.threads, count));

    struct Chunk {
        std::vector<GoldbachWitness> found;
        std::vector<std::uint64_t> failed;
    };
    std::vector<Chunk> chunks(workers);
    auto run = [&](unsigned idx) {
        const std::uint64_t lo = count * idx / workers;
        const std::uint64_t hi = count * (idx + 1) / workers;
        Chunk& c = chunks[idx];
        c.found.reserve(hi - lo);
        for (std::uint64_t i = lo; i < hi; ++i) {
            const std::uint64_t N = from + 2 * i;
            GoldbachWitness w{};
            if (detail::minimal_witness(N, is_p, w)) {
                c.found.push_back(w);
            } else {
                c.failed.push_back(N);
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i) {
        pool.emplace_back(run, i);
    }
    run(0);
    for (auto& t : pool) {
        t.join();
    }
    r.witnesses.reserve(count);
    for (Chunk& c : chunks) {
        r.witnesses.insert(r.witnesses.end(), c.found.begin(), c.found.end());
        r.failures.insert(r.failures.end(), c.failed.begin(), c.failed.end());
    }
    for (const GoldbachWitness& w : r.witnesses) {
        ++r.i_histogram[w.I];
        if (w.I > r.max_i) {
            r.max_i = w.I;
            r.max_i_at = w.N;
        }
    }
    return r;
}

/// CSV with header "N,I_min,p,q".
inline void write_goldbach_csv(std::ostream& os, const GoldbachReport& r)
{
    os << "N,I_min,p,q\n";
    for (const GoldbachWitness& w : r.witnesses) {
        os << w.N << ',' << w.I << ',' << w.p << ',' << w.q << '\n';
    }
}

/// x^2 - (p + q)x + pq with vertex (M, -I^2).
struct WitnessParabola {
    std::int64_t p;
    std::int64_t q;
    Quadratic equation;
    BigRational vertex_x;
    BigRational vertex_y;
    bool roots_verified;
};

inline void require_prime_pair(std::int64_t p, std::int64_t q, bool strict)
{
    if (p < 2 || q < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)) ||
        !is_prime_u64(static_cast<std::uint64_t>(q))) {
        fail(ErrorCode::InvalidPair, "p and q must be prime");
    }
    if (strict ? p <= q : p < q) {
        fail(ErrorCode::InvalidPair, strict ? "need p > q" : "need p >= q");
    }
}

inline WitnessParabola witness_parabola(std::int64_t p, std::int64_t q)
{
    require_prime_pair(p, q, false);
    Quadratic eq(1, -(p + q), BigRational(p) * BigRational(q));
    VertexForm v = vertex(eq);
    RootPair roots = solve(eq);
    const QuadElem rp = QuadElem::rational(p);
    const QuadElem rq = QuadElem::rational(q);
    const bool ok = ((roots.r1 == rp && roots.r2 == rq) || (roots.r1 == rq && roots.r2 == rp)) &&
                    v.k == -BigRational((p - q) / 2) * BigRational((p - q) / 2);
    return {p, q, eq, v.h, v.k, ok};
}

/// Areas attached to a witness parabola; I = (p - q)/2.
struct WitnessAreas {
    BigRational I;
    BigRational segment;   // A_s, between the parabola and the axis on [q, p]
    BigRational rectangle; // A_r = (p - q) I^2
    BigRational triangle;  // A_t = (p - q) I^2 / 2
    BigRational leading;   // integral over [0, q]
    bool identities;       // A_s = 4/3 I^3, A_r = 2 I^3, A_t = I^3, q^2(3p - q)/6
    bool ratios;           // A_r/A_s = 3/2, A_r/A_t = 2, A_s/A_t = 4/3
};

inline WitnessAreas witness_areas(std::int64_t p, std::int64_t q)
{
    require_prime_pair(p, q, true);
    const BigRational P(p);
    const BigRational Q(q);
    const BigRational s = P + Q;
    const BigRational prod = P * Q;
    auto antiderivative = [&](const BigRational& x) {
        return x * x * x / BigRational(3) - s * x * x / BigRational(2) + prod * x;
    };
    WitnessAreas a;
    a.I = (P - Q) / BigRational(2);
    a.segment = -(antiderivative(P) - antiderivative(Q));
    a.rectangle = (P - Q) * a.I * a.I;
    a.triangle = a.rectangle / BigRational(2);
    a.leading = antiderivative(Q) - antiderivative(BigRational(0));
    const BigRational i3 = a.I * a.I * a.I;
    a.identities = a.segment == BigRational(4, 3) * i3 && a.segment == (P - Q) * (P - Q) * (P - Q) / BigRational(6) &&
                   a.rectangle == BigRational(2) * i3 && a.triangle == i3 &&
                   a.triangle == (P - Q) * (P - Q) * (P - Q) / BigRational(8) &&
                   a.leading == Q * Q * (BigRational(3) * P - Q) / BigRational(6);
    a.ratios = a.rectangle / a.segment == BigRational(3, 2) && a.rectangle / a.triangle == BigRational(2) &&
               a.segment / a.triangle == BigRational(4, 3);
    return a;
}

enum class HypotenuseClass { Prime, PrimeSquare, Composite };

inline const char* hypotenuse_class_name(HypotenuseClass c)
{
    switch (c) {
    case HypotenuseClass::Prime: return "Prime";
    case HypotenuseClass::PrimeSquare: return "PrimeSquare";
    case HypotenuseClass::Composite: return "Composite";
    }
    return "?";
}

struct HypotenuseNumber {
    BigInt H;
    HypotenuseClass cls;
    /// ((p + q)^{2l} + (p - q)^{2l}) / 2^{2l} == H with p = 2n + I, q = 2n - I.
    bool quotient_identity;
};

/// H = (2n)^{2l} + I^{2l}, for gcd(2n, I) = 1.
inline HypotenuseNumber hypotenuse_number(const BigInt& n, const BigInt& I, unsigned long l)
{
    if (l < 1) {
        fail(ErrorCode::InvalidArgument, "l must be >= 1");
    }
    if (gcd_big(2 * n, I) != 1) {
        fail(ErrorCode::NotCoprime, "gcd(2n, I) must be 1");
    }
    const BigInt two_n = 2 * n;
    HypotenuseNumber h;
    h.H = pow_big(two_n, 2 * l) + pow_big(I, 2 * l);
    if (is_prime(h.H)) {
        h.cls = HypotenuseClass::Prime;
    } else if (is_perfect_square(h.H) && is_prime(isqrt(h.H))) {
        h.cls = HypotenuseClass::PrimeSquare;
    } else {
        h.cls = HypotenuseClass::Composite;
    }
    const BigInt p = two_n + I;
    const BigInt q = two_n - I;
    const BigInt numerator = pow_big(p + q, 2 * l) + pow_big(p - q, 2 * l);
    const BigInt denom = pow2(2 * l);
    h.quotient_identity = numerator % denom == 0 && numerator / denom == h.H;
    return h;
}

} // namespace quadratica
