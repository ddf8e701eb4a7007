// quadratica: command-line front end for the library.
//
// Exit status: 0 on success, 1 on a domain error, 2 on a usage error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quadratica/quadratica.hpp"
#include "render.hpp"

using namespace quadratica;
using qcli::Format;
using qcli::OutputConfig;

namespace {

OutputConfig g_cfg;

BigRational R(const std::string& s) { return BigRational::parse(s); }
json J(const BigRational& r) { return to_json_value(r); }
json J(const QuadElem& z) { return to_json_value(z); }
json J(const Quadratic& q) { return to_json_value(q); }
json J(const RootPair& r) { return to_json_value(r); }
json D(double v) { return qcli::num(v, g_cfg.precision); }

std::int64_t I64(const std::string& s)
{
    const BigInt v = parse_bigint(s);
    if (!fits_int64(v)) {
        fail(ErrorCode::InvalidArgument, s + " does not fit in 64 bits");
    }
    return to_int64(v);
}

std::uint64_t U64(const std::string& s)
{
    const std::int64_t v = I64(s);
    if (v < 0) {
        fail(ErrorCode::InvalidArgument, s + " must be non-negative");
    }
    return static_cast<std::uint64_t>(v);
}

json pnumber_json(const PNumber& p)
{
    return json{{"digit", p.digit}, {"reps", p.reps}, {"value", to_string(pnum_value(p))}};
}

json witness_json(const GoldbachWitness& w)
{
    return json{{"N", w.N}, {"M", w.M}, {"I", w.I}, {"p", w.p}, {"q", w.q}, {"even_prime", w.even_prime}};
}

json group_json(const UnitGroup& g)
{
    json elements = json::array();
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        elements.push_back({{"name", "x^" + std::to_string(i + 1)}, {"value", J(g.elements[i])}});
    }
    json table = json::array();
    for (std::size_t i = 0; i < g.table.size(); ++i) {
        json row{{"*", "x^" + std::to_string(i + 1)}};
        for (std::size_t k = 0; k < g.table[i].size(); ++k) {
            row["x^" + std::to_string(k + 1)] = "x^" + std::to_string(g.table[i][k] + 1);
        }
        table.push_back(row);
    }
    const GroupAxioms ax = check_group(g);
    return json{{"case", fib_case_name(g.which)},
                {"order", g.order},
                {"identity", "x^" + std::to_string(g.identity + 1)},
                {"elements", elements},
                {"axioms",
                 {{"closure", ax.closure},
                  {"identity", ax.identity},
                  {"inverses", ax.inverses},
                  {"associative", ax.associative},
                  {"commutative", ax.commutative},
                  {"cyclic", ax.cyclic}}},
                {"table", table}};
}

json platonic_json(const PlatonicRow& r)
{
    auto rad = [](const RadicalExpr& e) {
        return json{{"text", e.str()}, {"squared", J(e.squared())}, {"value", D(e.value())}};
    };
    return json{{"solid", solid_name(r.solid)},
                {"edge", J(r.edge)},
                {"face_area", rad(r.face_area)},
                {"total_area", rad(r.total_area)},
                {"apothem", rad(r.apothem)},
                {"volume", rad(r.volume)},
                {"volume_identity_exact", r.volume_identity_exact()},
                {"volume_identity_residual", r.volume_identity_residual()}};
}

json perfect_json(const PerfectRecord& r)
{
    return json{{"exponent", r.exponent},   {"mersenne", to_string(r.mersenne)}, {"mersenne_prime", r.mersenne_prime},
                {"x1", to_string(r.x1)},    {"x2", J(r.x2)},                     {"P", to_string(r.value)},
                {"perfect", r.perfect()}};
}

json verify_json(const VerifyReport& rep)
{
    json mods = json::array();
    std::size_t checks = 0;
    std::size_t failed = 0;
    for (const ModuleCheck& m : rep.modules) {
        std::string first = m.failures.empty() ? "" : m.failures.front();
        mods.push_back({{"module", m.module},
                        {"checks", m.checks},
                        {"failed", m.failed},
                        {"seconds", D(m.seconds)},
                        {"first_failure", first}});
        checks += m.checks;
        failed += m.failed;
    }
    return json{{"scale", rep.scale == VerifyScale::Quick ? "quick" : "full"},
                {"ok", rep.ok()},
                {"checks", checks},
                {"failed", failed},
                {"modules", mods}};
}

struct Command {
    CLI::App* app;
    std::function<json()> run;
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact quadratic-equation toolkit: fields, roots, Fibonacci groups, congruences, "
                 "perfect numbers, Goldbach witnesses"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "text";
    bool as_json = false;
    bool as_csv = false;
    std::string out_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--json", as_json, "Shorthand for --format json");
    app.add_flag("--csv", as_csv, "Shorthand for --format csv");
    app.add_option("--precision", g_cfg.precision, "Significant digits for floating values")
        ->check(CLI::Range(1, 30));
    app.add_option("--out", out_path, "Write output to FILE instead of stdout");

    std::vector<Command> commands;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        return parent->add_subcommand(name, desc);
    };

    // solve ---------------------------------------------------------------
    std::string sa, sb, sc, shift;
    bool ode = false;
    auto* solve_cmd = app.add_subcommand("solve", "Roots, vertex and discriminant of ax^2 + bx + c");
    solve_cmd->add_option("a", sa)->required();
    solve_cmd->add_option("b", sb)->required();
    solve_cmd->add_option("c", sc)->required();
    solve_cmd->add_flag("--ode", ode, "Classify as the characteristic equation of ay'' + by' + cy = 0");
    solve_cmd->add_option("--shift", shift, "Also give the equation whose roots are shifted by K");
    commands.push_back({solve_cmd, [&] {
                            const Quadratic q(R(sa), R(sb), R(sc));
                            const VertexForm v = vertex(q);
                            json out{{"equation", J(q)},
                                     {"discriminant", J(q.discriminant())},
                                     {"roots", J(solve(q))},
                                     {"vertex", {{"h", J(v.h)}, {"k", J(v.k)}}}};
                            if (ode) {
                                const OdeClass oc = ode_classify(q.a(), q.b(), q.c());
                                out["ode"] = {{"kind", ode_kind_name(oc.kind)}, {"r1", J(oc.r1)}, {"r2", J(oc.r2)},
                                              {"alpha", J(oc.alpha)}, {"beta_squared", J(oc.beta_squared)}};
                            }
                            if (!shift.empty()) {
                                out["shifted"] = {{"k", J(R(shift))}, {"equation", J(shift_roots(q, R(shift)))}};
                            }
                            return out;
                        }});

    // qfield --------------------------------------------------------------
    std::string qop, qx, qy;
    auto* qfield_cmd = app.add_subcommand("qfield", "Arithmetic in Q(sqrt m); elements like 1/2 + 3/4√5 or 2*sqrt(3)");
    qfield_cmd->add_option("op", qop, "add, sub, mul, div, norm, conj, inv, pow")
        ->required()
        ->check(CLI::IsMember({"add", "sub", "mul", "div", "norm", "conj", "inv", "pow"}));
    qfield_cmd->add_option("x", qx)->required();
    qfield_cmd->add_option("y", qy, "Second operand, or the exponent for pow");
    commands.push_back({qfield_cmd, [&] {
                            const QuadElem x = QuadElem::parse(qx);
                            json out{{"x", J(x)}};
                            auto need_y = [&] {
                                if (qy.empty()) {
                                    fail(ErrorCode::InvalidArgument, qop + " needs a second operand");
                                }
                            };
                            if (qop == "norm") {
                                out["norm"] = J(x.norm());
                            } else if (qop == "conj") {
                                out["conj"] = J(x.conj());
                            } else if (qop == "inv") {
                                out["inverse"] = J(x.inverse());
                            } else if (qop == "pow") {
                                need_y();
                                out["power"] = J(x.pow(static_cast<long>(I64(qy))));
                            } else {
                                need_y();
                                const QuadElem y = QuadElem::parse(qy);
                                const ArithOp op = qop == "add"   ? ArithOp::Add
                                                   : qop == "sub" ? ArithOp::Sub
                                                   : qop == "mul" ? ArithOp::Mul
                                                                  : ArithOp::Div;
                                out["y"] = J(y);
                                out["result"] = J(arith(op, x, y));
                            }
                            return out;
                        }});

    // fib -----------------------------------------------------------------
    auto* fib_cmd = app.add_subcommand("fib", "Fibonacci power reduction, partial sums and unit groups");
    fib_cmd->require_subcommand(1);
    std::string fcase = "I";
    long fn = 10;
    auto* fib_reduce = leaf(fib_cmd, "reduce", "x^n = F_n x + F_(n-1) style reduction for cases I and II");
    fib_reduce->add_option("--case", fcase)->check(CLI::IsMember({"I", "II"}));
    fib_reduce->add_option("--n", fn)->check(CLI::PositiveNumber);
    commands.push_back({fib_reduce, [&] {
                            const FibCase c = parse_fib_case(fcase);
                            json rows = json::array();
                            const QuadElem x = fib_root(c);
                            for (long n = 1; n <= fn; ++n) {
                                const FibPair p = power_reduce(c, n);
                                rows.push_back({{"n", n},
                                                {"coeff", to_string(p.coeff)},
                                                {"constant", to_string(p.constant)},
                                                {"value", J(p.apply(x))}});
                            }
                            return json{{"case", fib_case_name(c)}, {"equation", J(fib_equation(c))}, {"rows", rows}};
                        }});
    auto* fib_sum = leaf(fib_cmd, "sum", "sum_{k=1}^{n} x^k by accumulation and by the closed form");
    fib_sum->add_option("--case", fcase)->check(CLI::IsMember({"I", "II", "III", "IV"}));
    fib_sum->add_option("--n", fn)->check(CLI::PositiveNumber);
    commands.push_back({fib_sum, [&] {
                            const FibCase c = parse_fib_case(fcase);
                            json rows = json::array();
                            for (long n = 1; n <= fn; ++n) {
                                const QuadElem direct = partial_power_sum(c, n);
                                const QuadElem closed = closed_form_sum(c, n);
                                rows.push_back({{"n", n}, {"sum", J(direct)}, {"closed_form_agrees", direct == closed}});
                            }
                            return json{{"case", fib_case_name(c)}, {"equation", J(fib_equation(c))}, {"rows", rows}};
                        }});
    auto* fib_group = leaf(fib_cmd, "group", "Multiplication table of the root powers for cases III and IV");
    fib_group->add_option("--case", fcase)->check(CLI::IsMember({"III", "IV"}));
    commands.push_back({fib_group, [&] { return group_json(unit_group(parse_fib_case(fcase))); }});
    auto* fib_value = leaf(fib_cmd, "value", "f_n with f_0 = f_1 = 1");
    fib_value->add_option("n", fn)->required()->check(CLI::NonNegativeNumber);
    commands.push_back({fib_value, [&] { return json{{"n", fn}, {"f_n", to_string(fib(fn))}}; }});

    // metallic and phi ------------------------------------------------------
    auto* met_cmd = app.add_subcommand("metallic", "Metallic means and radicand families");
    met_cmd->require_subcommand(1);
    long max_p = 4;
    long met_q = 1;
    auto* met_table = leaf(met_cmd, "table", "Positive roots of x^2 - px - q");
    met_table->add_option("--max-p", max_p)->check(CLI::PositiveNumber);
    met_table->add_option("--q", met_q)->check(CLI::PositiveNumber);
    commands.push_back({met_table, [&] {
                            json rows = json::array();
                            for (long p = 1; p <= max_p; ++p) {
                                const MetallicEntry e = metallic(p, met_q);
                                rows.push_back({{"p", p}, {"q", met_q}, {"equation", J(e.equation())},
                                                {"sigma", J(e.sigma)}, {"value", D(e.sigma.to_double())}});
                            }
                            return json{{"rows", rows}};
                        }});
    std::string met_m;
    auto* met_classify = leaf(met_cmd, "classify", "m = 4n + 1 gives x^2 - x - n, m = 4n - 1 gives x^2 - x + n");
    met_classify->add_option("m", met_m)->required();
    commands.push_back({met_classify, [&] {
                            const RadicandClass rc = radicand_classify(I64(met_m));
                            json out{{"m", rc.m}, {"family", radicand_family_name(rc.family)}, {"n", rc.n}};
                            if (rc.equation) {
                                out["equation"] = J(*rc.equation);
                                out["roots"] = J(*rc.roots);
                                out["roots_verified"] = rc.roots_verified;
                            }
                            if (rc.integer_roots) {
                                out["integer_roots"] = {to_string(rc.integer_roots->first),
                                                        to_string(rc.integer_roots->second)};
                            }
                            if (rc.k_parameter) {
                                out["k"] = *rc.k_parameter;
                            }
                            out["creation"] = J(creation_equation(rc.m));
                            out["cos_feasible"] = cos_feasible(rc.m);
                            return out;
                        }});
    long sp_k = 1;
    bool sp_minus = false;
    bool sp_complex = false;
    auto* met_special = leaf(met_cmd, "special", "Equation with roots (2k +- 1 +- sqrt m)/2");
    met_special->add_option("k", sp_k)->required();
    met_special->add_option("m", met_m)->required();
    met_special->add_flag("--minus", sp_minus);
    met_special->add_flag("--complex", sp_complex);
    commands.push_back({met_special, [&] {
                            const SpecialCase s = special_case(sp_k, I64(met_m),
                                                               sp_minus ? SpecialVariant::Minus : SpecialVariant::Plus,
                                                               sp_complex);
                            return json{{"equation", J(s.equation)},    {"displayed", J(s.displayed)},
                                        {"x1", J(s.x1)},                {"x2", J(s.x2)},
                                        {"matches_displayed", s.matches_displayed}, {"roots_solve", s.roots_solve}};
                        }});
    auto* met_trig = leaf(met_cmd, "trig", "cos(pi/5) = phi/2 and related numeric checks");
    commands.push_back({met_trig, [&] {
                            const GoldenTrigReport r = golden_trig();
                            json checks = json::array();
                            for (const NumericCheck& c : r.checks) {
                                checks.push_back({{"name", c.name}, {"residual", c.residual}, {"ok", c.ok}});
                            }
                            return json{{"ok", r.ok()},
                                        {"normalization_exact", r.normalization_exact},
                                        {"quintuple_samples", r.quintuple_samples},
                                        {"quintuple_max_residual", r.quintuple_max_residual},
                                        {"feasible_m", r.feasible_m},
                                        {"infeasible_m", r.infeasible_m},
                                        {"checks", checks}};
                        }});

    long ledger_n = 20;
    auto ledger_run = [&] {
        json rows = json::array();
        for (const PhiLedgerRow& r : phi_ledger(ledger_n)) {
            rows.push_back({{"n", r.n},
                            {"phi^n", to_string(r.coeff) + " phi + " + to_string(r.constant)},
                            {"sum", to_string(r.sum)},
                            {"diff_sqrt5_coeff", to_string(r.diff_coeff)},
                            {"verified", r.verified}});
        }
        return json{{"rows", rows}};
    };
    auto properties_run = [] {
        json rows = json::array();
        for (const PhiProperty& p : phi_properties()) {
            rows.push_back({{"index", p.index}, {"displayed", p.displayed}, {"derived", p.derived}, {"holds", p.holds}});
        }
        return json{{"rows", rows}};
    };
    auto* met_ledger = leaf(met_cmd, "ledger", "phi^n = F_n phi + F_(n-1) with sums and differences");
    met_ledger->add_option("--n", ledger_n)->check(CLI::Range(2L, 100000L));
    commands.push_back({met_ledger, ledger_run});
    auto* phi_cmd = app.add_subcommand("phi", "Golden-ratio ledger and property list");
    phi_cmd->require_subcommand(1);
    auto* phi_ledger_cmd = leaf(phi_cmd, "ledger", "phi^n = F_n phi + F_(n-1) with sums and differences");
    phi_ledger_cmd->add_option("--n", ledger_n)->check(CLI::Range(2L, 100000L));
    commands.push_back({phi_ledger_cmd, ledger_run});
    auto* phi_props = leaf(phi_cmd, "properties", "The listed phi identities and whether each holds");
    commands.push_back({phi_props, properties_run});

    // cong ----------------------------------------------------------------
    auto* cong_cmd = app.add_subcommand("cong", "Quadratic congruences modulo a prime");
    cong_cmd->require_subcommand(1);
    std::string ca, cb, cc, cp, cr;
    auto* cong_solve = leaf(cong_cmd, "solve", "ax^2 + bx + c = 0 (mod p)");
    cong_solve->add_option("a", ca)->required();
    cong_solve->add_option("b", cb)->required();
    cong_solve->add_option("c", cc)->required();
    cong_solve->add_option("p", cp)->required();
    commands.push_back({cong_solve, [&] {
                            const PrimeModulus pm(parse_bigint(cp));
                            const BigInt a = parse_bigint(ca), b = parse_bigint(cb), c = parse_bigint(cc);
                            const CongruenceSolution s = solve_quad_mod(a, b, c, pm);
                            json roots = json::array();
                            for (const BigInt& x : s.roots) {
                                roots.push_back(to_string(x));
                            }
                            return json{{"p", to_string(pm.value())},
                                        {"r", to_string(mod_floor(b * b - 4 * a * c, pm.value()))},
                                        {"legendre", legendre(b * b - 4 * a * c, pm)},
                                        {"kind", congruence_kind_name(s.kind)},
                                        {"roots", roots}};
                        }});
    auto* cong_sqrt = leaf(cong_cmd, "sqrt", "u^2 = r (mod p)");
    cong_sqrt->add_option("r", cr)->required();
    cong_sqrt->add_option("p", cp)->required();
    commands.push_back({cong_sqrt, [&] {
                            const PrimeModulus pm(parse_bigint(cp));
                            const CongruenceSolution s = sqrt_mod(parse_bigint(cr), pm);
                            json roots = json::array();
                            for (const BigInt& x : s.roots) {
                                roots.push_back(to_string(x));
                            }
                            return json{{"kind", congruence_kind_name(s.kind)}, {"roots", roots}};
                        }});
    auto* cong_two = leaf(cong_cmd, "twosquares", "p = a^2 + b^2 for p = 2 or p = 1 (mod 4)");
    cong_two->add_option("p", cp)->required();
    commands.push_back({cong_two, [&] {
                            const auto [a, b] = two_squares(PrimeModulus(parse_bigint(cp)));
                            return json{{"p", cp}, {"a", to_string(a)}, {"b", to_string(b)}};
                        }});

    // perfect -------------------------------------------------------------
    auto* perf_cmd = app.add_subcommand("perfect", "The parabola f(x) = 2x^2 + 3x + 1 and perfect numbers");
    perf_cmd->require_subcommand(1);
    unsigned long max_exp = 13;
    auto* perf_table = leaf(perf_cmd, "table", "x1 = 2^(p-1) - 1 with P = f(x1) and the partner root");
    perf_table->add_option("--max-exp", max_exp)->check(CLI::Range(2UL, 4096UL));
    commands.push_back({perf_table, [&] {
                            json rows = json::array();
                            for (const PerfectRecord& r : perfect_table(max_exp)) {
                                rows.push_back(perfect_json(r));
                            }
                            return json{{"rows", rows}};
                        }});
    std::string pP;
    auto* perf_pre = leaf(perf_cmd, "preimage", "Integer x1 with f(x1) = P, if any");
    perf_pre->add_option("P", pP)->required();
    commands.push_back({perf_pre, [&] {
                            const auto pre = elias_preimage(parse_bigint(pP));
                            if (!pre) {
                                return json{{"P", pP}, {"found", false}};
                            }
                            return json{{"P", pP},
                                        {"found", true},
                                        {"x1", to_string(pre->x1)},
                                        {"x2", J(pre->x2)},
                                        {"slope", to_string(pre->slope)},
                                        {"rederived", pre->rederived}};
                        }});
    std::string pa, pb;
    auto* perf_areas = leaf(perf_cmd, "areas", "Chord, integrals and areas of f on [a, b]");
    perf_areas->add_option("a", pa)->required();
    perf_areas->add_option("b", pb)->required();
    commands.push_back({perf_areas, [&] {
                            const EliasGeometry g = elias_geometry(R(pa), R(pb));
                            return json{{"a", J(g.a)},
                                        {"b", J(g.b)},
                                        {"slope", J(g.slope)},
                                        {"intercept", J(g.intercept)},
                                        {"chord_integral", J(g.chord_integral)},
                                        {"parabola_integral", J(g.parabola_integral)},
                                        {"displayed_integral", J(g.displayed_integral)},
                                        {"chord_area", J(g.chord_area)},
                                        {"axis_area", J(g.axis_area)},
                                        {"consistent", g.consistent}};
                        }});
    std::string pfrom = "-2", pto = "1", pstep = "1/100";
    auto* perf_plot = leaf(perf_cmd, "plot", "Sample (x, f(x)) rows");
    perf_plot->add_option("--from", pfrom);
    perf_plot->add_option("--to", pto);
    perf_plot->add_option("--step", pstep);
    commands.push_back({perf_plot, [&] {
                            const BigRational from = R(pfrom), to = R(pto), step = R(pstep);
                            if (step.sign() <= 0) {
                                fail(ErrorCode::NonPositiveParameter, "step must be positive");
                            }
                            if (to < from) {
                                fail(ErrorCode::EmptyInterval, "need from <= to");
                            }
                            json rows = json::array();
                            for (BigRational x = from; x <= to; x = x + step) {
                                rows.push_back({{"x", J(x)}, {"f(x)", J(elias_eval(x))}});
                            }
                            return json{{"rows", rows}};
                        }});
    auto* perf_consts = leaf(perf_cmd, "constants", "f at pi, e, phi and the listed combinations");
    commands.push_back({perf_consts, [&] {
                            json rows = json::array();
                            for (const ConstantEntry& c : elias_constants()) {
                                rows.push_back({{"expression", c.expression},
                                                {"listed", c.reference},
                                                {"computed", D(c.computed)},
                                                {"difference", D(c.computed - c.reference)}});
                            }
                            return json{{"rows", rows}};
                        }});

    // goldbach ------------------------------------------------------------
    auto* gb_cmd = app.add_subcommand("goldbach", "Witnesses N = (M + I) + (M - I) and their parabolas");
    gb_cmd->require_subcommand(1);
    std::string gN;
    auto* gb_witness = leaf(gb_cmd, "witness", "Smallest I with M +- I both prime");
    gb_witness->add_option("N", gN)->required();
    commands.push_back({gb_witness, [&] { return witness_json(find_witness(U64(gN))); }});
    auto* gb_all = leaf(gb_cmd, "all", "Every witness pair for N");
    gb_all->add_option("N", gN)->required();
    commands.push_back({gb_all, [&] {
                            json rows = json::array();
                            for (const GoldbachWitness& w : all_witnesses(U64(gN))) {
                                rows.push_back(witness_json(w));
                            }
                            return json{{"N", U64(gN)}, {"count", rows.size()}, {"rows", rows}};
                        }});
    std::uint64_t gfrom = 4, gto = 1000000;
    unsigned gthreads = 0;
    std::string greport;
    auto* gb_verify = leaf(gb_cmd, "verify", "Minimal witnesses for every even N in [from, to]");
    gb_verify->add_option("--from", gfrom);
    gb_verify->add_option("--to", gto);
    gb_verify->add_option("--threads", gthreads, "0 means QUADRATICA_THREADS or hardware concurrency");
    gb_verify->add_option("--report", greport, "Write N,I_min,p,q rows to this CSV file");
    commands.push_back({gb_verify, [&] {
                            const GoldbachReport r = verify_goldbach(gfrom, gto, gthreads);
                            if (!greport.empty()) {
                                std::ofstream out(greport);
                                write_goldbach_csv(out, r);
                                if (!out) {
                                    fail(ErrorCode::InvalidArgument, "cannot write " + greport);
                                }
                            }
                            json hist = json::array();
                            for (const auto& [i, count] : r.i_histogram) {
                                hist.push_back({{"I", i}, {"count", count}});
                            }
                            json out{{"from", r.from},     {"to", r.to},         {"verified", r.witnesses.size()},
                                     {"failures", r.failures}, {"max_I", r.max_i}, {"max_I_at", r.max_i_at},
                                     {"threads", r.threads}, {"ok", r.ok()}};
                            if (g_cfg.format == Format::Csv) {
                                json rows = json::array();
                                for (const GoldbachWitness& w : r.witnesses) {
                                    rows.push_back({{"N", w.N}, {"I_min", w.I}, {"p", w.p}, {"q", w.q}});
                                }
                                out["rows"] = rows;
                            } else {
                                out["I_histogram"] = hist;
                            }
                            return out;
                        }});
    std::string gp, gq;
    auto* gb_areas = leaf(gb_cmd, "areas", "A_s, A_r, A_t for the parabola through (p, 0) and (q, 0)");
    gb_areas->add_option("p", gp)->required();
    gb_areas->add_option("q", gq)->required();
    commands.push_back({gb_areas, [&] {
                            const WitnessAreas a = witness_areas(I64(gp), I64(gq));
                            return json{{"I", J(a.I)},
                                        {"segment", J(a.segment)},
                                        {"rectangle", J(a.rectangle)},
                                        {"triangle", J(a.triangle)},
                                        {"leading", J(a.leading)},
                                        {"rectangle/segment", J(a.rectangle / a.segment)},
                                        {"rectangle/triangle", J(a.rectangle / a.triangle)},
                                        {"segment/triangle", J(a.segment / a.triangle)},
                                        {"identities", a.identities},
                                        {"ratios", a.ratios}};
                        }});
    auto* gb_parabola = leaf(gb_cmd, "parabola", "(x - p)(x - q) with its vertex");
    gb_parabola->add_option("p", gp)->required();
    gb_parabola->add_option("q", gq)->required();
    commands.push_back({gb_parabola, [&] {
                            const WitnessParabola w = witness_parabola(I64(gp), I64(gq));
                            return json{{"equation", J(w.equation)},
                                        {"vertex", {{"x", J(w.vertex_x)}, {"y", J(w.vertex_y)}}},
                                        {"roots_verified", w.roots_verified}};
                        }});
    auto* gb_parity = leaf(gb_cmd, "parity", "Parities of (p + q)/2 and (p - q)/2 for odd p, q");
    gb_parity->add_option("p", gp)->required();
    gb_parity->add_option("q", gq)->required();
    commands.push_back({gb_parity, [&] {
                            const ParityLemma l = parity_lemma(I64(gp), I64(gq));
                            return json{{"M", l.M},
                                        {"I", l.I},
                                        {"M_parity", parity_name(l.m_parity)},
                                        {"I_parity", parity_name(l.i_parity)},
                                        {"residue_case", l.residue_case},
                                        {"opposite", l.opposite}};
                        }});
    std::string hn, hI;
    unsigned long hl = 1;
    auto* gb_hyp = leaf(gb_cmd, "hypotenuse", "H = (2n)^(2l) + I^(2l)");
    gb_hyp->add_option("n", hn)->required();
    gb_hyp->add_option("I", hI)->required();
    gb_hyp->add_option("--l", hl)->check(CLI::Range(1UL, 64UL));
    commands.push_back({gb_hyp, [&] {
                            const HypotenuseNumber h = hypotenuse_number(parse_bigint(hn), parse_bigint(hI), hl);
                            return json{{"H", to_string(h.H)},
                                        {"class", hypotenuse_class_name(h.cls)},
                                        {"quotient_identity", h.quotient_identity}};
                        }});

    // pnum ----------------------------------------------------------------
    auto* pn_cmd = app.add_subcommand("pnum", "Repdigits d x t = dd...d");
    pn_cmd->require_subcommand(1);
    std::string pn_n;
    auto* pn_assoc = leaf(pn_cmd, "associate", "The p-number associated with n");
    pn_assoc->add_option("n", pn_n)->required();
    commands.push_back({pn_assoc, [&] {
                            const BigInt n = parse_bigint(pn_n);
                            return json{{"n", pn_n},
                                        {"associate", pnumber_json(associate(n))},
                                        {"digital_root", digital_root(n)}};
                        }});
    int pd = 1;
    long pt = 1;
    auto* pn_par = leaf(pn_cmd, "parabola", "x^2 -+ (d + t)x + dt for the p-number d x t");
    pn_par->add_option("d", pd)->required()->check(CLI::Range(1, 9));
    pn_par->add_option("t", pt)->required()->check(CLI::PositiveNumber);
    commands.push_back({pn_par, [&] {
                            const auto [up, down] = pnum_parabola({pd, pt});
                            return json{{"pnumber", pnumber_json({pd, pt})},
                                        {"parabola", J(up)},
                                        {"mirror", J(down)},
                                        {"roots", J(solve(up))}};
                        }});
    auto* pn_root = leaf(pn_cmd, "root", "Digital root of n");
    pn_root->add_option("n", pn_n)->required();
    commands.push_back({pn_root, [&] { return json{{"n", pn_n}, {"digital_root", digital_root(parse_bigint(pn_n))}}; }});

    // geom ----------------------------------------------------------------
    auto* geo_cmd = app.add_subcommand("geom", "Golden cut, Platonic solids, projectile trajectory");
    geo_cmd->require_subcommand(1);
    std::string solid = "all", edge = "1";
    auto* geo_plat = leaf(geo_cmd, "platonic", "Areas, apothem and volume with V = A ap / 3");
    geo_plat->add_option("solid", solid, "tetra, octa, icosa, hexa, dodeca or all");
    geo_plat->add_option("--edge", edge);
    commands.push_back({geo_plat, [&] {
                            if (solid == "all") {
                                json rows = json::array();
                                for (Solid s : kAllSolids) {
                                    rows.push_back(platonic_json(platonic(s, R(edge))));
                                }
                                return json{{"solids", rows}};
                            }
                            return platonic_json(platonic(parse_solid(solid), R(edge)));
                        }});
    std::string cut_len;
    auto* geo_cut = leaf(geo_cmd, "cut", "Split L into a + b with (a + b)/a = a/b = phi");
    geo_cut->add_option("L", cut_len)->required();
    commands.push_back({geo_cut, [&] {
                            const GoldenCut g = golden_cut(R(cut_len));
                            return json{{"a", J(g.a)},
                                        {"b", J(g.b)},
                                        {"proportion", g.proportion},
                                        {"multiplicative", g.multiplicative}};
                        }});
    double v0 = 0, beta = 0, grav = 0, tstep = 0;
    std::size_t samples = 21;
    auto* geo_traj = leaf(geo_cmd, "trajectory", "y = -g x^2/(2 v0^2 cos^2 beta) + x tan beta, beta in radians");
    geo_traj->add_option("v0", v0)->required();
    geo_traj->add_option("beta", beta)->required();
    geo_traj->add_option("g", grav)->required();
    geo_traj->add_option("--samples", samples)->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
    geo_traj->add_option("--step", tstep, "Sample spacing in x; overrides --samples");
    commands.push_back({geo_traj, [&] {
                            const Trajectory t = trajectory(v0, beta, grav);
                            json rows = json::array();
                            if (tstep > 0) {
                                for (std::size_t i = 0; static_cast<double>(i) * tstep <= t.range; ++i) {
                                    const double x = static_cast<double>(i) * tstep;
                                    rows.push_back({{"x", D(x)}, {"y", D(t.y(x))}});
                                }
                            } else {
                                for (const auto& [x, y] : sample_trajectory(t, samples)) {
                                    rows.push_back({{"x", D(x)}, {"y", D(y)}});
                                }
                            }
                            return json{{"a", D(t.a)},         {"b", D(t.b)},
                                        {"c", D(t.c)},         {"apex_x", D(t.apex_x)},
                                        {"apex_y", D(t.apex_y)}, {"range", D(t.range)},
                                        {"cross_checked", t.cross_checked}, {"rows", rows}};
                        }});

    // errata / verify -----------------------------------------------------
    auto* err_cmd = app.add_subcommand("errata", "Displayed formulas that disagree with the derived ones");
    commands.push_back({err_cmd, [&] {
                            json out = errata_json();
                            for (json& e : out["entries"]) {
                                e["confirmed"] = find_erratum(e["id"].get<std::string>())->confirm();
                            }
                            return out;
                        }});
    std::string scale = "quick";
    bool inject = false;
    auto* ver_cmd = app.add_subcommand("verify", "Run the invariant suite (quick) or the acceptance bounds (full)");
    ver_cmd->add_option("--scale", scale)->check(CLI::IsMember({"quick", "full"}));
    ver_cmd->add_flag("--inject-fault", inject, "Plant a failing check to exercise the harness");
    int verify_status = 0;
    commands.push_back({ver_cmd, [&] {
                            const VerifyReport rep =
                                verify_all(scale == "full" ? VerifyScale::Full : VerifyScale::Quick, inject);
                            verify_status = rep.ok() ? 0 : 1;
                            return verify_json(rep);
                        }});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << "run with --help for the list of valid flags\n";
        return 2;
    }

    g_cfg.format = as_json ? Format::Json : as_csv ? Format::Csv : format == "json" ? Format::Json
                                                 : format == "csv"  ? Format::Csv
                                                                    : Format::Text;

    const Command* chosen = nullptr;
    for (const Command& c : commands) {
        if (c.app->parsed()) {
            chosen = &c;
        }
    }
    if (chosen == nullptr) {
        std::cerr << app.help();
        return 2;
    }

    try {
        const json result = chosen->run();
        std::ostringstream body;
        qcli::render(body, result, g_cfg);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            out << body.str();
            if (!out) {
                std::cerr << "cannot write " << out_path << "\n";
                return 1;
            }
        } else {
            std::cout << body.str();
        }
        return verify_status;
    } catch (const quadratica::Error& e) {
        if (g_cfg.format == Format::Json) {
            std::cerr << json{{"error", {{"code", std::string(error_name(e.code()))}, {"message", e.what()}}}}.dump() << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 1;
    }
}
