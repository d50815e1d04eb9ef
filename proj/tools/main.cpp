// intdiff: command line frontend for the boundary problem calculus.

#include <intdiff/axioms.hpp>
#include <intdiff/numeric.hpp>
#include <intdiff/syntax.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace intdiff;
using json = nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kParse = 2, kSingular = 3, kUnsupported = 4, kSearchExceeded = 5 };

struct Options {
    std::string format = "plain";
    unsigned bound = kDefaultUmbralBound;
    std::uint64_t seed = 1;
    std::string spec_file;
    std::vector<std::string> args;
};

Style style(const Options& o) { return o.format == "latex" ? Style::Latex : Style::Plain; }
bool as_json(const Options& o) { return o.format == "json"; }

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// A problem literal, "-" for stdin, or a JSON object with T / conditions / ...
struct LoadedProblem {
    BoundaryProblem p;
    std::vector<std::string> values;
};

LoadedProblem load_problem_text(const std::string& text) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("invalid problem spec: ") + e.what(), 1, e.byte, {"json object"});
        }
        ProblemSpec spec;
        if (!j.contains("T")) throw ParseError("problem spec needs field T", 1, 1, {"T"});
        spec.T = j.at("T").get<std::string>();
        spec.conditions = j.value("conditions", std::vector<std::string>{});
        spec.fundamental_system = j.value("fundamental_system", std::vector<std::string>{});
        spec.values = j.value("values", std::vector<std::string>{});
        return {parse_problem(spec), spec.values};
    }
    return {parse_problem(text), {}};
}

LoadedProblem problem_arg(const Options& o, std::size_t index) {
    if (index == 0 && !o.spec_file.empty()) {
        std::ifstream in(o.spec_file);
        if (!in) throw Error("cannot open " + o.spec_file);
        return load_problem_text(read_all(in));
    }
    std::size_t k = o.spec_file.empty() ? index : index - 1;
    if (k >= o.args.size()) throw CLI::ValidationError("missing problem argument");
    if (o.args[k] == "-") return load_problem_text(read_all(std::cin));
    return load_problem_text(o.args[k]);
}

const std::string& text_arg(const Options& o, std::size_t k, const char* what) {
    if (k >= o.args.size()) throw CLI::ValidationError(std::string("missing ") + what);
    return o.args[k];
}

json problem_json(const BoundaryProblem& p) {
    json b = json::array();
    for (const auto& c : p.B()) b.push_back(render(c));
    return {{"T", render(p.T())}, {"B", b}};
}

std::string kind_name(TermKind k) {
    switch (k) {
    case TermKind::Diff: return "diff";
    case TermKind::Integral: return "integral";
    case TermKind::Local: return "local";
    case TermKind::Global: return "global";
    }
    return "?";
}

json operator_json(const IntDiffOperator& op) {
    json terms = json::array();
    for (const auto& [k, c] : op.terms()) {
        json t = {{"kind", kind_name(k.kind)}, {"coeff", render(c)}, {"left", render(ExpPoly::monomial(k.left))}};
        if (k.kind == TermKind::Local || k.kind == TermKind::Global) t["point"] = render(k.point);
        if (k.kind == TermKind::Diff || k.kind == TermKind::Local) t["order"] = k.order;
        if (k.kind == TermKind::Integral || k.kind == TermKind::Global) t["right"] = render(ExpPoly::monomial(k.right));
        terms.push_back(t);
    }
    return {{"text", render(op)}, {"terms", terms}};
}

json combination_json(const ProblemCombination& r) {
    json a = json::array();
    for (const auto& [l, p] : r.terms()) {
        json t = problem_json(p);
        t["coeff"] = render(l);
        a.push_back(t);
    }
    return a;
}

json fraction_json(const MethoriousOperator& f) {
    return {{"text", render(f)}, {"den", problem_json(f.den)}, {"num", combination_json(f.num)}};
}

json methorious_json(const MethoriousFunction& m) {
    json ideal = json::array();
    for (const auto& e : m.ideal()) {
        json b = json::array();
        for (const auto& c : e.problem.B()) b.push_back(render(c));
        ideal.push_back({{"coeff", render(e.coefficient)}, {"g", render(e.g)}, {"T", render(e.problem.T())}, {"B", b}});
    }
    return {{"smooth", render(m.smooth())}, {"ideal", ideal}};
}

void emit(const Options& o, json j, const std::string& text) {
    if (as_json(o)) {
        j["schema"] = 1;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << text << '\n';
    }
}

std::vector<Scalar> parse_values(const std::vector<std::string>& vs, std::size_t n) {
    std::vector<Scalar> out;
    for (const auto& v : vs) out.push_back(parse_scalar(v));
    if (out.empty()) out.assign(n, Scalar(0));
    if (out.size() != n) throw DimensionMismatch("expected " + std::to_string(n) + " boundary values");
    return out;
}

// ---- commands -------------------------------------------------------------

int cmd_greens(const Options& o, const std::vector<std::string>& apply) {
    const BoundaryProblem p = problem_arg(o, 0).p;
    if (!is_regular(p)) throw SingularProblem("problem is not regular");
    const IntDiffOperator G = greens_operator(p);
    json j = {{"command", "greens"}, {"problem", problem_json(p)}, {"greens", operator_json(G)},
              {"well_posed", is_well_posed(p)}};
    std::string text = render(G, style(o));
    json applied = json::array();
    for (const auto& f : apply) {
        ExpPoly u = op_apply(G, parse_expr(f));
        applied.push_back({{"f", f}, {"result", render(u)}});
        text += "\nG(" + f + ") = " + render(u, style(o));
    }
    j["applied"] = applied;
    emit(o, j, text);
    return kOk;
}

int cmd_solve(const Options& o, const std::string& f_text, const std::vector<std::string>& values_flag) {
    const LoadedProblem lp = problem_arg(o, 0);
    const ExpPoly f = parse_expr(f_text);
    const auto values = parse_values(values_flag.empty() ? lp.values : values_flag, lp.p.dim());
    const ExpPoly u = solve_bvp(lp.p.T(), lp.p.B(), f, values);
    json vs = json::array();
    for (const auto& v : values) vs.push_back(render(v));
    emit(o, {{"command", "solve"}, {"problem", problem_json(lp.p)}, {"f", render(f)}, {"values", vs}, {"u", render(u)}},
         render(u, style(o)));
    return kOk;
}

int cmd_mul(const Options& o) {
    const BoundaryProblem a = problem_arg(o, 0).p, b = problem_arg(o, 1).p;
    const BoundaryProblem c = bp_mul(a, b);
    emit(o, {{"command", "mul"}, {"product", problem_json(c)}, {"regular", is_regular(c)}}, render(c, style(o)));
    return kOk;
}

int cmd_factor(const Options& o, const std::string& left, const std::string& right) {
    const BoundaryProblem p = problem_arg(o, 0).p;
    auto [p1, p2] = lift_factorization(p, parse_diff_op(left), parse_diff_op(right));
    emit(o, {{"command", "factor"}, {"left", problem_json(p1)}, {"right", problem_json(p2)}},
         render(p1, style(o)) + " * " + render(p2, style(o)));
    return kOk;
}

int cmd_regularize(const Options& o) {
    const BoundaryProblem p = problem_arg(o, 0).p;
    const BoundaryProblem r = regularize(p, o.bound);
    emit(o, {{"command", "regularize"}, {"input", problem_json(p)}, {"regular", problem_json(r)}},
         render(r, style(o)));
    return kOk;
}

int cmd_umbral(const Options& o, unsigned n) {
    const StieltjesCondition beta = parse_condition(text_arg(o, 0, "condition"));
    const UmbralExpansion u = umbral_coefficients(beta, n);
    const unsigned m = minimal_monomial(beta, o.bound);
    json b = json::array();
    std::string text = "minimal monomial: x^" + std::to_string(m);
    for (std::size_t k = 0; k < u.b.size(); ++k) {
        b.push_back(render(u.b[k]));
        text += "\nb_" + std::to_string(k) + " = " + render(u.b[k], style(o));
    }
    emit(o, {{"command", "umbral"}, {"condition", render(beta)}, {"b", b}, {"minimal_monomial", m}}, text);
    return kOk;
}

int cmd_orequad(const Options& o) {
    const BoundaryProblem p1 = problem_arg(o, 0).p, p2 = problem_arg(o, 1).p;
    auto [q1, q2] = ore_quadruple(p1, p2, o.bound);
    const BoundaryProblem prod = bp_mul(q1, p1);
    emit(o, {{"command", "orequad"}, {"q1", problem_json(q1)}, {"q2", problem_json(q2)}, {"product", problem_json(prod)}},
         "q1 = " + render(q1, style(o)) + "\nq2 = " + render(q2, style(o)) + "\nq1 p1 = q2 p2 = " + render(prod, style(o)));
    return kOk;
}

int cmd_frac(const Options& o, bool mul) {
    const MethoriousOperator a = parse_fraction(text_arg(o, 0, "fraction")),
                             b = parse_fraction(text_arg(o, 1, "fraction"));
    const MethoriousOperator c = mul ? frac_mul(a, b, o.bound) : frac_add(a, b, o.bound);
    emit(o, {{"command", mul ? "fracmul" : "fracadd"}, {"result", fraction_json(c)}}, render(c, style(o)));
    return kOk;
}

int cmd_kernel(const Options& o, unsigned extra, unsigned monomial) {
    const ProblemCombination r = parse_combination(text_arg(o, 0, "combination"));
    KernelSearchOptions opt;
    opt.extra_order = extra;
    opt.max_monomial = monomial;
    opt.bound = o.bound;
    const auto w = kernel_witness(r, opt);
    const bool conj = kernel_conjecture_holds(r);
    json j = {{"command", "kernel"}, {"combination", render(r)}, {"found", w.has_value()},
              {"greens_combination_is_boundary", conj}};
    if (w) j["witness"] = render(*w);
    emit(o, j, w ? render(*w, style(o)) : std::string("no witness within the search bound"));
    return w ? kOk : kFailure;
}

int cmd_act(const Options& o) {
    const std::string& lhs = text_arg(o, 0, "operator");
    const MethoriousFunction m = parse_methorious(text_arg(o, 1, "methorious function"));
    MethoriousHyperfunction h;
    if (lhs.find("inv") != std::string::npos) {
        h = hyper_act(parse_fraction(lhs), m, o.bound);
    } else {
        h.value = act(parse_combination(lhs), m);
    }
    h.value = deflate(h.value);
    json j = {{"command", "act"}, {"text", render(h)}, {"value", methorious_json(h.value)}};
    if (h.den.order() != 0 || h.den.dim() != 0) j["den"] = problem_json(h.den);
    emit(o, j, render(h, style(o)));
    return kOk;
}

int cmd_deltatable(const Options& o) {
    json rows = json::array();
    std::string text;
    const std::size_t n = o.args.size() + (o.spec_file.empty() ? 0 : 1);
    if (n == 0) throw CLI::ValidationError("missing problem argument");
    for (std::size_t i = 0; i < n; ++i) {
        const BoundaryProblem p = problem_arg(o, i).p;
        if (!is_regular(p)) throw SingularProblem("problem is not regular: " + render(p));
        const auto c = fundamental_formula(p);
        std::string sum;
        json coeffs = json::array();
        for (std::size_t k = 0; k < c.size(); ++k) {
            coeffs.push_back({{"condition", render(p.B()[k])}, {"c", render(c[k])}});
            const std::string coeff = c[k] == ExpPoly(1) ? "" : "(" + render(c[k], style(o)) + ") ";
            sum += (k ? " + " : "") + coeff + render(p.B()[k], style(o)) + " f";
        }
        if (sum.empty()) sum = "0";
        rows.push_back({{"problem", problem_json(p)}, {"coefficients", coeffs}});
        text += (i ? "\n" : "") + render(p, style(o)) + " f = " + render(p.T(), style(o)) + " f + (" + sum + "):" +
                render(p, style(o));
    }
    emit(o, {{"command", "deltatable"}, {"rows", rows}}, text);
    return kOk;
}

int cmd_selftest(const Options& o, std::size_t pairs) {
    Rng rng(o.seed);
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = check_axioms(rng, pairs);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json rows = json::array();
    std::ostringstream text;
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.ok();
        rows.push_back({{"axiom", r.name}, {"passed", r.passed}, {"total", r.total}});
        text << (r.ok() ? "PASS " : "FAIL ") << r.name << " " << r.passed << "/" << r.total << '\n';
    }
    text << "seed " << o.seed << ", " << secs << " s";
    emit(o, {{"command", "selftest"}, {"seed", o.seed}, {"results", rows}, {"ok", ok}, {"seconds", secs}}, text.str());
    return ok ? kOk : kFailure;
}

int cmd_verify(const Options& o, const std::string& f_text, const std::vector<std::string>& values_flag,
               const std::string& lo, const std::string& hi, unsigned samples, double tol) {
    const LoadedProblem lp = problem_arg(o, 0);
    const ExpPoly f = parse_expr(f_text);
    const auto values = parse_values(values_flag.empty() ? lp.values : values_flag, lp.p.dim());
    const VerifyReport r = verify_solution(lp.p, f, values, parse_point(lo), parse_point(hi), samples);
    json rows = json::array();
    std::ostringstream text;
    text.precision(12);
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        rows.push_back({{"x", render(r.points[i])}, {"exact", r.exact[i]}, {"quadrature", r.numeric[i]}});
        text << "x = " << render(r.points[i]) << "  exact " << r.exact[i] << "  quadrature " << r.numeric[i] << '\n';
    }
    const bool ok = r.max_deviation < tol;
    text << "max deviation " << r.max_deviation << (ok ? " (ok)" : " (exceeds tolerance)");
    emit(o, {{"command", "verify"}, {"samples", rows}, {"max_deviation", r.max_deviation}, {"tolerance", tol}, {"ok", ok}},
         text.str());
    return ok ? kOk : kFailure;
}

int report(const Options& o, int code, const std::string& kind, const std::string& message) {
    if (as_json(o)) {
        std::cout << json{{"schema", 1}, {"error", kind}, {"message", message}, {"exit_code", code}}.dump(2) << '\n';
    }
    std::cerr << "error: " << message << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus of linear boundary problems"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"plain", "json", "latex"}))
        ->capture_default_str();
    app.add_option("--bound", o.bound, "Umbral search bound")->capture_default_str();
    app.add_option("--seed", o.seed, "Seed for randomized suites")->capture_default_str();
    app.fallthrough();

    auto with_args = [&](CLI::App* sub, const char* what) {
        sub->add_option("args", o.args, what);
        return sub;
    };
    auto with_spec = [&](CLI::App* sub) {
        sub->add_option("--spec", o.spec_file, "Problem spec file (JSON) used as the first problem");
        return sub;
    };

    std::vector<std::string> apply{"1"};
    auto* greens = with_spec(with_args(app.add_subcommand("greens", "Green's operator of a regular problem"), "problem"));
    greens->add_option("--apply", apply, "Functions to apply the Green's operator to")->capture_default_str();

    std::string f_text = "0";
    std::vector<std::string> values;
    auto* solve = with_spec(with_args(app.add_subcommand("solve", "Solve T u = f, B u = values"), "problem"));
    solve->add_option("-f,--rhs", f_text, "Right-hand side")->capture_default_str();
    solve->add_option("--values", values, "Boundary values, one per condition");

    auto* mul = with_spec(with_args(app.add_subcommand("mul", "Product of two problems"), "problems"));

    std::string left, right;
    auto* factor = with_spec(with_args(app.add_subcommand("factor", "Lift T = T1 T2 to a problem factorization"), "problem"));
    factor->add_option("--left", left, "Left factor T1")->required();
    factor->add_option("--right", right, "Right factor T2")->required();

    auto* reg = with_spec(with_args(app.add_subcommand("regularize", "Regular problem containing the input"), "problem"));

    unsigned umbral_n = 6;
    auto* umbral = with_args(app.add_subcommand("umbral", "Umbral coefficients of a condition"), "condition");
    umbral->add_option("-n", umbral_n, "Highest coefficient index")->capture_default_str();

    auto* orequad = with_spec(with_args(app.add_subcommand("orequad", "Ore quadruple of two problems"), "problems"));
    auto* fracmul = with_args(app.add_subcommand("fracmul", "Product of two fractions"), "fractions");
    auto* fracadd = with_args(app.add_subcommand("fracadd", "Sum of two fractions"), "fractions");

    unsigned extra = 2, monomial = 1;
    auto* kernel = with_args(app.add_subcommand("kernel", "Regular left annihilator of a combination"), "combination");
    kernel->add_option("--extra-order", extra, "Search order beyond the largest occurring")->capture_default_str();
    kernel->add_option("--max-monomial", monomial, "Largest weight degree in integral conditions")->capture_default_str();

    auto* actc = with_args(app.add_subcommand("act", "Action on a methorious function"), "operator and function");
    auto* delta = with_spec(with_args(app.add_subcommand("deltatable", "Fundamental formulae of problems"), "problems"));

    std::size_t pairs = 200;
    auto* selftest = app.add_subcommand("selftest", "Axiom suite on random exponential polynomials");
    selftest->add_option("--pairs", pairs, "Number of random pairs")->capture_default_str();

    std::string lo = "0", hi = "1";
    unsigned samples = 11;
    double tol = 1e-6;
    auto* verify = with_spec(with_args(app.add_subcommand("verify", "Numeric cross-check of solve"), "problem"));
    verify->add_option("-f,--rhs", f_text, "Right-hand side")->capture_default_str();
    verify->add_option("--values", values, "Boundary values, one per condition");
    verify->add_option("--lo", lo, "Interval start")->capture_default_str();
    verify->add_option("--hi", hi, "Interval end")->capture_default_str();
    verify->add_option("--samples", samples, "Number of sample points")->capture_default_str();
    verify->add_option("--tol", tol, "Maximum accepted deviation")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kParse;
    }

    try {
        if (*greens) return cmd_greens(o, apply);
        if (*solve) return cmd_solve(o, f_text, values);
        if (*mul) return cmd_mul(o);
        if (*factor) return cmd_factor(o, left, right);
        if (*reg) return cmd_regularize(o);
        if (*umbral) return cmd_umbral(o, umbral_n);
        if (*orequad) return cmd_orequad(o);
        if (*fracmul) return cmd_frac(o, true);
        if (*fracadd) return cmd_frac(o, false);
        if (*kernel) return cmd_kernel(o, extra, monomial);
        if (*actc) return cmd_act(o);
        if (*delta) return cmd_deltatable(o);
        if (*selftest) return cmd_selftest(o, pairs);
        if (*verify) return cmd_verify(o, f_text, values, lo, hi, samples, tol);
    } catch (const ParseError& e) {
        return report(o, kParse, "parse", e.what());
    } catch (const CLI::ValidationError& e) {
        return report(o, kParse, "usage", e.what());
    } catch (const SingularProblem& e) {
        return report(o, kSingular, "singular", e.what());
    } catch (const UnsupportedOperator& e) {
        return report(o, kUnsupported, "unsupported", e.what());
    } catch (const UmbralSearchExceeded& e) {
        return report(o, kSearchExceeded, "search-exceeded", e.what());
    } catch (const Error& e) {
        return report(o, kFailure, "error", e.what());
    }
    return kFailure;
}
