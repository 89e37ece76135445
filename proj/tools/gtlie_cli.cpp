// gtlie: evaluate engine operations and run verification suites.
//
//   gtlie eval delta --word 1,2,1 --n 2 --degree 6
//   gtlie eval bch --u x1 --v x2 --degree 3 --format text
//   gtlie verify all --n 1 --degree 4
//
// Series arguments are expressions ("x1 - 1/2 x1*x2"), inline JSON, or
// @path to a JSON file. Defaults come from GT_ENGINE_CONFIG when set.

#include "gtlie/cobracket.hpp"
#include "gtlie/io.hpp"
#include "gtlie/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

using namespace gtlie;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    int n = 2;
    int g = 0;  // > 0 selects symplectic mode
    int degree = 6;
    std::uint64_t seed = 1;
    int samples = 20;
    std::string format = "json";
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

/// Environment config fills whatever the flags left unset.
void apply_config(Settings& s, const std::map<std::string, bool>& given)
{
    const char* path = std::getenv("GT_ENGINE_CONFIG");
    if (!path || !*path) return;
    const json cfg = read_json_file(path);
    auto take = [&](const char* key, auto& field) {
        if (!given.at(key) && cfg.contains(key)) field = cfg[key].get<std::decay_t<decltype(field)>>();
    };
    try {
        take("n", s.n);
        take("g", s.g);
        take("degree", s.degree);
        take("seed", s.seed);
        take("samples", s.samples);
        take("format", s.format);
    } catch (const json::exception& e) {
        throw UsageError(std::string("GT_ENGINE_CONFIG: ") + e.what());
    }
}

AlgebraContext make_context(const Settings& s)
{
    return s.g > 0 ? AlgebraContext::symplectic(s.g, s.degree) : AlgebraContext::genus0(s.n, s.degree);
}

AlgebraContext genus0_context(const Settings& s)
{
    if (s.g > 0) throw PreconditionError("this operation needs a genus-0 context (use --n, not --g)");
    return AlgebraContext::genus0(s.n, s.degree);
}

TensorSeries series_arg(const AlgebraContext& ctx, const std::string& name, const std::string& text)
{
    if (text.empty()) throw UsageError("missing --" + name);
    if (text.front() == '@' || text.front() == '{') {
        const json j = text.front() == '@' ? read_json_file(text.substr(1)) : json::parse(text, nullptr, false);
        if (j.is_discarded()) throw UsageError("--" + name + ": invalid JSON");
        TensorSeries a = tensor_series_from_json(j);
        if (!(a.context() == ctx)) throw ContextMismatch("--" + name + " lives in " + a.context().describe() + ", expected " + ctx.describe());
        return a;
    }
    return parse_series(ctx, text);
}

template <typename S>
void emit(const S& value, const Settings& s)
{
    if (s.format == "text")
        std::cout << to_text(value) << "\n";
    else
        std::cout << to_json(value).dump(2) << "\n";
}

void emit_json_or_text(const json& j, const std::string& text, const Settings& s)
{
    if (s.format == "text")
        std::cout << text << "\n";
    else
        std::cout << j.dump(2) << "\n";
}

struct EvalArgs {
    std::string op;
    std::string u, v, omega, word, gamma, path = "closed";
    int k = 0, l = 0, m = 0, order = 0;
};

CoactionPath parse_path(const std::string& p)
{
    if (p == "closed") return CoactionPath::closed;
    if (p == "pipeline") return CoactionPath::pipeline;
    throw UsageError("--path must be closed or pipeline");
}

PowerSeries1D named_series(const std::string& name, int order)
{
    if (name == "s") return s_series(order);
    if (name == "exp") return exp_series(order);
    if (name == "log1p") return log1p_series(order);
    if (name == "z/(e^-z-1)") return z_over_expm1_neg_series(order);
    if (name == "z^2/(e^-z-1)") return z2_over_expm1_neg_series(order);
    throw UsageError("unknown series '" + name + "' (s, exp, log1p, z/(e^-z-1), z^2/(e^-z-1))");
}

json power_series_json(const PowerSeries1D& f)
{
    json arr = json::array();
    for (const auto& c : f.coefficients()) arr.push_back(to_string(c));
    return {{"coefficients", arr}};
}

std::string power_series_text(const PowerSeries1D& f)
{
    std::string out;
    for (int i = 0; i <= f.order(); ++i) {
        if (i) out += ", ";
        out += to_string(f[i]);
    }
    return "[" + out + "]";
}

void run_eval(const EvalArgs& a, const Settings& s)
{
    const std::string& op = a.op;
    auto ctx = [&] { return make_context(s); };
    auto U = [&] { return series_arg(make_context(s), "u", a.u); };
    auto V = [&] { return series_arg(make_context(s), "v", a.v); };
    auto path = parse_path(a.path);

    if (op == "add") return emit(add(U(), V()), s);
    if (op == "concat") return emit(concat_product(U(), V()), s);
    if (op == "filtration-degree") {
        const int d = filtration_degree(U());
        const json j = d == kInfiniteDegree ? json("inf") : json(d);
        return emit_json_or_text({{"filtration_degree", j}}, d == kInfiniteDegree ? "inf" : std::to_string(d), s);
    }
    if (op == "coproduct") return emit(coproduct(U()), s);
    if (op == "antipode") return emit(antipode(U()), s);
    if (op == "counit") {
        const Rational c = counit(U());
        return emit_json_or_text({{"counit", to_string(c)}}, to_string(c), s);
    }
    if (op == "exp") return emit(exp(U()), s);
    if (op == "log") return emit(log(U()), s);
    if (op == "bch") return emit(bch(U(), V()), s);
    if (op == "apply-series") {
        if (a.omega.empty()) throw UsageError("apply-series needs --series NAME");
        return emit(apply_series(named_series(a.omega, s.degree), U()), s);
    }
    if (op == "power-series") {
        if (a.omega.empty()) throw UsageError("power-series needs --series NAME");
        const PowerSeries1D f = named_series(a.omega, a.order > 0 ? a.order : s.degree);
        return emit_json_or_text(power_series_json(f), power_series_text(f), s);
    }
    if (op == "bernoulli") {
        if (a.m <= 0) throw UsageError("bernoulli needs --m 2m (even, positive)");
        const Rational b = bernoulli(a.m);
        return emit_json_or_text({{"bernoulli", a.m}, {"value", to_string(b)}}, to_string(b), s);
    }
    if (op == "theta") {
        if (a.gamma.empty()) throw UsageError("theta needs --gamma, e.g. 1,2^-1");
        return emit(theta_std(genus0_context(s), parse_group_word(a.gamma)), s);
    }
    if (op == "is-group-like") {
        const bool b = is_group_like(U());
        return emit_json_or_text({{"group_like", b}}, b ? "true" : "false", s);
    }
    if (op == "mt") return emit(mt(U(), V()), s);
    if (op == "mt-inverse") return emit(mt_inverse(U()), s);
    if (op == "embed") return emit(embed(series_arg(genus0_context(s), "u", a.u)), s);
    if (op == "xi") return emit(xi(genus0_context(s)), s);
    if (op == "q") return emit(q_automorphism(series_arg(genus0_context(s), "u", a.u)), s);
    if (op == "theorem-y-lhs") return emit(theorem_y_lhs(genus0_context(s)), s);
    if (op == "theorem-y-rhs") return emit(theorem_y_rhs(genus0_context(s)), s);
    if (op == "theorem-y") {
        const auto c = genus0_context(s);
        const TensorSeries l = theorem_y_lhs(c), r = theorem_y_rhs(c);
        const std::string verdict = l == r ? "EQUAL" : "DIFFERENT";
        return emit_json_or_text({{"lhs", to_json(l)}, {"rhs", to_json(r)}, {"verdict", verdict}},
                                 "lhs = " + to_text(l) + "\nrhs = " + to_text(r) + "\n" + verdict, s);
    }
    if (op == "rho-theta") {
        const auto c = ctx();
        const OmegaElement om(a.omega.empty() ? symplectic_form(c) : series_arg(c, "omega", a.omega));
        return emit(rho_theta(om, U(), V()), s);
    }
    if (op == "rho-std") return emit(rho_std(U(), V()), s);
    if (op == "k-tensor") return emit(k_tensor(genus0_context(s), a.k, a.l), s);
    if (op == "kappa") return emit(kappa_std(U(), V()), s);
    if (op == "cyclic-project") return emit(cyclic_project(U()), s);
    if (op == "mu-fkk") return emit(mu_fkk_generator(genus0_context(s), a.k), s);
    if (op == "mu-pipeline" || op == "mu-closed" || op == "delta") {
        if (a.word.empty()) throw UsageError(op + " needs --word, e.g. 1,2,1");
        const auto c = genus0_context(s);
        const Word w = parse_word(c, a.word);
        if (op == "mu-pipeline") return emit(mu_std_pipeline(c, w), s);
        if (op == "mu-closed") return emit(mu_std_closed(c, w), s);
        return emit(delta_std(c, w, path), s);
    }
    if (op == "delta-series") return emit(delta_std_series(cyclic_project(series_arg(genus0_context(s), "u", a.u)), path), s);
    if (op == "cojacobi") return emit(cojacobi_defect(cyclic_project(series_arg(genus0_context(s), "u", a.u)), path), s);
    if (op == "sign-audit") {
        const auto c = genus0_context(s);
        if (s.format == "text") {
            std::cout << sign_audit(c, std::min(3, s.degree), std::min(4, s.degree)).to_markdown();
            return;
        }
        VerifyOptions o{s.n, s.degree, s.seed, s.samples};
        std::cout << run_suite("sign-audit", o).details["sign_audit"].dump(2) << "\n";
        return;
    }
    throw UsageError("unknown operation '" + op + "'");
}

const std::vector<std::string> kEvalOps{
    "add",        "concat",      "filtration-degree", "coproduct", "antipode",      "counit",        "exp",         "log",
    "bch",        "apply-series", "power-series",     "bernoulli", "theta",         "is-group-like", "mt",          "mt-inverse",
    "embed",      "xi",          "q",                 "theorem-y", "theorem-y-lhs", "theorem-y-rhs", "rho-theta",   "rho-std",
    "k-tensor",   "kappa",       "cyclic-project",    "mu-fkk",    "mu-pipeline",   "mu-closed",     "delta",       "delta-series",
    "cojacobi",   "sign-audit"};

std::string verify_text(const SuiteReport& r)
{
    std::string out;
    for (const auto& p : r.properties) out += (p.passed ? "pass  " : "FAIL  ") + p.name + "\n";
    out += r.passed() ? "suite " + r.suite + ": pass" : "suite " + r.suite + ": FAIL";
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact tensorial computations for the genus-0 Goldman-Turaev structure"};
    app.require_subcommand(1);

    Settings s;
    std::map<CLI::App*, std::map<std::string, CLI::Option*>> opts;
    auto add_common = [&](CLI::App* sub) {
        auto& o = opts[sub];
        o["n"] = sub->add_option("--n", s.n, "number of boundary generators (genus 0)");
        o["g"] = sub->add_option("--g", s.g, "symplectic rank; selects the symplectic alphabet A_i, B_i");
        o["degree"] = sub->add_option("--degree", s.degree, "truncation degree D");
        o["seed"] = sub->add_option("--seed", s.seed, "random seed for property tests");
        o["samples"] = sub->add_option("--samples", s.samples, "random instances per property");
        o["format"] = sub->add_option("--format", s.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };

    EvalArgs ea;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one operation");
    eval->add_option("op", ea.op, "operation")->required()->check(CLI::IsMember(kEvalOps));
    eval->add_option("--u", ea.u, "first series argument");
    eval->add_option("--v", ea.v, "second series argument");
    eval->add_option("--omega,--series", ea.omega, "Omega for rho-theta; series name for apply-series/power-series");
    eval->add_option("--word", ea.word, "comma-separated letters, e.g. 1,2,1");
    eval->add_option("--gamma", ea.gamma, "group word, e.g. 1,2^-1");
    eval->add_option("--k", ea.k, "generator index");
    eval->add_option("--l", ea.l, "generator index");
    eval->add_option("--m", ea.m, "index of the Bernoulli number (even)");
    eval->add_option("--order", ea.order, "order of a univariate series");
    eval->add_option("--path", ea.path, "coaction path: closed or pipeline")->check(CLI::IsMember({"closed", "pipeline"}));
    add_common(eval);

    std::string suite;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::map<std::string, bool> given;
        for (const auto& [k, o] : opts[*eval ? eval : verify]) given[k] = o->count() > 0;
        apply_config(s, given);
        if (*eval) {
            run_eval(ea, s);
            return 0;
        }
        VerifyOptions o{s.n, s.degree, s.seed, s.samples};
        const SuiteReport report = run_suite(suite, o);
        if (s.format == "text")
            std::cout << verify_text(report) << "\n";
        else
            std::cout << report.to_json().dump(2) << "\n";
        return report.passed() ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << (*eval ? eval->help() : verify->help());
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        // PreconditionError, ContextMismatch and friends.
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    }
}
