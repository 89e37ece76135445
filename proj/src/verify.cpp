#include "gtlie/verify.hpp"

#include "gtlie/cobracket.hpp"
#include "gtlie/random.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace gtlie {

namespace {

using Counterexample = std::optional<json>;

template <typename S>
json mismatch(const S& lhs, const S& rhs, json input = json::object())
{
    input["lhs"] = to_json(lhs);
    input["rhs"] = to_json(rhs);
    input["difference"] = to_json(lhs - rhs);
    return input;
}

class Recorder {
public:
    explicit Recorder(SuiteReport& report) : report_(report) {}

    /// Runs `body`; an engaged return value is the first counterexample.
    void property(const std::string& name, const std::function<Counterexample()>& body)
    {
        PropertyResult r{name, true, nullptr};
        try {
            if (auto cex = body()) {
                r.passed = false;
                r.counterexample = std::move(*cex);
            }
        } catch (const std::exception& e) {
            r.passed = false;
            r.counterexample = json{{"exception", e.what()}};
        }
        report_.properties.push_back(std::move(r));
    }

private:
    SuiteReport& report_;
};

TensorSeries random_positive(Rng& rng, const AlgebraContext& ctx, int max_degree = -1)
{
    const int top = max_degree < 0 ? ctx.degree() : std::min(max_degree, ctx.degree());
    return random_series(rng, ctx, 1, top, 3);
}

/// Classical recurrence Σ_{j<m+1} C(m+1, j) B_j = 0 with B_0 = 1.
std::vector<Rational> bernoulli_by_recurrence(int top)
{
    std::vector<Rational> b(static_cast<std::size_t>(top + 1));
    b[0] = 1;
    for (int m = 1; m <= top; ++m) {
        Rational acc(0);
        for (int j = 0; j < m; ++j) acc += binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(j)) * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(m)] = -acc / (m + 1);
    }
    return b;
}

void hopf_suite(Recorder& rec, const VerifyOptions& o)
{
    const auto ctx = AlgebraContext::genus0(o.n, o.degree);
    Rng rng(o.seed);
    const int N = o.samples;

    rec.property("coassociativity", [&]() -> Counterexample {
        for (int i = 0; i < N; ++i) {
            const TensorSeries a = random_series(rng, ctx, 0, ctx.degree(), 3);
            const MultiSeries<2> d = coproduct(a);
            const auto l = coproduct_slot<2>(d, 0), r = coproduct_slot<2>(d, 1);
            if (!(l == r)) return mismatch(l, r, {{"a", to_json(a)}});
        }
        return std::nullopt;
    });
    rec.property("counit", [&]() -> Counterexample {
        for (int i = 0; i < N; ++i) {
            const TensorSeries a = random_series(rng, ctx, 0, ctx.degree(), 3);
            const MultiSeries<2> d = coproduct(a);
            for (std::size_t slot : {0u, 1u})
                if (const TensorSeries c = counit_slot(d, slot); !(c == a)) return mismatch(c, a, {{"slot", slot}});
        }
        return std::nullopt;
    });
    rec.property("antipode", [&]() -> Counterexample {
        for (int i = 0; i < N; ++i) {
            const TensorSeries a = random_series(rng, ctx, 0, ctx.degree(), 3);
            const MultiSeries<2> d = coproduct(a);
            const TensorSeries expected = unit_series(ctx, counit(a));
            for (std::size_t slot : {0u, 1u})
                if (const TensorSeries c = concatenate_slots(antipode_slot(d, slot)); !(c == expected)) return mismatch(c, expected, {{"slot", slot}});
        }
        return std::nullopt;
    });
    rec.property("coproduct multiplicative", [&]() -> Counterexample {
        for (int i = 0; i < N; ++i) {
            const TensorSeries a = random_series(rng, ctx, 0, ctx.degree(), 3);
            const TensorSeries b = random_series(rng, ctx, 0, ctx.degree(), 3);
            const auto l = coproduct(concat_product(a, b)), r = multi_product<2>(coproduct(a), coproduct(b));
            if (!(l == r)) return mismatch(l, r, {{"a", to_json(a)}, {"b", to_json(b)}});
        }
        return std::nullopt;
    });
    rec.property("theta_std group-like", [&]() -> Counterexample {
        for (int i = 0; i < N; ++i) {
            const GroupWord w = random_group_word(rng, o.n, 1 + i % 4);
            const TensorSeries t = theta_std(ctx, w);
            if (!is_group_like(t)) return json{{"theta", to_json(t)}};
        }
        return std::nullopt;
    });
    rec.property("bch associativity", [&]() -> Counterexample {
        for (int i = 0; i < N; ++i) {
            const TensorSeries u = random_positive(rng, ctx, 2), v = random_positive(rng, ctx, 2), w = random_positive(rng, ctx, 2);
            const TensorSeries l = bch(bch(u, v), w), r = bch(u, bch(v, w));
            if (!(l == r)) return mismatch(l, r, {{"u", to_json(u)}, {"v", to_json(v)}, {"w", to_json(w)}});
        }
        return std::nullopt;
    });
    rec.property("exp/log inversion", [&]() -> Counterexample {
        for (int i = 0; i < N; ++i) {
            const TensorSeries u = random_positive(rng, ctx);
            if (const TensorSeries l = log(exp(u)); !(l == u)) return mismatch(l, u);
            const TensorSeries g = unit_series(ctx) + u;
            if (const TensorSeries e = exp(log(g)); !(e == g)) return mismatch(e, g);
        }
        return std::nullopt;
    });
    rec.property("s(z)z - 1 = z/(e^{-z}-1)", [&]() -> Counterexample {
        const int order = std::max(ctx.degree(), 12);
        const PowerSeries1D l = s_series(order).shift_up() - PowerSeries1D({Rational(1)}).truncated(order);
        const PowerSeries1D r = z_over_expm1_neg_series(order).truncated(order);
        if (l == r) return std::nullopt;
        json cex = json::object();
        for (int m = 0; m <= order; ++m) cex[std::to_string(m)] = {to_string(l[m]), to_string(r[m])};
        return cex;
    });
    rec.property("bernoulli numbers match recurrence", [&]() -> Counterexample {
        const auto b = bernoulli_by_recurrence(16);
        for (int m = 2; m <= 16; m += 2)
            if (bernoulli(m) != b[static_cast<std::size_t>(m)]) return json{{"2m", m}, {"series", to_string(bernoulli(m))}, {"recurrence", to_string(b[static_cast<std::size_t>(m)])}};
        return std::nullopt;
    });
}

void mt_suite(Recorder& rec, const VerifyOptions& o)
{
    const auto g0 = AlgebraContext::genus0(o.n, o.degree);
    const auto sp = AlgebraContext::symplectic(o.n, o.degree);
    Rng rng(o.seed + 1);
    const int N = o.samples;

    for (const auto& ctx : {g0, sp}) {
        const std::string tag = ctx.is_genus0() ? " (genus 0)" : " (symplectic)";
        const int low = mt_degree_drop(ctx);
        rec.property("unit" + tag, [&]() -> Counterexample {
            const TensorSeries unit = mt_unit(ctx);
            for (int i = 0; i < N; ++i) {
                const TensorSeries a = random_positive(rng, ctx);
                if (const TensorSeries l = mt(unit, a); !(l == a)) return mismatch(l, a);
                if (const TensorSeries r = mt(a, unit); !(r == a)) return mismatch(r, a);
            }
            return std::nullopt;
        });
        rec.property("associativity" + tag, [&]() -> Counterexample {
            for (int i = 0; i < N; ++i) {
                const TensorSeries a = random_series(rng, ctx, low, ctx.degree(), 3);
                const TensorSeries b = random_series(rng, ctx, low, ctx.degree(), 3);
                const TensorSeries c = random_series(rng, ctx, low, ctx.degree(), 3);
                const TensorSeries l = mt(mt(a, b), c), r = mt(a, mt(b, c));
                if (!(l == r)) return mismatch(l, r, {{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}});
            }
            return std::nullopt;
        });
        rec.property("mt_inverse two-sided" + tag, [&]() -> Counterexample {
            const TensorSeries unit = mt_unit(ctx);
            for (int i = 0; i < N; ++i) {
                TensorSeries z = unit;
                if (ctx.degree() > low) z += random_series(rng, ctx, low + 1, ctx.degree(), 3);
                const TensorSeries m = mt_inverse(z);
                if (const TensorSeries l = mt(z, m); !(l == unit)) return mismatch(l, unit, {{"z", to_json(z)}});
                if (const TensorSeries r = mt(m, z); !(r == unit)) return mismatch(r, unit, {{"z", to_json(z)}});
            }
            return std::nullopt;
        });
    }

    rec.property("embedding compatibility", [&]() -> Counterexample {
        const auto ctx = AlgebraContext::genus0(o.n, std::min(o.degree, 5));
        for (int i = 0; i < N; ++i) {
            const TensorSeries u = random_positive(rng, ctx), v = random_positive(rng, ctx);
            const TensorSeries l = embed(mt_genus0(u, v)), r = mt_symplectic(embed(u), embed(v));
            if (!(l == r)) return mismatch(l, r, {{"u", to_json(u)}, {"v", to_json(v)}});
        }
        return std::nullopt;
    });
    rec.property("Q audit selects the configured convention", [&]() -> Counterexample {
        const auto entries = audit_q_conventions(g0, static_cast<unsigned>(o.seed), std::min(N, 10));
        json table = json::array();
        bool ok = true;
        for (const auto& e : entries) {
            table.push_back({{"convention", to_string(e.convention)}, {"negates_xi", e.negates_xi}, {"negates_x0", e.negates_x0},
                             {"twists_mt", e.twists_mt}, {"involutive", e.involutive}});
            if (e.convention == kAuditedQConvention && !e.passes()) ok = false;
        }
        if (ok) return std::nullopt;
        return table;
    });
}

void theorem_y_suite(Recorder& rec, const VerifyOptions& o)
{
    const auto ctx = AlgebraContext::genus0(o.n, o.degree);
    const TensorSeries y = theorem_y_lhs(ctx);
    rec.property("theorem Y", [&]() -> Counterexample {
        const TensorSeries r = theorem_y_rhs(ctx);
        if (y == r) return std::nullopt;
        return mismatch(y, r);
    });
    rec.property("mt_inverse(Y) = exp(-Xi) - 1", [&]() -> Counterexample {
        const TensorSeries l = mt_inverse(y);
        const TensorSeries r = exp(-xi(ctx)) - unit_series(ctx);
        if (l == r) return std::nullopt;
        return mismatch(l, r);
    });
    rec.property("Q(Y) = -Y - x0^2", [&]() -> Counterexample {
        const TensorSeries x0 = boundary_class(ctx);
        const TensorSeries l = q_automorphism(y);
        const TensorSeries r = -y - concat_product(x0, x0);
        if (l == r) return std::nullopt;
        return mismatch(l, r);
    });
}

/// Ω = ı(Ξ) in Symplectic(g) at degree D.
TensorSeries embedded_xi(int g, int degree)
{
    const TensorSeries x = xi(AlgebraContext::genus0(g, (degree + 1) / 2));
    return truncate(embed(x), degree);
}

/// ω plus a few random terms of degree 3..D.
TensorSeries random_omega(Rng& rng, const AlgebraContext& ctx)
{
    TensorSeries om = symplectic_form(ctx);
    if (ctx.degree() >= 3) om += random_series(rng, ctx, 3, ctx.degree(), 3);
    return om;
}

/// ρ(X, e^{-Ω}) = X and ρ(X, Ω) = X s(Ω) Ω - X for every letter X, checked
/// through `degree`. ⋔ lowers degree, so the work is done one degree higher.
Counterexample check_characterization(const TensorSeries& omega_lifted, int degree)
{
    const AlgebraContext& ctx = omega_lifted.context();
    const OmegaElement om(omega_lifted);
    const TensorSeries kernel = rho_theta_kernel(om);
    const TensorSeries e = exp(-omega_lifted);
    const TensorSeries s_om = apply_series(s_series(ctx.degree()), omega_lifted);
    for (int a = 0; a < ctx.letter_count(); ++a) {
        const TensorSeries x = letter_series(ctx, static_cast<Letter>(a));
        const TensorSeries l1 = truncate(sandwich_pairing(kernel, x, e), degree), r1 = truncate(x, degree);
        if (!(l1 == r1)) return mismatch(l1, r1, {{"letter", ctx.letter_name(static_cast<Letter>(a))}, {"omega", to_json(omega_lifted)}, {"form", "exp"}});
        const TensorSeries l2 = truncate(sandwich_pairing(kernel, x, omega_lifted), degree);
        const TensorSeries r2 = truncate(concat_product(concat_product(x, s_om), omega_lifted) - x, degree);
        if (!(l2 == r2)) return mismatch(l2, r2, {{"letter", ctx.letter_name(static_cast<Letter>(a))}, {"omega", to_json(omega_lifted)}, {"form", "omega"}});
    }
    return std::nullopt;
}

void rho_suite(Recorder& rec, const VerifyOptions& o)
{
    Rng rng(o.seed + 2);
    const int g = std::min(o.n, 3);
    const int D = o.degree;

    rec.property("rho_theta characterization, Omega = embedded Xi", [&]() -> Counterexample { return check_characterization(embedded_xi(g, D + 1), D); });
    rec.property("rho_theta characterization, random Omega", [&]() -> Counterexample {
        const auto lifted = AlgebraContext::symplectic(g, D + 1);
        for (int i = 0; i < o.samples; ++i)
            if (auto cex = check_characterization(random_omega(rng, lifted), D)) return cex;
        return std::nullopt;
    });
    rec.property("embedded rho_std = rho_theta at embedded Xi", [&]() -> Counterexample {
        const auto ctx = AlgebraContext::genus0(o.n, std::clamp(D / 2, 2, 4));
        const OmegaElement om(embed(xi(ctx)));
        const TensorSeries kernel = rho_theta_kernel(om);
        for (int i = 0; i < o.samples; ++i) {
            const TensorSeries a = random_series(rng, ctx, 0, ctx.degree(), 3), b = random_series(rng, ctx, 0, ctx.degree(), 3);
            const TensorSeries l = embed(rho_std(a, b)), r = sandwich_pairing(kernel, embed(a), embed(b));
            if (!(l == r)) return mismatch(l, r, {{"a", to_json(a)}, {"b", to_json(b)}});
        }
        return std::nullopt;
    });
    rec.property("kappa(x_k, x_l) = -K_{k,l}", [&]() -> Counterexample {
        const auto ctx = AlgebraContext::genus0(o.n, D);
        for (int k = 1; k <= o.n; ++k)
            for (int l = 1; l <= o.n; ++l) {
                const MultiSeries<2> lhs = kappa_std(generator_series(ctx, k), generator_series(ctx, l));
                const MultiSeries<2> rhs = -k_tensor(ctx, k, l);
                if (!(lhs == rhs)) return mismatch(lhs, rhs, {{"k", k}, {"l", l}});
            }
        return std::nullopt;
    });
}

void cobracket_suite(Recorder& rec, const VerifyOptions& o)
{
    const auto ctx = AlgebraContext::genus0(o.n, o.degree);
    const CobracketEngine engine(ctx);
    const int L = std::min(3, ctx.degree());

    rec.property("pipeline = closed on words of length <= 3", [&]() -> Counterexample {
        for (const Word& w : word_corpus(ctx, L)) {
            const auto p = engine.mu_pipeline(w), c = engine.mu_closed(w);
            if (!(p == c)) return mismatch(p, c, {{"word", word_to_json(ctx, w)}});
        }
        return std::nullopt;
    });
    for (auto path : {CoactionPath::pipeline, CoactionPath::closed}) {
        rec.property("geometric vanishing (" + to_string(path) + ")", [&]() -> Counterexample {
            for (const auto& [name, d] : simple_loop_deltas(ctx, kFrozenConvention, path))
                if (!d.is_zero()) return json{{"loop", name}, {"delta", to_json(d)}};
            return std::nullopt;
        });
    }
    const auto necklaces = necklace_corpus(ctx, std::min(4, ctx.degree()));
    rec.property("antisymmetry", [&]() -> Counterexample {
        for (const Word& w : necklaces) {
            const CyclicBiSeries d = engine.delta_word(w, CoactionPath::closed);
            if (const CyclicBiSeries s = -swap_slots(d); !(s == d)) return mismatch(s, d, {{"word", word_to_json(ctx, w)}});
        }
        return std::nullopt;
    });
    rec.property("rotation independence", [&]() -> Counterexample {
        for (const Word& w : necklaces) {
            const CyclicBiSeries d = engine.delta_word(w, CoactionPath::closed);
            for (int r = 1; r < w.size(); ++r)
                if (const CyclicBiSeries e = engine.delta_word(w.rotated(r), CoactionPath::closed); !(e == d))
                    return mismatch(e, d, {{"word", word_to_json(ctx, w)}, {"rotation", r}});
        }
        return std::nullopt;
    });
    rec.property("degree lowered by at most one", [&]() -> Counterexample {
        for (const Word& w : necklaces)
            for (const auto& [key, c] : engine.delta_word(w, CoactionPath::closed).terms())
                if (key_degree(key) < w.size() - 1) return json{{"word", word_to_json(ctx, w)}, {"term_degree", key_degree(key)}};
        return std::nullopt;
    });
}

void cojacobi_suite(Recorder& rec, const VerifyOptions& o)
{
    const auto ctx = AlgebraContext::genus0(o.n, o.degree);
    rec.property("co-Jacobi on necklaces of degree <= 4", [&]() -> Counterexample {
        for (const Word& w : necklace_corpus(ctx, std::min(4, ctx.degree()))) {
            CyclicSeries a(ctx);
            a.add_term(w, Rational(1));
            if (const auto d = cojacobi_defect(a); !d.is_zero()) return json{{"necklace", word_to_json(ctx, w)}, {"defect", to_json(d)}};
        }
        return std::nullopt;
    });
    rec.property("co-Jacobi on random combinations", [&]() -> Counterexample {
        Rng rng(o.seed + 3);
        for (int i = 0; i < std::max(1, o.samples / 4); ++i) {
            const CyclicSeries a = cyclic_project(random_series(rng, ctx, 1, std::min(4, ctx.degree()), 3));
            if (const auto d = cojacobi_defect(a); !d.is_zero()) return json{{"input", to_json(a)}, {"defect", to_json(d)}};
        }
        return std::nullopt;
    });
}

json audit_to_json(const SignAuditReport& report)
{
    json entries = json::array();
    for (const auto& e : report.entries)
        entries.push_back({{"convention", to_string(e.convention)},
                           {"paths_agree", e.paths_agree},
                           {"vanishing_pipeline", e.vanishing_pipeline},
                           {"vanishing_closed", e.vanishing_closed},
                           {"cojacobi_pipeline", e.cojacobi_pipeline},
                           {"cojacobi_closed", e.cojacobi_closed},
                           {"first_disagreement", e.first_disagreement},
                           {"passes", e.passes()}});
    return {{"context", context_to_json(report.context)}, {"word_length", report.word_length}, {"necklace_degree", report.necklace_degree},
            {"entries", entries}, {"frozen", to_string(kFrozenConvention)}};
}

void sign_audit_suite(Recorder& rec, const VerifyOptions& o, json& details)
{
    const auto ctx = AlgebraContext::genus0(o.n, o.degree);
    const SignAuditReport report = sign_audit(ctx, std::min(3, o.degree), std::min(4, o.degree));
    details["sign_audit"] = audit_to_json(report);
    const auto passing = report.passing();
    rec.property("exactly one convention passes", [&]() -> Counterexample {
        if (passing.size() == 1) return std::nullopt;
        return audit_to_json(report);
    });
    rec.property("frozen convention passes", [&]() -> Counterexample {
        if (std::find(passing.begin(), passing.end(), kFrozenConvention) != passing.end()) return std::nullopt;
        return audit_to_json(report);
    });
}

}  // namespace

bool SuiteReport::passed() const
{
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

json SuiteReport::to_json() const
{
    json props = json::array();
    for (const auto& p : properties) props.push_back({{"name", p.name}, {"status", p.passed ? "pass" : "fail"}, {"counterexample", p.counterexample}});
    json j = {{"suite", suite}, {"properties", props}};
    if (!details.is_null()) j["details"] = details;
    return j;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"hopf", "mt", "theorem-y", "rho", "cobracket", "cojacobi", "sign-audit", "all"};
    return names;
}

SuiteReport run_suite(const std::string& suite, const VerifyOptions& options)
{
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw PreconditionError("unknown suite '" + suite + "'");
    AlgebraContext::genus0(options.n, options.degree);  // validates n and D

    SuiteReport report{suite, {}, nullptr};
    Recorder rec(report);
    const bool all = suite == "all";
    if (all || suite == "hopf") hopf_suite(rec, options);
    if (all || suite == "mt") mt_suite(rec, options);
    if (all || suite == "theorem-y") theorem_y_suite(rec, options);
    if (all || suite == "rho") rho_suite(rec, options);
    if (all || suite == "cobracket") cobracket_suite(rec, options);
    if (all || suite == "cojacobi") cojacobi_suite(rec, options);
    if (all || suite == "sign-audit") {
        json details = json::object();
        sign_audit_suite(rec, options, details);
        report.details = std::move(details);
    }
    return report;
}

}  // namespace gtlie
