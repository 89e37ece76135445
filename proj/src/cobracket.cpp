#include "gtlie/cobracket.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gtlie {

std::string to_string(const SignConvention& c)
{
    return std::string("half=") + (c.fkk_half_sign > 0 ? "+" : "-") + ", K=" + (c.k_sign > 0 ? "+" : "-");
}

std::vector<SignConvention> sign_convention_candidates() { return {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}; }

std::string to_string(CoactionPath p) { return p == CoactionPath::pipeline ? "pipeline" : "closed"; }

namespace {

Word power_word(Letter a, int p)
{
    Word w;
    for (int i = 0; i < p; ++i) w.push_back(a);
    return w;
}

/// B_{2q}/(2q)! Σ_{p<2q} (-1)^p C(2q,p) (left x^p right) ⊗ |x^{2q-p}|′, all q.
void add_bernoulli_group(CoactionSeries& out, const Word& left, Letter x, const Word& right)
{
    const int D = out.context().degree();
    const int base = left.size() + right.size();
    for (int q = 1; base + 2 * q <= D; ++q) {
        const Rational bq = bernoulli(2 * q) / factorial(static_cast<unsigned>(2 * q));
        for (int p = 0; p < 2 * q; ++p) {
            const Rational c = bq * binomial(static_cast<unsigned>(2 * q), static_cast<unsigned>(p)) * (p % 2 == 0 ? 1 : -1);
            out.add_term({left + power_word(x, p) + right, power_word(x, 2 * q - p)}, c);
        }
    }
}

}  // namespace

CobracketEngine::CobracketEngine(AlgebraContext ctx, SignConvention convention) : ctx_(ctx), convention_(convention)
{
    if (!ctx_.is_genus0()) throw PreconditionError("cobracket engine needs a genus-0 context");
    const int n = ctx_.rank();
    for (int k = 1; k <= n; ++k) {
        CoactionSeries mu(ctx_);
        const Letter x = ctx_.generator(k);
        mu.add_term({Word{}, Word::single(x)}, make_rational(convention_.fkk_half_sign, 2));
        add_bernoulli_group(mu, Word{}, x, Word{});
        mu_generators_.push_back(std::move(mu));
    }
    kappa_.resize(static_cast<std::size_t>(n));
    k_tensors_.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            kappa_[static_cast<std::size_t>(k - 1)].push_back(kappa_std(generator_series(ctx_, k), generator_series(ctx_, l), convention_.k_sign));
            k_tensors_[static_cast<std::size_t>(k - 1)].push_back(k_tensor(ctx_, k, l));
        }
}

const CoactionSeries& CobracketEngine::mu_fkk_generator(int k) const
{
    ctx_.generator(k);
    return mu_generators_[static_cast<std::size_t>(k - 1)];
}

const MultiSeries<2>& CobracketEngine::kappa_generators(int k, int l) const
{
    ctx_.generator(k);
    ctx_.generator(l);
    return kappa_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)];
}

CoactionSeries CobracketEngine::mu_pipeline(const Word& w) const
{
    const int m = w.size();
    CoactionSeries r(ctx_);
    for (int i = 0; i < m; ++i) {
        const Word prefix = w.slice(0, i), suffix = w.slice(i + 1, m - i - 1);
        r += multiply_slots<2>({prefix, Word{}}, mu_generators_[w[i]], {suffix, Word{}});
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Word prefix = w.slice(0, i);
            const Word middle = w.slice(i + 1, j - i - 1);
            const Word suffix = w.slice(j + 1, m - j - 1);
            const MultiSeries<2> shifted = multiply_slots<2>({Word{}, Word{}}, kappa_[w[i]][w[j]], {suffix, middle});
            r += multiply_slots<2>({prefix, Word{}}, cyclic_project_second(shifted), {Word{}, Word{}});
        }
    return r;
}

CoactionSeries CobracketEngine::mu_closed(const Word& w) const
{
    const int m = w.size();
    MultiSeries<2> k_group(ctx_);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Word prefix = w.slice(0, i);
            const Word middle = w.slice(i + 1, j - i - 1);
            const Word suffix = w.slice(j + 1, m - j - 1);
            k_group += multiply_slots<2>({prefix, Word{}}, k_tensors_[w[i]][w[j]], {suffix, middle});
        }
    CoactionSeries r = cyclic_project_second(k_group);
    r *= Rational(convention_.k_sign);
    for (int i = 0; i < m; ++i) {
        const Word prefix = w.slice(0, i), suffix = w.slice(i + 1, m - i - 1);
        r.add_term({prefix + suffix, Word::single(w[i])}, make_rational(-1, 2));
        add_bernoulli_group(r, prefix, w[i], suffix);
    }
    return r;
}

CoactionSeries CobracketEngine::mu(const Word& w, CoactionPath path) const
{
    return path == CoactionPath::pipeline ? mu_pipeline(w) : mu_closed(w);
}

CyclicBiSeries CobracketEngine::delta_word(const Word& w, CoactionPath path) const { return alt(cyclic_project_first(mu(w, path))); }

CyclicBiSeries CobracketEngine::delta(const CyclicSeries& a, CoactionPath path) const
{
    require_same_context(ctx_, a.context(), "delta");
    CyclicBiSeries r(ctx_);
    for (const auto& [w, c] : a.terms()) {
        CyclicBiSeries d = delta_word(w, path);
        d *= c;
        r += d;
    }
    return r;
}

CyclicTriSeries CobracketEngine::cojacobi_raw(const CyclicSeries& a, CoactionPath path) const
{
    const CyclicBiSeries first = delta(a, path);
    std::map<Word, CyclicBiSeries> memo;
    CyclicTriSeries twice(ctx_);
    for (const auto& [k, c] : first.terms()) {
        auto it = memo.find(k[0]);
        if (it == memo.end()) it = memo.emplace(k[0], delta_word(k[0], path)).first;
        for (const auto& [k2, c2] : it->second.terms()) twice.add_term({k2[0], k2[1], k[1]}, c * c2);
    }
    const CyclicTriSeries once = rotate_slots(twice);
    return twice + once + rotate_slots(once);
}

CoactionSeries mu_fkk_generator(const AlgebraContext& ctx, int k) { return CobracketEngine(ctx).mu_fkk_generator(k); }
CoactionSeries mu_std_pipeline(const AlgebraContext& ctx, const Word& w) { return CobracketEngine(ctx).mu_pipeline(w); }
CoactionSeries mu_std_closed(const AlgebraContext& ctx, const Word& w) { return CobracketEngine(ctx).mu_closed(w); }
CyclicBiSeries delta_std(const AlgebraContext& ctx, const Word& w, CoactionPath path) { return CobracketEngine(ctx).delta_word(w, path); }
CyclicBiSeries delta_std_series(const CyclicSeries& a, CoactionPath path) { return CobracketEngine(a.context()).delta(a, path); }
CyclicTriSeries cojacobi_defect(const CyclicSeries& a, CoactionPath path)
{
    const int D = a.context().degree();
    const CyclicSeries lifted = truncate(a, D + 1);
    return truncate(CobracketEngine(lifted.context()).cojacobi_raw(lifted, path), D);
}

std::vector<Word> word_corpus(const AlgebraContext& ctx, int max_length)
{
    std::vector<Word> out;
    std::function<void(const Word&)> grow = [&](const Word& w) {
        if (!w.empty()) out.push_back(w);
        if (w.size() == max_length) return;
        for (int a = 0; a < ctx.letter_count(); ++a) {
            Word next = w;
            next.push_back(static_cast<Letter>(a));
            grow(next);
        }
    };
    grow(Word{});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> necklace_corpus(const AlgebraContext& ctx, int max_degree)
{
    std::vector<Word> out;
    for (const Word& w : word_corpus(ctx, max_degree))
        if (canonical_rotation(w) == w) out.push_back(w);
    return out;
}

std::vector<std::pair<std::string, CyclicSeries>> simple_loop_classes(const AlgebraContext& ctx)
{
    std::vector<std::pair<std::string, CyclicSeries>> out;
    for (int k = 1; k <= ctx.rank(); ++k)
        out.emplace_back("gamma_" + std::to_string(k), cyclic_project(theta_std(ctx, GroupWord({{k, 1}}))));
    if (ctx.rank() > 1) out.emplace_back("gamma_1...gamma_n", cyclic_project(theta_std(ctx, GroupWord::boundary_product(ctx.rank()))));
    return out;
}

std::vector<std::pair<std::string, CyclicBiSeries>> simple_loop_deltas(const AlgebraContext& ctx, const SignConvention& convention,
                                                                        CoactionPath path)
{
    const AlgebraContext work = ctx.with_degree(ctx.degree() + 1);
    const CobracketEngine engine(work, convention);
    std::vector<std::pair<std::string, CyclicBiSeries>> out;
    for (const auto& [name, cls] : simple_loop_classes(work)) out.emplace_back(name, truncate(engine.delta(cls, path), ctx.degree()));
    return out;
}

std::vector<SignConvention> SignAuditReport::passing() const
{
    std::vector<SignConvention> out;
    for (const auto& e : entries)
        if (e.passes()) out.push_back(e.convention);
    return out;
}

std::string SignAuditReport::to_markdown() const
{
    std::ostringstream os;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "| convention | paths agree | vanishing (pipeline) | vanishing (closed) | co-Jacobi (pipeline) | co-Jacobi (closed) | verdict |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const auto& e : entries) {
        os << "| " << to_string(e.convention) << " | " << yn(e.paths_agree);
        if (!e.first_disagreement.empty()) os << " (first mismatch: " << e.first_disagreement << ")";
        os << " | " << yn(e.vanishing_pipeline) << " | " << yn(e.vanishing_closed) << " | " << yn(e.cojacobi_pipeline) << " | "
           << yn(e.cojacobi_closed) << " | " << (e.passes() ? "PASS" : "fail") << " |\n";
    }
    return os.str();
}

SignAuditReport sign_audit(const AlgebraContext& ctx, int word_length, int necklace_degree)
{
    SignAuditReport report{ctx, word_length, necklace_degree, {}};
    const auto words = word_corpus(ctx, word_length);
    const auto necklaces = necklace_corpus(ctx, necklace_degree);
    const AlgebraContext work = ctx.with_degree(ctx.degree() + 1);
    for (const SignConvention& conv : sign_convention_candidates()) {
        const CobracketEngine engine(ctx, conv);
        const CobracketEngine lifted(work, conv);
        SignAuditEntry e{conv};
        e.paths_agree = true;
        for (const Word& w : words)
            if (!(engine.mu_pipeline(w) == engine.mu_closed(w))) {
                e.paths_agree = false;
                std::string s;
                for (Letter a : w) s += (s.empty() ? "" : ",") + std::to_string(a + 1);
                e.first_disagreement = "(" + s + ")";
                break;
            }
        for (CoactionPath path : {CoactionPath::pipeline, CoactionPath::closed}) {
            bool vanish = true, jacobi = true;
            for (const auto& [name, d] : simple_loop_deltas(ctx, conv, path))
                if (!d.is_zero()) vanish = false;
            for (const Word& nk : necklaces) {
                CyclicSeries a(work);
                a.add_term(nk, Rational(1));
                if (!truncate(lifted.cojacobi_raw(a, path), ctx.degree()).is_zero()) {
                    jacobi = false;
                    break;
                }
            }
            (path == CoactionPath::pipeline ? e.vanishing_pipeline : e.vanishing_closed) = vanish;
            (path == CoactionPath::pipeline ? e.cojacobi_pipeline : e.cojacobi_closed) = jacobi;
        }
        report.entries.push_back(e);
    }
    return report;
}

}  // namespace gtlie
