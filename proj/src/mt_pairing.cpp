#include "gtlie/mt_pairing.hpp"

#include "gtlie/random.hpp"

#include <vector>

namespace gtlie {

TensorSeries symplectic_form(const AlgebraContext& ctx)
{
    if (!ctx.is_symplectic()) throw PreconditionError("symplectic_form needs a symplectic context");
    TensorSeries w(ctx);
    for (int i = 1; i <= ctx.rank(); ++i) {
        w.add_term(Word{ctx.a_letter(i), ctx.b_letter(i)}, Rational(1));
        w.add_term(Word{ctx.b_letter(i), ctx.a_letter(i)}, Rational(-1));
    }
    return w;
}

TensorSeries boundary_class(const AlgebraContext& ctx)
{
    if (!ctx.is_genus0()) throw PreconditionError("x_0 needs a genus-0 context");
    TensorSeries x0(ctx);
    for (int k = 1; k <= ctx.rank(); ++k) x0.add_term(Word::single(ctx.generator(k)), Rational(-1));
    return x0;
}

TensorSeries mt_unit(const AlgebraContext& ctx) { return ctx.is_genus0() ? boundary_class(ctx) : -symplectic_form(ctx); }

int mt_degree_drop(const AlgebraContext& ctx) { return ctx.is_genus0() ? 1 : 2; }

namespace {

using Bucket = std::vector<std::pair<const Word*, const Rational*>>;

/// b's terms grouped by first letter, each bucket in increasing degree.
std::vector<Bucket> index_by_first_letter(const TensorSeries& b)
{
    std::vector<Bucket> buckets(static_cast<std::size_t>(b.context().letter_count()));
    for (const auto& [w, c] : b.terms()) buckets[w.front()].emplace_back(&w, &c);
    return buckets;
}

void require_positive_filtration(const TensorSeries& a, const char* op)
{
    if (filtration_degree(a) < 1) throw PreconditionError(std::string(op) + ": operands must have zero constant term");
}

}  // namespace

TensorSeries mt_symplectic(const TensorSeries& a, const TensorSeries& b)
{
    require_same_context(a.context(), b.context(), "mt_symplectic");
    const AlgebraContext& ctx = a.context();
    if (!ctx.is_symplectic()) throw PreconditionError("mt_symplectic needs a symplectic context");
    require_positive_filtration(a, "mt_symplectic");
    require_positive_filtration(b, "mt_symplectic");
    const auto buckets = index_by_first_letter(b);
    const int D = ctx.degree();
    TensorSeries r(ctx);
    for (const auto& [wa, ca] : a.terms()) {
        const Letter last = wa.back();
        const Letter partner = static_cast<Letter>(last ^ 1u);
        const int sign = ctx.pairing(last, partner);
        const Word head = wa.drop_back();
        for (const auto& [wb, cb] : buckets[partner]) {
            if (wa.size() + wb->size() - 2 > D) break;
            r.add_term(head + wb->drop_front(), sign * ca * *cb);
        }
    }
    return r;
}

TensorSeries mt_genus0(const TensorSeries& a, const TensorSeries& b)
{
    require_same_context(a.context(), b.context(), "mt_genus0");
    const AlgebraContext& ctx = a.context();
    if (!ctx.is_genus0()) throw PreconditionError("mt_genus0 needs a genus-0 context");
    require_positive_filtration(a, "mt_genus0");
    require_positive_filtration(b, "mt_genus0");
    const auto buckets = index_by_first_letter(b);
    const int D = ctx.degree();
    TensorSeries r(ctx);
    for (const auto& [wa, ca] : a.terms()) {
        const Word head = wa.drop_back();
        for (const auto& [wb, cb] : buckets[wa.back()]) {
            if (wa.size() + wb->size() - 1 > D) break;
            r.add_term(head + *wb, -ca * *cb);
        }
    }
    return r;
}

TensorSeries mt(const TensorSeries& a, const TensorSeries& b) { return a.context().is_genus0() ? mt_genus0(a, b) : mt_symplectic(a, b); }

TensorSeries mt_inverse(const TensorSeries& z)
{
    const AlgebraContext& ctx = z.context();
    const int drop = mt_degree_drop(ctx);
    const int D = ctx.degree();
    const TensorSeries unit = mt_unit(ctx);
    std::vector<TensorSeries> zp;
    for (int d = 0; d <= D; ++d) zp.push_back(homogeneous_part(z, d));
    for (int d = 0; d < drop; ++d)
        if (!zp[static_cast<std::size_t>(d)].is_zero()) throw PreconditionError("mt_inverse: argument must start with the ⋔-unit");
    if (drop <= D && !(zp[static_cast<std::size_t>(drop)] == homogeneous_part(unit, drop)))
        throw PreconditionError("mt_inverse: leading term is not the ⋔-unit");

    // (Z ⋔ M)_d = Σ_i Z_i ⋔ M_{d+drop-i}; the i = drop term is M_d itself.
    std::vector<TensorSeries> mp(static_cast<std::size_t>(D + 1), TensorSeries(ctx));
    if (drop <= D) mp[static_cast<std::size_t>(drop)] = homogeneous_part(unit, drop);
    for (int d = drop + 1; d <= D; ++d) {
        TensorSeries acc(ctx);
        for (int i = drop + 1; i <= d; ++i) {
            const auto& zi = zp[static_cast<std::size_t>(i)];
            const auto& mj = mp[static_cast<std::size_t>(d + drop - i)];
            if (zi.is_zero() || mj.is_zero()) continue;
            acc -= mt(zi, mj);
        }
        mp[static_cast<std::size_t>(d)] = std::move(acc);
    }
    TensorSeries r(ctx);
    for (const auto& part : mp) r += part;
    return r;
}

TensorSeries embed(const TensorSeries& a)
{
    const AlgebraContext& src = a.context();
    if (!src.is_genus0()) throw PreconditionError("embed needs a genus-0 source");
    LetterImages images{AlgebraContext::symplectic(src.rank(), 2 * src.degree()), {}};
    for (int k = 1; k <= src.rank(); ++k) {
        TensorSeries img(images.target);
        img.add_term(Word{images.target.a_letter(k), images.target.b_letter(k)}, Rational(1));
        img.add_term(Word{images.target.b_letter(k), images.target.a_letter(k)}, Rational(-1));
        images.images.push_back(std::move(img));
    }
    return apply_algebra_morphism(a, images);
}

TensorSeries xi(const AlgebraContext& ctx)
{
    if (!ctx.is_genus0()) throw PreconditionError("xi needs a genus-0 context");
    TensorSeries r = generator_series(ctx, 1);
    for (int k = 2; k <= ctx.rank(); ++k) r = bch(r, generator_series(ctx, k));
    return r;
}

std::string to_string(QConvention c) { return c == QConvention::shifted ? "x_k -> -x_{n-k}" : "x_k -> -x_{n+1-k}"; }

TensorSeries q_automorphism(const TensorSeries& a, QConvention convention)
{
    const AlgebraContext& ctx = a.context();
    if (!ctx.is_genus0()) throw PreconditionError("q_automorphism needs a genus-0 context");
    const int n = ctx.rank();
    LetterImages images{ctx, {}};
    for (int k = 1; k <= n; ++k) {
        const int target = (convention == QConvention::mirrored) ? n + 1 - k : n - k;
        images.images.push_back(target == 0 ? -boundary_class(ctx) : -generator_series(ctx, target));
    }
    return apply_algebra_morphism(a, images);
}

std::vector<QAuditEntry> audit_q_conventions(const AlgebraContext& ctx, unsigned seed, int samples)
{
    std::vector<QAuditEntry> out;
    const TensorSeries x = xi(ctx);
    const TensorSeries x0 = boundary_class(ctx);
    for (QConvention c : {QConvention::shifted, QConvention::mirrored}) {
        QAuditEntry e{c};
        e.negates_xi = q_automorphism(x, c) == -x;
        e.negates_x0 = q_automorphism(x0, c) == -x0;
        Rng rng(seed);
        e.twists_mt = true;
        e.involutive = true;
        for (int s = 0; s < samples; ++s) {
            const int top = std::min(ctx.degree(), 4);
            const TensorSeries u = random_series(rng, ctx, 1, top, 4);
            const TensorSeries v = random_series(rng, ctx, 1, top, 4);
            if (!(q_automorphism(mt_genus0(u, v), c) == -mt_genus0(q_automorphism(u, c), q_automorphism(v, c)))) e.twists_mt = false;
            if (!(q_automorphism(q_automorphism(u, c), c) == u)) e.involutive = false;
        }
        out.push_back(e);
    }
    return out;
}

TensorSeries theorem_y_lhs(const AlgebraContext& ctx)
{
    const TensorSeries x = xi(ctx);
    const TensorSeries x0 = boundary_class(ctx);
    const TensorSeries s = apply_series(s_series(ctx.degree()), x);
    return mt_inverse(-x) + concat_product(concat_product(x0, s), x0);
}

TensorSeries theorem_y_rhs(const AlgebraContext& ctx)
{
    if (!ctx.is_genus0()) throw PreconditionError("theorem_y_rhs needs a genus-0 context");
    const int n = ctx.rank();
    TensorSeries r(ctx);
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l < k; ++l) r.add_term(genus0_word(ctx, {k, l}), Rational(-1));
    const PowerSeries1D f = z2_over_expm1_neg_series(ctx.degree());
    for (int k = 1; k <= n; ++k) r += apply_series(f, generator_series(ctx, k));
    return r;
}

}  // namespace gtlie
