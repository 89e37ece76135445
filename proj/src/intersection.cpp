#include "gtlie/intersection.hpp"

#include <map>

namespace gtlie {

OmegaElement::OmegaElement(TensorSeries series) : series_(std::move(series))
{
    const AlgebraContext& ctx = series_.context();
    if (!ctx.is_symplectic()) throw PreconditionError("Ω must live in a symplectic context");
    if (!homogeneous_part(series_, 0).is_zero() || !homogeneous_part(series_, 1).is_zero())
        throw PreconditionError("Ω must have no terms of degree < 2");
    if (ctx.degree() >= 2 && !(homogeneous_part(series_, 2) == symplectic_form(ctx))) throw PreconditionError("Ω must have degree-2 part ω");
}

namespace {

TensorSeries augmentation_kernel(const TensorSeries& a) { return a - unit_series(a.context(), counit(a)); }

}  // namespace

TensorSeries sandwich_pairing(const TensorSeries& kernel, const TensorSeries& a, const TensorSeries& b)
{
    require_same_context(kernel.context(), a.context(), "sandwich_pairing");
    require_same_context(kernel.context(), b.context(), "sandwich_pairing");
    if (filtration_degree(kernel) < mt_degree_drop(kernel.context())) throw PreconditionError("pairing kernel filtration too low for an associative sandwich");
    const TensorSeries a1 = augmentation_kernel(a);
    const TensorSeries b1 = augmentation_kernel(b);
    if (a1.is_zero() || b1.is_zero()) return TensorSeries(kernel.context());
    return mt(mt(a1, kernel), b1);
}

TensorSeries rho_theta_kernel(const OmegaElement& omega)
{
    const TensorSeries& o = omega.series();
    const TensorSeries w = symplectic_form(omega.context());
    const TensorSeries s = apply_series(s_series(o.context().degree()), o);
    return mt_inverse(-o) + concat_product(concat_product(w, s), w);
}

TensorSeries rho_theta(const OmegaElement& omega, const TensorSeries& a, const TensorSeries& b)
{
    return sandwich_pairing(rho_theta_kernel(omega), a, b);
}

TensorSeries rho_std_kernel(const AlgebraContext& ctx) { return theorem_y_rhs(ctx); }

TensorSeries rho_std(const TensorSeries& a, const TensorSeries& b)
{
    if (!a.context().is_genus0()) throw PreconditionError("rho_std needs a genus-0 context");
    return sandwich_pairing(rho_std_kernel(a.context()), a, b);
}

MultiSeries<2> k_tensor(const AlgebraContext& ctx, int k, int l)
{
    if (!ctx.is_genus0()) throw PreconditionError("k_tensor needs a genus-0 context");
    ctx.generator(k);
    ctx.generator(l);
    TensorSeries core(ctx);
    if (k > l) core.add_term(genus0_word(ctx, {k, l}), Rational(1));
    if (k == l) core -= apply_series(z2_over_expm1_neg_series(ctx.degree()), generator_series(ctx, k));
    return antipode_slot(coproduct(core), 1);
}

namespace {

/// Δa regrouped as Σ_{w″} (Σ c w′) ⊗ w″.
std::map<Word, TensorSeries> sweedler_by_right(const TensorSeries& a)
{
    std::map<Word, TensorSeries> groups;
    const MultiSeries<2> split = coproduct(a);
    for (const auto& [k, c] : split.terms()) {
        auto it = groups.try_emplace(k[1], a.context()).first;
        it->second.add_term(k[0], c);
    }
    return groups;
}

}  // namespace

MultiSeries<2> kappa_std(const TensorSeries& u, const TensorSeries& v, int orientation)
{
    if (orientation != 1 && orientation != -1) throw PreconditionError("kappa_std: orientation must be +1 or -1");
    require_same_context(u.context(), v.context(), "kappa_std");
    const AlgebraContext& ctx = u.context();
    if (!ctx.is_genus0()) throw PreconditionError("kappa_std needs a genus-0 context");
    const TensorSeries kernel = rho_std_kernel(ctx);
    MultiSeries<2> r(ctx);
    const auto us = sweedler_by_right(u);
    const auto vs = sweedler_by_right(v);
    for (const auto& [u2, u1] : us)
        for (const auto& [v2, v1] : vs) {
            if (u2.size() + v2.size() > ctx.degree()) continue;
            TensorSeries rho = sandwich_pairing(kernel, u1, v1);
            rho *= Rational(orientation);
            if (rho.is_zero()) continue;
            const MultiSeries<2> inner = antipode_slot(coproduct(rho), 1);
            r -= multiply_slots<2>({Word{}, v2}, inner, {Word{}, u2});
        }
    return r;
}

}  // namespace gtlie
