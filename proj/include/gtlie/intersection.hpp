#pragma once

#include "gtlie/mt_pairing.hpp"

namespace gtlie {

/// Ω ∈ ω + T_{≥3} in a symplectic context.
class OmegaElement {
public:
    /// Throws PreconditionError unless `series` is ω plus terms of degree >= 3.
    explicit OmegaElement(TensorSeries series);
    const TensorSeries& series() const { return series_; }
    const AlgebraContext& context() const { return series_.context(); }

private:
    TensorSeries series_;
};

/// (a - ε(a)) ⋔ kernel ⋔ (b - ε(b)); kernel must lie in T_{≥2} (symplectic) or T_{≥1} (genus 0).
TensorSeries sandwich_pairing(const TensorSeries& kernel, const TensorSeries& a, const TensorSeries& b);

/// (-Ω)^{-1} + ω s(Ω) ω.
TensorSeries rho_theta_kernel(const OmegaElement& omega);
TensorSeries rho_theta(const OmegaElement& omega, const TensorSeries& a, const TensorSeries& b);

/// Genus-0 kernel -Σ_{k>l} x_k x_l + Σ x_k^2/(e^{-x_k} - 1).
TensorSeries rho_std_kernel(const AlgebraContext& ctx);
TensorSeries rho_std(const TensorSeries& a, const TensorSeries& b);

/// K_{k,l} = (1 ⊗ S) Δ(ε_{kl} x_k x_l - δ_{kl} x_k^2/(e^{-x_k} - 1)), ε_{kl} = [k > l].
MultiSeries<2> k_tensor(const AlgebraContext& ctx, int k, int l);

/// Sign σ in η = σ·rho_std used when κ is built from the tensorial pairing.
/// With σ = -1, κ(x_k, x_l) = -K_{k,l}; this is the value the coaction sign
/// audit selects (docs/sign_audit.md).
inline constexpr int kPairingOrientation = -1;

/// κ(u, v) = -Σ (1 ⊗ v″) ((1 ⊗ S) Δ η(u′, v′)) (1 ⊗ u″) with η = σ·rho_std,
/// Sweedler components read off the materialized coproducts of u and v.
MultiSeries<2> kappa_std(const TensorSeries& u, const TensorSeries& v, int orientation = kPairingOrientation);

}  // namespace gtlie
