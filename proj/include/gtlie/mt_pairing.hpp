#pragma once

#include "gtlie/hopf.hpp"

#include <string>
#include <vector>

namespace gtlie {

/// ω = Σ A_i B_i - B_i A_i (symplectic context).
TensorSeries symplectic_form(const AlgebraContext& ctx);
/// x_0 = -Σ x_k (genus-0 context).
TensorSeries boundary_class(const AlgebraContext& ctx);

/// Two-sided unit of ⋔: -ω (symplectic) or x_0 (genus 0).
TensorSeries mt_unit(const AlgebraContext& ctx);
/// Degree by which one application of ⋔ lowers total degree (2 or 1).
int mt_degree_drop(const AlgebraContext& ctx);

/// (X_1..X_l) ⋔ (Y_1..Y_m) = (X_l·Y_1) X_1..X_{l-1} Y_2..Y_m.
TensorSeries mt_symplectic(const TensorSeries& a, const TensorSeries& b);
/// x_{i_1}..x_{i_l} ⋔ x_{j_1}..x_{j_m} = -δ_{i_l j_1} x_{i_1}..x_{i_{l-1}} x_{j_1}..x_{j_m}.
TensorSeries mt_genus0(const TensorSeries& a, const TensorSeries& b);
/// Dispatches on the context mode.
TensorSeries mt(const TensorSeries& a, const TensorSeries& b);

/// Two-sided ⋔-inverse of Z ∈ unit + (higher), solved degree by degree.
TensorSeries mt_inverse(const TensorSeries& z);

/// ı: x_k ↦ A_k B_k - B_k A_k into Symplectic(n) with degree 2D.
TensorSeries embed(const TensorSeries& a);

/// Ξ = x_1 ∗ x_2 ∗ ... ∗ x_n (left-to-right BCH fold).
TensorSeries xi(const AlgebraContext& ctx);

/// Candidate index conventions for the generator-reversing automorphism Q.
enum class QConvention {
    /// x_k ↦ -x_{n-k}, with x_0 = -Σ x_j.
    shifted,
    /// x_k ↦ -x_{n+1-k}.
    mirrored,
};

/// The convention that passes the Q audit (see audit_q_conventions).
inline constexpr QConvention kAuditedQConvention = QConvention::mirrored;

std::string to_string(QConvention c);

TensorSeries q_automorphism(const TensorSeries& a, QConvention convention = kAuditedQConvention);

struct QAuditEntry {
    QConvention convention;
    bool negates_xi = false;          // Q(Ξ) = -Ξ
    bool negates_x0 = false;          // Q(x_0) = -x_0
    bool twists_mt = false;           // Q(u⋔v) = -(Qu)⋔(Qv) on the sample
    bool involutive = false;          // Q(Q(a)) = a on the sample
    bool passes() const { return negates_xi && negates_x0 && twists_mt; }
};

/// Evaluates both Q candidates on (ctx) with `samples` random (u, v) pairs.
std::vector<QAuditEntry> audit_q_conventions(const AlgebraContext& ctx, unsigned seed, int samples);

/// mt_inverse(-Ξ) + x_0 s(Ξ) x_0.
TensorSeries theorem_y_lhs(const AlgebraContext& ctx);
/// -Σ_{k>l} x_k x_l + Σ_k x_k^2/(e^{-x_k} - 1).
TensorSeries theorem_y_rhs(const AlgebraContext& ctx);

}  // namespace gtlie
