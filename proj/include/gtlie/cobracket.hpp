#pragma once

#include "gtlie/cyclic.hpp"
#include "gtlie/intersection.hpp"

#include <map>
#include <string>
#include <vector>

namespace gtlie {

/// Signs that the printed formulas leave ambiguous.
struct SignConvention {
    /// Sign of the ½·1⊗|x_k|′ term in the single-generator coaction.
    int fkk_half_sign = 1;
    /// Sign σ of κ(x_k, x_l) relative to K_{k,l}. The pipeline uses η = σ·rho_std
    /// inside κ; the closed formula carries σ in front of its K_{k_i k_j} group.
    int k_sign = 1;
    bool operator==(const SignConvention&) const = default;
};

std::string to_string(const SignConvention& c);

/// All four candidates, in audit order.
std::vector<SignConvention> sign_convention_candidates();

/// Fixed by running the sign audit; see docs/sign_audit.md.
inline constexpr SignConvention kFrozenConvention{-1, kPairingOrientation};

enum class CoactionPath { pipeline, closed };
std::string to_string(CoactionPath p);

/// Coaction μ^std and cobracket δ^std on a genus-0 context. The pipeline path
/// builds μ from single-generator values plus κ through the product formula;
/// the closed path evaluates the closed three-group formula. They share only
/// the tensor and Hopf primitives.
class CobracketEngine {
public:
    explicit CobracketEngine(AlgebraContext ctx, SignConvention convention = kFrozenConvention);

    const AlgebraContext& context() const { return ctx_; }
    const SignConvention& convention() const { return convention_; }

    /// μ(x_k) from the simple-loop formula, second slot in N(T).
    const CoactionSeries& mu_fkk_generator(int k) const;
    /// κ(x_k, x_l) computed through rho_std.
    const MultiSeries<2>& kappa_generators(int k, int l) const;

    CoactionSeries mu_pipeline(const Word& w) const;
    CoactionSeries mu_closed(const Word& w) const;
    CoactionSeries mu(const Word& w, CoactionPath path) const;

    /// alt ∘ (|·|′ ⊗ id) ∘ μ on a single word.
    CyclicBiSeries delta_word(const Word& w, CoactionPath path) const;
    /// Linear extension over necklaces (canonical rotation used).
    CyclicBiSeries delta(const CyclicSeries& a, CoactionPath path) const;
    /// (id + τ + τ²)(δ ⊗ id)δ(a), evaluated at the engine's degree. δ can
    /// lower degree by one, so only the part below the top degree is exact.
    CyclicTriSeries cojacobi_raw(const CyclicSeries& a, CoactionPath path) const;

private:
    AlgebraContext ctx_;
    SignConvention convention_;
    std::vector<CoactionSeries> mu_generators_;
    std::vector<std::vector<MultiSeries<2>>> kappa_;
    std::vector<std::vector<MultiSeries<2>>> k_tensors_;
};

// Free-function forms, each building an engine with the frozen convention.
// Series arguments are treated as exact polynomials.
CoactionSeries mu_fkk_generator(const AlgebraContext& ctx, int k);
CoactionSeries mu_std_pipeline(const AlgebraContext& ctx, const Word& w);
CoactionSeries mu_std_closed(const AlgebraContext& ctx, const Word& w);
CyclicBiSeries delta_std(const AlgebraContext& ctx, const Word& w, CoactionPath path = CoactionPath::closed);
CyclicBiSeries delta_std_series(const CyclicSeries& a, CoactionPath path = CoactionPath::closed);
/// Evaluated one degree higher and truncated back, so exact through D.
CyclicTriSeries cojacobi_defect(const CyclicSeries& a, CoactionPath path = CoactionPath::closed);

/// All words of length 1..max_length over the context alphabet.
std::vector<Word> word_corpus(const AlgebraContext& ctx, int max_length);
/// Canonical necklaces of degree 1..max_degree.
std::vector<Word> necklace_corpus(const AlgebraContext& ctx, int max_degree);

/// |θ^std(γ)|′ for γ = γ_1, ..., γ_n and γ_1⋯γ_n.
std::vector<std::pair<std::string, CyclicSeries>> simple_loop_classes(const AlgebraContext& ctx);

/// δ of each simple-loop class, exact through the context degree: the
/// classes are truncations of infinite series and δ may lower degree by one,
/// so they are built one degree higher and the result truncated back.
std::vector<std::pair<std::string, CyclicBiSeries>> simple_loop_deltas(const AlgebraContext& ctx, const SignConvention& convention,
                                                                        CoactionPath path);

struct SignAuditEntry {
    SignConvention convention;
    bool paths_agree = false;
    bool vanishing_pipeline = false;
    bool vanishing_closed = false;
    bool cojacobi_pipeline = false;
    bool cojacobi_closed = false;
    /// First word where the paths differ, empty if none.
    std::string first_disagreement;
    bool passes() const { return paths_agree && vanishing_pipeline && vanishing_closed && cojacobi_pipeline && cojacobi_closed; }
};

struct SignAuditReport {
    AlgebraContext context;
    int word_length = 0;
    int necklace_degree = 0;
    std::vector<SignAuditEntry> entries;

    std::vector<SignConvention> passing() const;
    std::string to_markdown() const;
};

SignAuditReport sign_audit(const AlgebraContext& ctx, int word_length = 3, int necklace_degree = 4);

}  // namespace gtlie
