#pragma once

#include "gtlie/tensor.hpp"

#include <vector>

namespace gtlie {

// --- Hopf structure -------------------------------------------------------

/// Δ with primitive letters: each word maps to the sum over its 2^m
/// subsequence/complement splittings.
MultiSeries<2> coproduct(const TensorSeries& a);

/// Δ applied to one slot of a K-tensor, producing a (K+1)-tensor.
template <std::size_t K>
MultiSeries<K + 1> coproduct_slot(const MultiSeries<K>& m, std::size_t slot);

/// x_{i_1}...x_{i_m} ↦ (-1)^m x_{i_m}...x_{i_1}.
TensorSeries antipode(const TensorSeries& a);

/// Antipode applied to one slot.
template <std::size_t K, unsigned M>
Sparse<WordTuple<K>, M> antipode_slot(const Sparse<WordTuple<K>, M>& m, std::size_t slot)
{
    Sparse<WordTuple<K>, M> r(m.context());
    for (const auto& [k, c] : m.terms()) {
        WordTuple<K> key = k;
        key[slot] = k[slot].reversed();
        r.add_term(key, (k[slot].size() % 2 == 0) ? c : Rational(-c));
    }
    return r;
}

/// Coefficient of the empty word.
Rational counit(const TensorSeries& a);

/// (ε ⊗ id) for slot = 0, (id ⊗ ε) for slot = 1.
TensorSeries counit_slot(const MultiSeries<2>& m, std::size_t slot);

// --- exp / log / BCH ------------------------------------------------------

/// Requires filtration_degree(u) >= 1.
TensorSeries exp(const TensorSeries& u);
/// Requires counit(a) == 1.
TensorSeries log(const TensorSeries& a);
/// log(exp(u) exp(v)); both arguments in T_{>=1}.
TensorSeries bch(const TensorSeries& u, const TensorSeries& v);

// --- univariate power series ---------------------------------------------

/// c_0 + c_1 z + ... + c_N z^N with exact coefficients.
class PowerSeries1D {
public:
    PowerSeries1D() = default;
    explicit PowerSeries1D(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational operator[](int m) const { return m >= 0 && m < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(m)] : Rational(0); }

    /// Truncated product, result of order min(order(a), order(b)).
    friend PowerSeries1D operator*(const PowerSeries1D& a, const PowerSeries1D& b);
    friend PowerSeries1D operator+(const PowerSeries1D& a, const PowerSeries1D& b);
    friend PowerSeries1D operator-(const PowerSeries1D& a, const PowerSeries1D& b);
    friend bool operator==(const PowerSeries1D& a, const PowerSeries1D& b);

    /// Multiplicative inverse; requires c_0 != 0.
    PowerSeries1D inverse() const;
    /// z * f(z), same order (top coefficient dropped).
    PowerSeries1D shift_up() const;
    PowerSeries1D truncated(int order) const;

private:
    std::vector<Rational> c_;
};

PowerSeries1D exp_series(int order);
/// log(1 + z).
PowerSeries1D log1p_series(int order);
/// s(z) = 1/(e^{-z} - 1) + 1/z.
PowerSeries1D s_series(int order);
/// z / (e^{-z} - 1), by direct series division.
PowerSeries1D z_over_expm1_neg_series(int order);
/// z^2 / (e^{-z} - 1).
PowerSeries1D z2_over_expm1_neg_series(int order);

/// B_{2m} read off from s(z): s(z) = -1/2 - Σ B_{2m}/(2m)! z^{2m-1}.
Rational bernoulli(int two_m);

/// Σ_m c_m u^m, truncated; requires filtration_degree(u) >= 1.
TensorSeries apply_series(const PowerSeries1D& f, const TensorSeries& u);

// --- group-like expansion -------------------------------------------------

/// Freely reduced word in the free generators γ_1..γ_n.
class GroupWord {
public:
    struct Syllable {
        int generator;
        int exponent;
        bool operator==(const Syllable&) const = default;
    };

    GroupWord() = default;
    /// Reduces as it goes: adjacent syllables on the same generator merge.
    explicit GroupWord(const std::vector<Syllable>& syllables);

    static GroupWord boundary_product(int n);  // γ_1 γ_2 ... γ_n

    const std::vector<Syllable>& syllables() const { return syllables_; }
    GroupWord operator*(const GroupWord& other) const;
    GroupWord inverse() const;
    bool operator==(const GroupWord&) const = default;

private:
    void push(Syllable s);
    std::vector<Syllable> syllables_;
};

/// Multiplicative extension of γ_k ↦ exp(x_k).
TensorSeries theta_std(const AlgebraContext& ctx, const GroupWord& w);

/// Δ(a) = a ⊗ a (within truncation) and ε(a) = 1.
bool is_group_like(const TensorSeries& a);

}  // namespace gtlie
