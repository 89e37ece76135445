#pragma once

#include "gtlie/series.hpp"

#include <limits>
#include <vector>

namespace gtlie {

inline constexpr int kInfiniteDegree = std::numeric_limits<int>::max();

TensorSeries unit_series(const AlgebraContext& ctx, const Rational& c = Rational(1));
TensorSeries letter_series(const AlgebraContext& ctx, Letter a, const Rational& c = Rational(1));
TensorSeries word_series(const AlgebraContext& ctx, const Word& w, const Rational& c = Rational(1));
/// x_k in a genus-0 context (1-based).
TensorSeries generator_series(const AlgebraContext& ctx, int k);

TensorSeries add(const TensorSeries& a, const TensorSeries& b);
TensorSeries concat_product(const TensorSeries& a, const TensorSeries& b);
TensorSeries power(const TensorSeries& a, int m);
TensorSeries commutator(const TensorSeries& a, const TensorSeries& b);

/// Left/right multiplication by a single word.
TensorSeries multiply_word(const Word& left, const TensorSeries& a, const Word& right);

/// Smallest word length with a nonzero coefficient; kInfiniteDegree for 0.
int filtration_degree(const TensorSeries& a);

template <std::size_t K>
MultiSeries<K> multi_product(const MultiSeries<K>& a, const MultiSeries<K>& b)
{
    require_same_context(a.context(), b.context(), "multi_product");
    const int D = a.context().degree();
    MultiSeries<K> r(a.context());
    for (const auto& [ka, ca] : a.terms()) {
        const int budget = D - key_degree(ka);
        for (const auto& [kb, cb] : b.terms()) {
            if (key_degree(kb) > budget) break;
            WordTuple<K> key;
            for (std::size_t i = 0; i < K; ++i) key[i] = ka[i] + kb[i];
            r.add_term(key, ca * cb);
        }
    }
    return r;
}

/// Slotwise multiplication of every term by fixed words: left[i]·a·right[i].
template <std::size_t K, unsigned M>
Sparse<WordTuple<K>, M> multiply_slots(const WordTuple<K>& left, const Sparse<WordTuple<K>, M>& a, const WordTuple<K>& right)
{
    Sparse<WordTuple<K>, M> r(a.context());
    const int extra = key_degree(left) + key_degree(right);
    for (const auto& [k, c] : a.terms()) {
        if (key_degree(k) + extra > a.context().degree()) break;
        WordTuple<K> key;
        for (std::size_t i = 0; i < K; ++i) key[i] = left[i] + k[i] + right[i];
        r.add_term(key, c);
    }
    return r;
}

/// a ⊗ b.
MultiSeries<2> tensor_product(const TensorSeries& a, const TensorSeries& b);

/// Decomposable element a_1 ⊗ ... ⊗ a_K.
template <std::size_t K>
MultiSeries<K> decomposable(const std::array<TensorSeries, K>& factors)
{
    const AlgebraContext& ctx = factors[0].context();
    MultiSeries<K> r(ctx);
    // Iterative expansion over slots.
    std::vector<std::pair<WordTuple<K>, Rational>> partial{{WordTuple<K>{}, Rational(1)}};
    for (std::size_t i = 0; i < K; ++i) {
        require_same_context(ctx, factors[i].context(), "decomposable");
        std::vector<std::pair<WordTuple<K>, Rational>> next;
        for (const auto& [key, c] : partial)
            for (const auto& [w, cw] : factors[i].terms()) {
                if (key_degree(key) + w.size() > ctx.degree()) break;
                WordTuple<K> k2 = key;
                k2[i] = w;
                next.emplace_back(k2, c * cw);
            }
        partial = std::move(next);
    }
    for (const auto& [key, c] : partial) r.add_term(key, c);
    return r;
}

/// Concatenates the two slots: u ⊗ v ↦ uv.
TensorSeries concatenate_slots(const MultiSeries<2>& m);

/// Images of letters under a continuous algebra homomorphism T(H) → T(H').
/// Entry i is the image of letter i; it must lie in T_{≥1} of the target.
struct LetterImages {
    AlgebraContext target;
    std::vector<TensorSeries> images;
};

/// Applies the multiplicative extension of `images`, truncating at the
/// target degree.
TensorSeries apply_algebra_morphism(const TensorSeries& a, const LetterImages& images);

}  // namespace gtlie
