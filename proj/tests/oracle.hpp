#pragma once

// Slow, independent reference computations used to cross-check the engine.
// Nothing here calls the engine's product, Hopf or pairing code.

#include "gtlie/series.hpp"

#include <map>
#include <vector>

namespace oracle {

using gtlie::AlgebraContext;
using gtlie::Letter;
using gtlie::Rational;
using gtlie::Word;

using Poly = std::map<std::vector<int>, Rational>;

inline void add_to(Poly& p, const std::vector<int>& w, const Rational& c)
{
    if (c == 0) return;
    auto& slot = p[w];
    slot += c;
    if (slot == 0) p.erase(w);
}

inline Poly from_series(const gtlie::TensorSeries& a)
{
    Poly p;
    for (const auto& [w, c] : a.terms()) add_to(p, std::vector<int>(w.begin(), w.end()), c);
    return p;
}

inline gtlie::TensorSeries to_series(const AlgebraContext& ctx, const Poly& p)
{
    gtlie::TensorSeries r(ctx);
    for (const auto& [w, c] : p) {
        Word word;
        for (int a : w) word.push_back(static_cast<Letter>(a));
        r.add_term(word, c);
    }
    return r;
}

inline Poly multiply(const Poly& a, const Poly& b, int degree)
{
    Poly r;
    for (const auto& [u, c] : a)
        for (const auto& [v, d] : b) {
            if (static_cast<int>(u.size() + v.size()) > degree) continue;
            std::vector<int> w = u;
            w.insert(w.end(), v.begin(), v.end());
            add_to(r, w, c * d);
        }
    return r;
}

/// Bernoulli numbers from Σ_{j=0}^{m} C(m+1, j) B_j = 0.
inline std::vector<Rational> bernoulli_numbers(int top)
{
    std::vector<Rational> b(static_cast<std::size_t>(top + 1));
    b[0] = 1;
    for (int m = 1; m <= top; ++m) {
        Rational acc = 0;
        Rational binom = 1;  // C(m+1, j)
        for (int j = 0; j < m; ++j) {
            acc += binom * b[static_cast<std::size_t>(j)];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b[static_cast<std::size_t>(m)] = -acc / (m + 1);
    }
    return b;
}

/// Coefficients of z^2/(e^{-z}-1), from z/(e^z-1) = Σ B_j z^j/j! (B_1 = -1/2)
/// evaluated at -z: z/(e^{-z}-1) = -Σ B_j (-z)^j/j!.
inline std::vector<Rational> z2_over_expm1_neg(int order)
{
    const auto b = bernoulli_numbers(order);
    std::vector<Rational> c(static_cast<std::size_t>(order + 1));
    Rational fact = 1;
    for (int j = 0; j + 1 <= order; ++j) {
        if (j > 0) fact *= j;
        const Rational sign = (j % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(j + 1)] = -b[static_cast<std::size_t>(j)] * sign / fact;
    }
    return c;
}

/// Δ of a word, by iterating over all 2^m letter subsets.
inline std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> coproduct_word(const std::vector<int>& w)
{
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> r;
    const std::size_t m = w.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> left, right;
        for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1u ? left : right).push_back(w[i]);
        r[{left, right}] += 1;
    }
    return r;
}

/// Genus-0 ⋔ on two words (0-based letters), straight from the contraction rule.
inline Poly mt_genus0_words(const std::vector<int>& u, const std::vector<int>& v)
{
    Poly r;
    if (u.empty() || v.empty() || u.back() != v.front()) return r;
    std::vector<int> w(u.begin(), u.end() - 1);
    w.insert(w.end(), v.begin(), v.end());
    add_to(r, w, Rational(-1));
    return r;
}

inline Poly mt_genus0(const Poly& a, const Poly& b, int degree)
{
    Poly r;
    for (const auto& [u, c] : a)
        for (const auto& [v, d] : b)
            for (const auto& [w, e] : mt_genus0_words(u, v))
                if (static_cast<int>(w.size()) <= degree) add_to(r, w, c * d * e);
    return r;
}

/// Least rotation by generating every rotation.
inline std::vector<int> least_rotation(const std::vector<int>& w)
{
    std::vector<int> best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::vector<int> r(w.begin() + static_cast<long>(k), w.end());
        r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(k));
        if (r < best) best = r;
    }
    return best;
}

}  // namespace oracle
