#pragma once

#include "gtlie/context.hpp"
#include "gtlie/errors.hpp"
#include "gtlie/rational.hpp"
#include "gtlie/word.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>

namespace gtlie {

template <std::size_t K>
using WordTuple = std::array<Word, K>;

inline int key_degree(const Word& w) { return w.size(); }

template <std::size_t K>
int key_degree(const WordTuple<K>& t)
{
    int d = 0;
    for (const auto& w : t) d += w.size();
    return d;
}

/// Orders keys by total degree, then slotwise (length, lexicographic).
struct KeyLess {
    bool operator()(const Word& a, const Word& b) const { return a < b; }

    template <std::size_t K>
    bool operator()(const WordTuple<K>& a, const WordTuple<K>& b) const
    {
        const int da = key_degree(a), db = key_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

/// Sparse exact-rational combination of keys, truncated at the context
/// degree. Bit i of CyclicMask marks slot i as living in the cyclic quotient:
/// such slots are stored as their canonical rotation, and a key with an empty
/// cyclic slot is annihilated. Zero coefficients are never stored.
template <typename Key, unsigned CyclicMask>
class Sparse {
public:
    using key_type = Key;
    using map_type = std::map<Key, Rational, KeyLess>;
    static constexpr unsigned cyclic_mask = CyclicMask;

    explicit Sparse(AlgebraContext ctx) : ctx_(ctx) {}

    const AlgebraContext& context() const { return ctx_; }
    const map_type& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds c * key after normalization; drops keys above the truncation degree.
    void add_term(Key key, const Rational& c)
    {
        if (sgn(c) == 0 || !normalize(key)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    Rational coefficient(Key key) const
    {
        if (!normalize(key)) return Rational(0);
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Largest stored degree; -1 for the zero series.
    int max_degree() const { return terms_.empty() ? -1 : key_degree(terms_.rbegin()->first); }

    Sparse& operator+=(const Sparse& other)
    {
        require_same_context(ctx_, other.ctx_, "add");
        for (const auto& [k, c] : other.terms_) add_term(k, c);
        return *this;
    }
    Sparse& operator-=(const Sparse& other)
    {
        require_same_context(ctx_, other.ctx_, "subtract");
        for (const auto& [k, c] : other.terms_) add_term(k, -c);
        return *this;
    }
    Sparse& operator*=(const Rational& s)
    {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend Sparse operator+(Sparse a, const Sparse& b) { return a += b; }
    friend Sparse operator-(Sparse a, const Sparse& b) { return a -= b; }
    friend Sparse operator-(Sparse a) { return a *= Rational(-1); }
    friend Sparse operator*(const Rational& s, Sparse a) { return a *= s; }
    friend Sparse operator*(Sparse a, const Rational& s) { return a *= s; }

    friend bool operator==(const Sparse& a, const Sparse& b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }

private:
    bool normalize(Word& w) const
    {
        if (w.size() > ctx_.degree()) return false;
        check_letters(w);
        if constexpr ((CyclicMask & 1u) != 0) {
            if (w.empty()) return false;
            w = canonical_rotation(w);
        }
        return true;
    }

    template <std::size_t K>
    bool normalize(WordTuple<K>& t) const
    {
        if (key_degree(t) > ctx_.degree()) return false;
        for (std::size_t i = 0; i < K; ++i) {
            check_letters(t[i]);
            if ((CyclicMask >> i) & 1u) {
                if (t[i].empty()) return false;
                t[i] = canonical_rotation(t[i]);
            }
        }
        return true;
    }

    void check_letters(const Word& w) const
    {
        for (Letter a : w)
            if (a >= ctx_.letter_count()) throw PreconditionError("letter " + std::to_string(int(a)) + " outside alphabet of " + ctx_.describe());
    }

    AlgebraContext ctx_;
    map_type terms_;
};

/// Element of T(H) truncated at degree D.
using TensorSeries = Sparse<Word, 0>;
/// Element of N(T): necklaces of degree >= 1.
using CyclicSeries = Sparse<Word, 1>;
/// Element of the k-fold completed tensor power, truncated in total degree.
template <std::size_t K>
using MultiSeries = Sparse<WordTuple<K>, 0>;
/// Element of N(T)^{⊗k}.
template <std::size_t K>
using CyclicMultiSeries = Sparse<WordTuple<K>, (1u << K) - 1u>;
using CyclicBiSeries = CyclicMultiSeries<2>;
using CyclicTriSeries = CyclicMultiSeries<3>;
/// Element of T ⊗ N(T): target of the coaction.
using CoactionSeries = Sparse<WordTuple<2>, 0b10u>;

template <typename Key, unsigned M>
Sparse<Key, M> homogeneous_part(const Sparse<Key, M>& a, int degree)
{
    Sparse<Key, M> r(a.context());
    for (const auto& [k, c] : a.terms())
        if (key_degree(k) == degree) r.add_term(k, c);
    return r;
}

/// Same terms, re-homed in a context of a different truncation degree.
template <typename Key, unsigned M>
Sparse<Key, M> truncate(const Sparse<Key, M>& a, int degree)
{
    Sparse<Key, M> r(a.context().with_degree(degree));
    for (const auto& [k, c] : a.terms())
        if (key_degree(k) <= degree) r.add_term(k, c);
    return r;
}

}  // namespace gtlie
