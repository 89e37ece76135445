#include "gtlie/tensor.hpp"

#include <functional>

namespace gtlie {

TensorSeries unit_series(const AlgebraContext& ctx, const Rational& c)
{
    TensorSeries r(ctx);
    r.add_term(Word{}, c);
    return r;
}

TensorSeries letter_series(const AlgebraContext& ctx, Letter a, const Rational& c)
{
    TensorSeries r(ctx);
    r.add_term(Word::single(a), c);
    return r;
}

TensorSeries word_series(const AlgebraContext& ctx, const Word& w, const Rational& c)
{
    TensorSeries r(ctx);
    r.add_term(w, c);
    return r;
}

TensorSeries generator_series(const AlgebraContext& ctx, int k) { return letter_series(ctx, ctx.generator(k)); }

TensorSeries add(const TensorSeries& a, const TensorSeries& b) { return a + b; }

TensorSeries concat_product(const TensorSeries& a, const TensorSeries& b)
{
    require_same_context(a.context(), b.context(), "concat_product");
    const int D = a.context().degree();
    TensorSeries r(a.context());
    for (const auto& [wa, ca] : a.terms()) {
        const int budget = D - wa.size();
        for (const auto& [wb, cb] : b.terms()) {
            if (wb.size() > budget) break;
            r.add_term(wa + wb, ca * cb);
        }
    }
    return r;
}

TensorSeries power(const TensorSeries& a, int m)
{
    TensorSeries r = unit_series(a.context());
    for (int i = 0; i < m; ++i) r = concat_product(r, a);
    return r;
}

TensorSeries commutator(const TensorSeries& a, const TensorSeries& b) { return concat_product(a, b) - concat_product(b, a); }

TensorSeries multiply_word(const Word& left, const TensorSeries& a, const Word& right)
{
    TensorSeries r(a.context());
    const int extra = left.size() + right.size();
    for (const auto& [w, c] : a.terms()) {
        if (w.size() + extra > a.context().degree()) break;
        r.add_term(left + w + right, c);
    }
    return r;
}

int filtration_degree(const TensorSeries& a) { return a.is_zero() ? kInfiniteDegree : a.terms().begin()->first.size(); }

MultiSeries<2> tensor_product(const TensorSeries& a, const TensorSeries& b) { return decomposable<2>({a, b}); }

TensorSeries concatenate_slots(const MultiSeries<2>& m)
{
    TensorSeries r(m.context());
    for (const auto& [k, c] : m.terms()) r.add_term(k[0] + k[1], c);
    return r;
}

TensorSeries apply_algebra_morphism(const TensorSeries& a, const LetterImages& images)
{
    const AlgebraContext& src = a.context();
    if (static_cast<int>(images.images.size()) != src.letter_count())
        throw PreconditionError("algebra morphism needs one image per letter");
    std::vector<std::vector<std::pair<Word, Rational>>> table;
    for (const auto& img : images.images) {
        require_same_context(img.context(), images.target, "apply_algebra_morphism");
        if (filtration_degree(img) < 1) throw PreconditionError("letter images must lie in T_{>=1}");
        table.emplace_back(img.terms().begin(), img.terms().end());
    }
    const int D = images.target.degree();
    TensorSeries r(images.target);
    for (const auto& [w, c] : a.terms()) {
        std::function<void(int, const Word&, const Rational&)> expand = [&](int pos, const Word& acc, const Rational& coeff) {
            if (pos == w.size()) {
                r.add_term(acc, coeff);
                return;
            }
            // Every remaining letter contributes degree >= 1.
            const int budget = D - acc.size() - (w.size() - pos - 1);
            for (const auto& [piece, cp] : table[w[pos]]) {
                if (piece.size() > budget) break;
                expand(pos + 1, acc + piece, coeff * cp);
            }
        };
        expand(0, Word{}, c);
    }
    return r;
}

}  // namespace gtlie
