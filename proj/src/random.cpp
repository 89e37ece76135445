#include "gtlie/random.hpp"

namespace gtlie {

Rational random_rational(Rng& rng, int bound)
{
    std::uniform_int_distribution<int> num(-bound, bound - 1);
    std::uniform_int_distribution<int> den(1, bound);
    int p = num(rng);
    if (p >= 0) ++p;  // skip zero
    return make_rational(p, den(rng));
}

Word random_word(Rng& rng, const AlgebraContext& ctx, int length)
{
    std::uniform_int_distribution<int> letter(0, ctx.letter_count() - 1);
    Word w;
    for (int i = 0; i < length; ++i) w.push_back(static_cast<Letter>(letter(rng)));
    return w;
}

TensorSeries random_series(Rng& rng, const AlgebraContext& ctx, int min_degree, int max_degree, int terms)
{
    std::uniform_int_distribution<int> degree(min_degree, max_degree);
    TensorSeries r(ctx);
    for (int t = 0; t < terms; ++t) r.add_term(random_word(rng, ctx, degree(rng)), random_rational(rng));
    return r;
}

GroupWord random_group_word(Rng& rng, int n, int syllables)
{
    std::uniform_int_distribution<int> gen(1, n);
    std::uniform_int_distribution<int> expo(-2, 1);
    std::vector<GroupWord::Syllable> s;
    for (int i = 0; i < syllables; ++i) {
        int e = expo(rng);
        if (e >= 0) ++e;
        s.push_back({gen(rng), e});
    }
    return GroupWord(s);
}

}  // namespace gtlie
