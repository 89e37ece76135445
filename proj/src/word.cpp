#include "gtlie/word.hpp"

namespace gtlie {

Word canonical_rotation(const Word& w)
{
    Word best = w;
    for (int k = 1; k < w.size(); ++k) {
        Word r = w.rotated(k);
        if (r < best) best = r;
    }
    return best;
}

Word genus0_word(const AlgebraContext& ctx, std::initializer_list<int> indices)
{
    Word w;
    for (int k : indices) w.push_back(ctx.generator(k));
    return w;
}

}  // namespace gtlie
