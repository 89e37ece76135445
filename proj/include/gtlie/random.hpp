#pragma once

#include "gtlie/hopf.hpp"

#include <random>

namespace gtlie {

using Rng = std::mt19937_64;

/// Small random rational, numerator in [-bound, bound] \ {0}, denominator in [1, bound].
Rational random_rational(Rng& rng, int bound = 5);

Word random_word(Rng& rng, const AlgebraContext& ctx, int length);

/// `terms` random words with degrees in [min_degree, max_degree].
TensorSeries random_series(Rng& rng, const AlgebraContext& ctx, int min_degree, int max_degree, int terms);

/// Reduced random word with `syllables` syllables, exponents in [-2, 2].
GroupWord random_group_word(Rng& rng, int n, int syllables);

}  // namespace gtlie
