#pragma once

#include "gtlie/series.hpp"

namespace gtlie {

/// |·|′ : T → N(T). Constants die; words map to their necklace.
CyclicSeries cyclic_project(const TensorSeries& a);

/// (|·|′ ⊗ |·|′).
CyclicBiSeries cyclic_project_both(const MultiSeries<2>& m);
/// (id ⊗ |·|′).
CoactionSeries cyclic_project_second(const MultiSeries<2>& m);
/// (|·|′ ⊗ id) on T ⊗ N(T).
CyclicBiSeries cyclic_project_first(const CoactionSeries& m);

/// u ⊗ v ↦ u ⊗ v - v ⊗ u.
CyclicBiSeries alt(const CyclicBiSeries& m);

/// u ⊗ v ↦ v ⊗ u.
CyclicBiSeries swap_slots(const CyclicBiSeries& m);

/// u ⊗ v ⊗ w ↦ w ⊗ u ⊗ v.
CyclicTriSeries rotate_slots(const CyclicTriSeries& m);

}  // namespace gtlie
