#include "gtlie/cyclic.hpp"

namespace gtlie {

CyclicSeries cyclic_project(const TensorSeries& a)
{
    CyclicSeries r(a.context());
    for (const auto& [w, c] : a.terms()) r.add_term(w, c);
    return r;
}

CyclicBiSeries cyclic_project_both(const MultiSeries<2>& m)
{
    CyclicBiSeries r(m.context());
    for (const auto& [k, c] : m.terms()) r.add_term(k, c);
    return r;
}

CoactionSeries cyclic_project_second(const MultiSeries<2>& m)
{
    CoactionSeries r(m.context());
    for (const auto& [k, c] : m.terms()) r.add_term(k, c);
    return r;
}

CyclicBiSeries cyclic_project_first(const CoactionSeries& m)
{
    CyclicBiSeries r(m.context());
    for (const auto& [k, c] : m.terms()) r.add_term(k, c);
    return r;
}

CyclicBiSeries swap_slots(const CyclicBiSeries& m)
{
    CyclicBiSeries r(m.context());
    for (const auto& [k, c] : m.terms()) r.add_term({k[1], k[0]}, c);
    return r;
}

CyclicBiSeries alt(const CyclicBiSeries& m) { return m - swap_slots(m); }

CyclicTriSeries rotate_slots(const CyclicTriSeries& m)
{
    CyclicTriSeries r(m.context());
    for (const auto& [k, c] : m.terms()) r.add_term({k[2], k[0], k[1]}, c);
    return r;
}

}  // namespace gtlie
