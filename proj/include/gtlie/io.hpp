#pragma once

#include "gtlie/hopf.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace gtlie {

using json = nlohmann::json;

// Canonical JSON: {"mode":"genus0","n":3,"degree":8,"terms":[...]} with
// terms in (degree, lexicographic) order and coefficients as exact strings.
// Genus-0 letters are 1-based integers, symplectic letters "A1", "B1", ...

json context_to_json(const AlgebraContext& ctx);
AlgebraContext context_from_json(const json& j);

json word_to_json(const AlgebraContext& ctx, const Word& w);
Word word_from_json(const AlgebraContext& ctx, const json& j);

json to_json(const TensorSeries& a);
json to_json(const CyclicSeries& a);
json to_json(const MultiSeries<2>& a);
json to_json(const MultiSeries<3>& a);
json to_json(const CoactionSeries& a);
json to_json(const CyclicBiSeries& a);
json to_json(const CyclicTriSeries& a);

TensorSeries tensor_series_from_json(const json& j);
CyclicSeries cyclic_series_from_json(const json& j);

/// Human-readable rendering, e.g. "1 + x1 - 1/2 x1*x2" or "|x1*x2| (x) |x1|".
std::string to_text(const TensorSeries& a);
std::string to_text(const CyclicSeries& a);
std::string to_text(const MultiSeries<2>& a);
std::string to_text(const CoactionSeries& a);
std::string to_text(const CyclicBiSeries& a);
std::string to_text(const CyclicTriSeries& a);

/// Parses "x1 - 1/2 x1*x2 + 3" (genus 0) or "A1*B1 - B1*A1" (symplectic).
/// Letters may be juxtaposed ("x1x2"). Throws PreconditionError.
TensorSeries parse_series(const AlgebraContext& ctx, std::string_view text);

/// Comma-separated letters: "1,2,1" or "x1,x2" (genus 0), "A1,B1" (symplectic).
Word parse_word(const AlgebraContext& ctx, std::string_view text);

/// Comma-separated generator powers, "1,2^-1,1^2" = γ_1 γ_2^{-1} γ_1^2.
GroupWord parse_group_word(std::string_view text);

}  // namespace gtlie
