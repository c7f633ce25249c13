#pragma once

// Canonical JSON forms.
//   EPoly:   [{"pu": int, "pv": int, "c": "<decimal>"}, ...] sorted by (pu, pv)
//   MSeries: {"window": {"lo": [...], "hi": [...]}, "terms": [{"d": [...], "coeff": <EPoly>}, ...]}
//            with terms sorted lexicographically by d
// Specialized series use the same layout; coefficients are
// [{"e": int, "c": "<decimal>"}, ...], or a bare decimal string for Euler characteristics.

#include <json.hpp>

#include "hyperquot/epoly.hpp"
#include "hyperquot/formulas.hpp"
#include "hyperquot/qseries.hpp"

namespace hq {

nlohmann::json to_json(const EPoly& p);
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const Window& w);
nlohmann::json to_json(const MSeries& s);
/// Euler-specialized series (integer coefficients) become decimal strings.
nlohmann::json to_json(const SpecializedSeries& s, bool integer_coefficients = false);

/// Throws InvalidInput on malformed input.
EPoly epoly_from_json(const nlohmann::json& j);
LaurentPoly laurent_from_json(const nlohmann::json& j);
Window window_from_json(const nlohmann::json& j);
MSeries mseries_from_json(const nlohmann::json& j);

} // namespace hq
