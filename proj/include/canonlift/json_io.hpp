#pragma once

#include <json.hpp>

#include "canonlift/equivalence.hpp"

namespace canonlift {

using Json = nlohmann::json;

// {"rank":4,"torsion":[2]}; factors too large for int64 are written as strings.
Json to_json(const AbelianGroup& g);

// [{"kind":..., "site":[...], "parameters":{...}}]; curve words use the surface alphabet.
Json certificate_to_json(const std::vector<MoveInstance>& cert, const Surface& s);
// Throws Error on malformed input.
std::vector<MoveInstance> certificate_from_json(const Json& j, const Surface& s);

Json multicurve_to_json(const WeightedMulticurve& c, const Surface& s);
WeightedMulticurve multicurve_from_json(const Json& j, const Surface& s);

// {"generators":[[curve, ...], ...]} where curve = {"word":"a1","weight":1,"sites":[[comp,gap,sign],...]}
std::vector<WeightedMulticurve> transvections_from_json(const Json& j, const Surface& s);

// {"a1":"a1 b1", ...}
Relabeling relabeling_from_json(const Json& j, const Surface& s);

// {"H1":..., "components":[{"shadow","turning","fiber_mod_e","fiber_degree","base"}]}
Json invariants_json(const Diagram& d, const CircleBundle& bundle);

Json verdict_to_json(const EquivalenceVerdict& v, const Surface& s);

}  // namespace canonlift
