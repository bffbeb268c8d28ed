#pragma once

#include <json.hpp>

#include "solchar/characters.hpp"
#include "solchar/fpmod.hpp"
#include "solchar/intersections.hpp"
#include "solchar/lattice.hpp"

namespace solchar {

using nlohmann::json;

/// Plain integer when rational and integral, otherwise
/// {"conductor", "coefficients", "denominator"}.
json to_json(Cyclotomic const &x);
/// Cycles as arrays of 1-based points, the group file format.
json element_json(Group const &G, Elem g);
/// {"order", "generators": [[cycle, ...], ...]}
json subgroup_json(Subgroup const &H);
json witness_json(IntersectionWitness const &w);
json module_json(FpModule const &X);

} // namespace solchar
