#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "sievelab/sieve_core.hpp"

namespace sievelab {

// JSON schema (all rationals are strings "p/q"; complex numbers are [re, im]
// pairs; matrices are row-major arrays of such pairs):
//
// SieveSystem:   {"places": [{"label": int, "size": int,
//                             "density": ["p/q", ...],
//                             "omega": [int, ...]}]}        (omega = member indices)
// SiftableSample:{"items": [{"weight": "p/q", "values": [int, ...]}]}
// GramDelta:     {"index": [{"places": [...], "fns": [...]}],
//                 "matrix": [[[re, im], ...], ...],
//                 "top_eigenvalue": double, "min_eigenvalue": double}

nlohmann::json to_json(const SieveSystem& sys);
nlohmann::json to_json(const SiftableSample& sample);
nlohmann::json to_json(const GramDelta& gram);

SieveSystem system_from_json(const nlohmann::json& j);
SiftableSample sample_from_json(const nlohmann::json& j);
GramDelta gram_from_json(const nlohmann::json& j);

}  // namespace sievelab
