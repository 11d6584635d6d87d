#pragma once

// Scenario files. Exactly one of these keys per object:
//   {"dc": {"axis": [x, y, z], "angle": radians}}
//   {"dc_matrix": [[re, im], [re, im], [re, im], [re, im]]}          flat row-major 2x2
//   {"cc_bell_diagonal": [p_phi+, p_phi-, p_psi+, p_psi-]}
//   {"cc_matrix": [[[re, im] x 4] x 4]}                              4 rows of 4 entries
// Both matrix keys accept either nested rows or a flat row-major list, and
// entries may be plain real numbers instead of [re, im] pairs.

#include <string>

#include "json.hpp"
#include "qcausal/comb.hpp"

namespace qcausal {

/// Throws InvalidInput with a readable message on schema violations.
Scenario scenario_from_json(const nlohmann::json& j);

/// DC scenarios are written in axis-angle form, CC scenarios as cc_matrix.
nlohmann::json scenario_to_json(const Scenario& s);

Scenario load_scenario(const std::string& path);

}  // namespace qcausal
