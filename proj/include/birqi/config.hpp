#pragma once
// config.hpp — JSON model/state configuration: presets, parsing with
// field-level diagnostics, serialization that round-trips exactly.
//
// A model config is a JSON object with keys dim_A, dim_B, ancilla_dim,
// H_A, H_B, lambda, V, W.  Matrices are nested arrays whose entries are
// [re, im] pairs (bare numbers are accepted on input and read as real).
// A "preset" key expands a named preset first; remaining keys override it.

#include <string>
#include <vector>

#include <json.hpp>

#include "birqi/errors.hpp"
#include "birqi/model.hpp"

namespace birqi::config {

// Names accepted by load_model_config when the argument is not a file.
std::vector<std::string> preset_names();

// Build a named preset: "emission" (the two-qubit emission model) or
// "chainN" (the N-level thermal chain, N >= 1).  Throws ConfigError on
// unknown names.
BipartiteModel preset_model(const std::string& name);

// Parse a complex matrix from nested arrays of [re, im] pairs (or bare
// numbers).  `field` names the config key in diagnostics.
Matrix matrix_from_json(const nlohmann::json& j, const std::string& field);

// Serialize with every entry as an explicit [re, im] pair.
nlohmann::json matrix_to_json(const Matrix& m);

// Full model <-> JSON.  model_from_json honors a "preset" base key and
// validates the assembled model; errors surface as ConfigError with the
// offending field named.  model_to_json(model_from_json(j)) re-parses to
// an identical model (exact double round-trip).
BipartiteModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const BipartiteModel& m);

// Read a model from `spec`: an existing file is parsed as JSON; otherwise
// the name is looked up as a preset; otherwise ConfigError listing the
// presets.
BipartiteModel load_model_config(const std::string& spec);

// Resolve an initial-state spec: a basis-state name "e<i>e<j>" (projector
// onto e_i ⊗ e_j) or a path to a JSON file holding a density matrix
// (bare nested arrays, or an object with a "rho" key).  The state must be
// dim_sys x dim_sys with density defect <= tol.
Matrix parse_initial_state(const std::string& spec, const BipartiteModel& m,
                           double tol);

// Projector onto the highest basis state e_{dA-1} ⊗ e_{dB-1}, used when
// a command needs an initial state and none was given.
Matrix default_initial_state(const BipartiteModel& m);

// Validation tolerance for run-time state checks: BIRQI_TOL from the
// environment when set (must parse as a positive number), else 1e-9.
double validation_tolerance();

}  // namespace birqi::config
