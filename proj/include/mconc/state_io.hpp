#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "mconc/density_matrix.hpp"
#include "mconc/state_vector.hpp"

namespace mconc {

// Deserialized state file: exactly one of pure / mixed is set.
struct LoadedState {
  std::optional<StateVector> pure;
  std::optional<DensityMatrix> mixed;

  bool is_pure() const { return pure.has_value(); }
  const SystemShape& shape() const {
    return is_pure() ? pure->shape() : mixed->shape();
  }
};

// {"dims":[...], "kind":"pure"|"mixed", "amplitudes":[[re,im]..] |
//  "matrix":[[[re,im]..]..], "renormalize": bool (optional)}
LoadedState state_from_json(const nlohmann::json& j);
LoadedState load_state(const std::string& path);

nlohmann::json state_to_json(const StateVector& psi);
nlohmann::json state_to_json(const DensityMatrix& rho);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace mconc
