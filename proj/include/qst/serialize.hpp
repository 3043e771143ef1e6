#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qst/couplings.hpp"
#include "qst/evolution.hpp"
#include "qst/experiments.hpp"
#include "qst/hamiltonian.hpp"
#include "qst/symmetry.hpp"

namespace qst {

inline constexpr const char* kLibraryVersion = "0.1.0";

nlohmann::json to_json(const CouplingProfile& profile);         // {"N", "values"}
CouplingProfile coupling_profile_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LatticeEngineering& eng);          // {"axes": [{"N","m"}...]}
LatticeEngineering lattice_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HermitianOperator& op);            // {"dim", "re", "im"}
HermitianOperator hermitian_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PureState& state);                 // [{"re","im"}...]
PureState pure_state_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SlaterState& state);               // column-major orbital list
SlaterState slater_state_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SSMCReport& report);
nlohmann::json to_json(const SPMCReport& report);
nlohmann::json to_json(const FidelityCurve& curve);             // sidecar {"peak_time","peak_value"}
nlohmann::json to_json(const EffectiveModelReport& report);

/// CSV with header "index,eigenvalue".
std::string spectrum_csv(const std::vector<double>& eigenvalues);

/// CSV with header "t,fidelity".
std::string curve_csv(const FidelityCurve& curve);

/// Writes to a temporary file in the target directory, then renames.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace qst
