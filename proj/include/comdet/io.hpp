#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "comdet/poly_matrix.hpp"
#include "comdet/poset.hpp"
#include "comdet/sign_system.hpp"
#include "comdet/varchenko.hpp"

namespace comdet {

// {"ground_set": ["e1", ...], "covectors": ["+-0", ...]}
SignSystem systemFromJson(const nlohmann::json& j);
nlohmann::json systemToJson(const SignSystem& s);

// {"elements": [...], "relations": [[a, b], ...]}
FinitePoset posetFromJson(const nlohmann::json& j);
nlohmann::json posetToJson(const FinitePoset& p);

nlohmann::json matrixToJson(const PolyMatrix& m, const GroundSet& ground);
PolyMatrix matrixFromJson(const nlohmann::json& j, const GroundSet& ground);

nlohmann::json axiomReportToJson(const AxiomReport& r);
nlohmann::json factorReportToJson(const FactorReport& r, const GroundSet& ground);

SignSystem loadSystem(const std::string& path);
FinitePoset loadPoset(const std::string& path);

}  // namespace comdet
