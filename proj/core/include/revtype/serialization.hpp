#pragma once

/// @file serialization.hpp
/// @brief JSON forms of the report types. Field names match the C++ members;
/// the layout is documented in README.md.

#include <nlohmann/json.hpp>

#include "revtype/beltrami.hpp"
#include "revtype/case2.hpp"
#include "revtype/finite_type.hpp"
#include "revtype/profile.hpp"
#include "revtype/verification.hpp"

namespace revtype {

void to_json(nlohmann::json& j, const Tolerances& t);
void to_json(nlohmann::json& j, const GridSpec& g);
void to_json(nlohmann::json& j, const ValidationReport& r);
void to_json(nlohmann::json& j, const StructureDiagnostics& d);
void to_json(nlohmann::json& j, const FitReport& r);
void to_json(nlohmann::json& j, const IdentityResidual& r);
void to_json(nlohmann::json& j, const ReducedResiduals& r);
void to_json(nlohmann::json& j, const DerivativeRelationCheck& r);
void to_json(nlohmann::json& j, const QuarticCoefficients& q);
void to_json(nlohmann::json& j, const Case2Coefficients& c);
void to_json(nlohmann::json& j, const EliminationCheck& e);
void to_json(nlohmann::json& j, const Case2ScanConfig& c);
void to_json(nlohmann::json& j, const ScanArgmin& a);
void to_json(nlohmann::json& j, const Case2Certificate& c);
/// Summary only; the per-point rows go to CSV.
void to_json(nlohmann::json& j, const CheckReport& r);

nlohmann::json matrix_to_json(const Mat3& m);

}  // namespace revtype
