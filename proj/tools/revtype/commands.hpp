#pragma once

#include <optional>
#include <string>

#include <revtype/case2.hpp>
#include <revtype/catalog.hpp>
#include <revtype/verification.hpp>

#include "revtype/config.hpp"
#include "revtype/report.hpp"

namespace revtype::cli {

struct LoadedSurface {
  ProfileCurve profile;
  ParamMap params;                    ///< effective values, defaults expanded
  std::optional<CatalogEntry> entry;  ///< set for --catalog sources
};

/// Throws ProfileError (bad file, unknown name, bad parameters) or
/// std::invalid_argument (no source or two sources).
LoadedSurface load_surface(const RunConfig& config);

// Each command returns its report; input errors are thrown and mapped to
// exit code 1 by the front end.

/// Exit 0 when the profile passes, 1 otherwise. CSV: one row per sample.
CommandResult cmd_validate(const RunConfig& config);

/// Validation, fit, structure check and verdict. Exit 0 on a definite
/// verdict, 2 on Inconclusive, 1 when validation fails. CSV: one row per
/// grid point.
CommandResult cmd_classify(const RunConfig& config);

/// Exit 0 when the check's max residual is within tolerance, 2 otherwise, 1
/// when validation fails. CSV: the per-point residual table.
CommandResult cmd_verify(const RunConfig& config, Check check);

/// Exit 0 when every scanned point and every cell is certified and the
/// mu = 0 exclusion holds, 2 otherwise. CSV: one row per scan point.
CommandResult cmd_case2(const RunConfig& config, const Case2ScanConfig& scan);

/// Value and first three derivatives of an expression at s.
CommandResult cmd_eval(const std::string& expression, double s, const ParamMap& params);

/// Without a name: the catalog listing. With a name: that surface's profile
/// file.
CommandResult cmd_catalog(const RunConfig& config, const std::optional<std::string>& name);

}  // namespace revtype::cli
