#pragma once

/// @file profile_io.hpp
/// @brief Profile definition files.
///
/// A profile file is a JSON object:
///
///     {
///       "name": "catenoid",
///       "f": "sqrt(c^2+s^2)",
///       "g": "c*asinh(s/c)",
///       "s_min": -2.0,
///       "s_max": 2.0,
///       "params": {"c": 1.0},
///       "excluded_intervals": [[-0.1, 0.1]]
///     }
///
/// "params" and "excluded_intervals" are optional. f and g use the expression
/// grammar of expression.hpp; identifiers in them must be keys of "params".

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "revtype/profile.hpp"

namespace revtype {

/// Throws ProfileError naming the offending field (parse errors keep their
/// byte offsets in the message).
ProfileCurve profile_from_json(const nlohmann::json& doc);
nlohmann::json profile_to_json(const ProfileCurve& p);

/// Throws ProfileError when the file is missing or not valid JSON.
ProfileCurve read_profile(const std::filesystem::path& path);
void write_profile(const std::filesystem::path& path, const ProfileCurve& p);

}  // namespace revtype
