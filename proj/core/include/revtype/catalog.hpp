#pragma once

/// @file catalog.hpp
/// @brief Closed-form profile curves with known answers, plus deliberately
/// broken profiles for negative tests.

#include <optional>
#include <string>
#include <vector>

#include "revtype/finite_type.hpp"
#include "revtype/profile.hpp"

namespace revtype {

struct KnownTruth {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Mat3> A;  ///< set when the surface satisfies Delta x = A x
  std::string curvature;  ///< closed forms of H and K, for display
};

struct CatalogEntry {
  std::string name;
  ProfileCurve profile;
  KnownTruth truth;
  std::string doc;
};

/// Catenoid of waist radius c: f = sqrt(c^2 + s^2), g = c asinh(s/c) on
/// (-half_length, half_length). Minimal, so Delta x = 0.
CatalogEntry catenoid(double c, double half_length = 2.0);

/// Sphere of radius r centred at the origin: f = r sin(s/r), g = -r cos(s/r)
/// on (delta, pi r - delta), delta = 0.05 r keeping the poles out.
CatalogEntry sphere(double r);

/// Torus with centre-circle radius R > r > 0: f = R + r cos(s/r),
/// g = r sin(s/r) on (-pi r, pi r). Not of coordinate finite type.
CatalogEntry torus(double R, double r);

/// f = s, g = s on (0.5, 2): unit-speed violated, f'^2 + g'^2 = 2.
CatalogEntry broken_diagonal();

/// Entry by name with parameters from `params`; missing parameters take the
/// defaults (c = 1, S = 2; r = 1; R = 3, r = 1). Throws ProfileError for an
/// unknown name, an unknown parameter key or invalid parameter values.
CatalogEntry catalog_entry(const std::string& name, const ParamMap& params = {});

/// Parameter names and default values of a catalog surface.
ParamMap catalog_defaults(const std::string& name);

/// Names accepted by catalog_entry.
std::vector<std::string> catalog_names();

}  // namespace revtype
