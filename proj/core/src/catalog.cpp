#include "revtype/catalog.hpp"

#include <cmath>
#include <numbers>

#include "revtype/errors.hpp"

namespace revtype {

namespace {

double param_or(const ParamMap& params, const char* key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

CatalogEntry catenoid(double c, double half_length) {
  if (!(c > 0.0)) throw ProfileError("catenoid: c must be positive");
  if (!(half_length > 0.0)) throw ProfileError("catenoid: half length S must be positive");
  ProfileCurve p = ProfileCurve::from_text("catenoid", "sqrt(c^2+s^2)", "c*asinh(s/c)", {-half_length, half_length},
                                           {{"c", c}});
  KnownTruth truth{Verdict::NullType, Mat3::Zero(), "H = 0, K = -c^2/(c^2+s^2)^2"};
  return {"catenoid", std::move(p), std::move(truth), "minimal catenoid; Delta^III x = 0"};
}

CatalogEntry sphere(double r) {
  if (!(r > 0.0)) throw ProfileError("sphere: r must be positive");
  const double delta = 0.05 * r;
  ProfileCurve p = ProfileCurve::from_text("sphere", "r*sin(s/r)", "-r*cos(s/r)",
                                           {delta, std::numbers::pi * r - delta}, {{"r", r}});
  KnownTruth truth{Verdict::SphereType, Mat3(2.0 * Mat3::Identity()), "H = 1/r, K = 1/r^2"};
  return {"sphere", std::move(p), std::move(truth), "round sphere about the origin, poles excluded; Delta^III x = 2x"};
}

CatalogEntry torus(double R, double r) {
  if (!(r > 0.0 && R > r)) throw ProfileError("torus: requires R > r > 0");
  ProfileCurve p = ProfileCurve::from_text("torus", "R+r*cos(s/r)", "r*sin(s/r)",
                                           {-std::numbers::pi * r, std::numbers::pi * r}, {{"R", R}, {"r", r}});
  KnownTruth truth{Verdict::NotCoordinateFiniteType, std::nullopt,
                   "K = cos(s/r)/(r (R + r cos(s/r))), principal curvatures 1/r and cos(s/r)/(R + r cos(s/r))"};
  return {"torus", std::move(p), std::move(truth), "torus of revolution; negative control"};
}

CatalogEntry broken_diagonal() {
  ProfileCurve p = ProfileCurve::from_text("broken-diagonal", "s", "s", {0.5, 2.0});
  return {"broken-diagonal", std::move(p), KnownTruth{}, "not unit speed: f'^2 + g'^2 = 2"};
}

ParamMap catalog_defaults(const std::string& name) {
  if (name == "catenoid") return {{"c", 1.0}, {"S", 2.0}};
  if (name == "sphere") return {{"r", 1.0}};
  if (name == "torus") return {{"R", 3.0}, {"r", 1.0}};
  if (name == "broken-diagonal") return {};
  throw ProfileError("unknown catalog surface '" + name + "'");
}

CatalogEntry catalog_entry(const std::string& name, const ParamMap& params) {
  const ParamMap defaults = catalog_defaults(name);
  for (const auto& [key, value] : params) {
    if (!defaults.contains(key)) throw ProfileError("catalog surface '" + name + "' has no parameter '" + key + "'");
  }
  if (name == "catenoid") return catenoid(param_or(params, "c", 1.0), param_or(params, "S", 2.0));
  if (name == "sphere") return sphere(param_or(params, "r", 1.0));
  if (name == "torus") return torus(param_or(params, "R", 3.0), param_or(params, "r", 1.0));
  if (name == "broken-diagonal") return broken_diagonal();
  throw ProfileError("unknown catalog surface '" + name + "'");
}

std::vector<std::string> catalog_names() { return {"catenoid", "sphere", "torus", "broken-diagonal"}; }

}  // namespace revtype
