#include "revtype/profile_io.hpp"

#include <fstream>

#include "revtype/errors.hpp"

namespace revtype {

namespace {

double number_field(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw ProfileError(std::string("profile: missing field '") + key + "'");
  const auto& v = doc.at(key);
  if (!v.is_number()) throw ProfileError(std::string("profile: field '") + key + "' must be a number");
  return v.get<double>();
}

std::string string_field(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw ProfileError(std::string("profile: missing field '") + key + "'");
  const auto& v = doc.at(key);
  if (!v.is_string()) throw ProfileError(std::string("profile: field '") + key + "' must be a string");
  return v.get<std::string>();
}

Expr parse_field(const std::string& text, const char* key, const ParamMap& params) {
  try {
    return parse(text, params);
  } catch (const ParseError& e) {
    throw ProfileError(std::string("profile: field '") + key + "': " + e.what());
  }
}

}  // namespace

ProfileCurve profile_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ProfileError("profile: document must be a JSON object");

  ParamMap params;
  if (doc.contains("params")) {
    const auto& ps = doc.at("params");
    if (!ps.is_object()) throw ProfileError("profile: 'params' must be an object");
    for (const auto& [name, value] : ps.items()) {
      if (!value.is_number()) throw ProfileError("profile: parameter '" + name + "' must be a number");
      params[name] = value.get<double>();
    }
  }

  std::vector<Interval> excluded;
  if (doc.contains("excluded_intervals")) {
    const auto& ex = doc.at("excluded_intervals");
    if (!ex.is_array()) throw ProfileError("profile: 'excluded_intervals' must be an array");
    for (const auto& iv : ex) {
      if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number()) {
        throw ProfileError("profile: field 'excluded_intervals': each entry must be [lo, hi]");
      }
      excluded.push_back({iv[0].get<double>(), iv[1].get<double>()});
    }
  }

  const std::string name = doc.contains("name") ? string_field(doc, "name") : std::string("profile");
  Expr f = parse_field(string_field(doc, "f"), "f", params);
  Expr g = parse_field(string_field(doc, "g"), "g", params);
  const Interval domain{number_field(doc, "s_min"), number_field(doc, "s_max")};
  return ProfileCurve(name, std::move(f), std::move(g), domain, std::move(params), std::move(excluded));
}

nlohmann::json profile_to_json(const ProfileCurve& p) {
  nlohmann::json doc;
  doc["name"] = p.name();
  doc["f"] = unparse(p.f());
  doc["g"] = unparse(p.g());
  doc["s_min"] = p.domain().lo;
  doc["s_max"] = p.domain().hi;
  doc["params"] = nlohmann::json::object();
  for (const auto& [k, v] : p.params()) doc["params"][k] = v;
  doc["excluded_intervals"] = nlohmann::json::array();
  for (const auto& iv : p.excluded()) doc["excluded_intervals"].push_back({iv.lo, iv.hi});
  return doc;
}

ProfileCurve read_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ProfileError("cannot open profile file '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ProfileError("profile file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return profile_from_json(doc);
}

void write_profile(const std::filesystem::path& path, const ProfileCurve& p) {
  std::ofstream out(path);
  if (!out) throw ProfileError("cannot write profile file '" + path.string() + "'");
  out << profile_to_json(p).dump(2) << '\n';
}

}  // namespace revtype
