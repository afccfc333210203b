#pragma once

#include <string>

#include <json.hpp>

#include "minsurf/level_curve.hpp"
#include "minsurf/weierstrass.hpp"

namespace minsurf {

using Json = nlohmann::ordered_json;

/// [[n, re, im], ...] with strictly increasing exponents.
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// [re, im].
Json complex_to_json(Complex c);
Complex complex_from_json(const Json& j);

/// {"parity", "g_minus", "g_plus", "window": {"r_inner", "r_outer"}} plus an
/// optional "height_offset". Unknown keys are rejected.
Json data_to_json(const WeierstrassData& data);
WeierstrassData data_from_json(const Json& j);

/// {"family": ..., "params": {...}, "margin": 0.05, "symmetric": true}
struct FamilySpec {
  std::string family;
  Json params = Json::object();
  double margin = 0.05;
  bool symmetric = true;
};

FamilySpec family_spec_from_json(const Json& j);
Json family_spec_to_json(const FamilySpec& spec);
WeierstrassData build_family(const FamilySpec& spec);

/// Header theta,r,x1,x2,x3 and 17 significant digits.
std::string level_curve_csv(const LevelCurve& curve);

/// Writes to a sibling temporary file and renames it over path.
void write_file_atomic(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

Json parse_json(const std::string& text, const std::string& what);

}  // namespace minsurf
