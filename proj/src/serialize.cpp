#include "minsurf/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <set>
#include <sstream>
#include <unistd.h>

#include "minsurf/errors.hpp"
#include "minsurf/families.hpp"

namespace minsurf {

namespace {

void require_keys(const Json& j, const std::set<std::string>& allowed,
                  const std::set<std::string>& required, const std::string& what) {
  if (!j.is_object()) throw SchemaError(what + " must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) throw SchemaError("unknown key \"" + k + "\" in " + what);
  }
  for (const auto& k : required) {
    if (!j.contains(k)) throw SchemaError("missing key \"" + k + "\" in " + what);
  }
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) throw SchemaError(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError(what + " must be finite");
  return v;
}

Complex param_complex(const Json& params, const std::string& key) {
  if (!params.contains(key)) throw SchemaError("missing parameter \"" + key + "\"");
  return complex_from_json(params.at(key));
}

}  // namespace

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {number(j, "complex value"), 0.0};
  if (!j.is_array() || j.size() != 2) throw SchemaError("complex value must be [re, im]");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Json laurent_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [n, c] : p.terms()) out.push_back(Json::array({n, c.real(), c.imag()}));
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("Laurent polynomial must be an array of [n, re, im]");
  LaurentPoly::Terms terms;
  bool first = true;
  int prev = 0;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer()) {
      throw SchemaError("Laurent term must be [n, re, im] with integer n");
    }
    const int n = t[0].get<int>();
    if (!first && n <= prev) throw SchemaError("Laurent exponents must be strictly increasing");
    first = false;
    prev = n;
    terms.emplace(n, Complex(number(t[1], "coefficient"), number(t[2], "coefficient")));
  }
  return LaurentPoly(std::move(terms));
}

Json data_to_json(const WeierstrassData& data) {
  Json j;
  j["parity"] = to_string(data.parity());
  j["g_minus"] = laurent_to_json(data.g_minus());
  j["g_plus"] = laurent_to_json(data.g_plus());
  j["window"] = {{"r_inner", data.window().r_inner}, {"r_outer", data.window().r_outer}};
  if (data.height_offset() != 0.0) j["height_offset"] = data.height_offset();
  return j;
}

WeierstrassData data_from_json(const Json& j) {
  require_keys(j, {"parity", "g_minus", "g_plus", "window", "height_offset"},
               {"parity", "g_minus", "g_plus", "window"}, "Weierstrass data");
  if (!j["parity"].is_string()) throw SchemaError("parity must be a string");
  const Json& w = j["window"];
  require_keys(w, {"r_inner", "r_outer"}, {"r_inner", "r_outer"}, "window");
  const double offset = j.contains("height_offset") ? number(j["height_offset"], "height_offset") : 0.0;
  return WeierstrassData::from_g_pair(
      laurent_from_json(j["g_minus"]), laurent_from_json(j["g_plus"]),
      parity_from_string(j["parity"].get<std::string>()),
      AnnulusWindow(number(w["r_inner"], "r_inner"), number(w["r_outer"], "r_outer")), offset);
}

FamilySpec family_spec_from_json(const Json& j) {
  require_keys(j, {"family", "params", "margin", "symmetric"}, {"family"}, "family spec");
  FamilySpec s;
  if (!j["family"].is_string()) throw SchemaError("family must be a string");
  s.family = j["family"].get<std::string>();
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw SchemaError("params must be an object");
    s.params = j["params"];
  }
  if (j.contains("margin")) s.margin = number(j["margin"], "margin");
  if (j.contains("symmetric")) {
    if (!j["symmetric"].is_boolean()) throw SchemaError("symmetric must be a boolean");
    s.symmetric = j["symmetric"].get<bool>();
  }
  return s;
}

Json family_spec_to_json(const FamilySpec& spec) {
  Json j;
  j["family"] = spec.family;
  j["params"] = spec.params;
  j["margin"] = spec.margin;
  j["symmetric"] = spec.symmetric;
  return j;
}

WeierstrassData build_family(const FamilySpec& spec) {
  const Json& p = spec.params;
  if (spec.family == "catenoid") {
    require_keys(p, {"k", "f3", "center"}, {}, "catenoid params");
    int k = 1;
    if (p.contains("k")) {
      if (!p["k"].is_number_integer()) throw SchemaError("k must be an integer");
      k = p["k"].get<int>();
    }
    const double f3 = p.contains("f3") ? number(p["f3"], "f3") : 2.0 * std::numbers::pi;
    const double center = p.contains("center") ? number(p["center"], "center") : 0.0;
    return catenoid_cover(k, f3, center, spec.margin).data;
  }
  if (spec.family == "perturbed_two_cover") {
    require_keys(p, {"c1", "eps1", "c2", "eps2"}, {"c1", "eps1"}, "perturbed_two_cover params");
    const Complex c1 = param_complex(p, "c1");
    const Complex eps1 = param_complex(p, "eps1");
    if (spec.symmetric) {
      if (p.contains("c2") || p.contains("eps2")) {
        throw SchemaError("c2/eps2 are determined by symmetry; set \"symmetric\": false");
      }
      return perturbed_two_cover(c1, eps1, true, spec.margin);
    }
    return perturbed_two_cover_explicit(c1, eps1, param_complex(p, "c2"), param_complex(p, "eps2"),
                                        spec.margin);
  }
  if (spec.family == "figure_eight") {
    if (spec.symmetric) {
      require_keys(p, {"a_m1", "a_1"}, {"a_m1", "a_1"}, "figure_eight params");
      return figure_eight(param_complex(p, "a_m1"), param_complex(p, "a_1"), true, spec.margin);
    }
    require_keys(p, {"a_m1", "a_0", "a_1", "b_m1", "b_0", "b_1"},
                 {"a_m1", "a_1", "b_m1", "b_0", "b_1"}, "figure_eight params");
    const Complex a_m1 = param_complex(p, "a_m1");
    const Complex a_1 = param_complex(p, "a_1");
    const Complex a_0 = p.contains("a_0") ? param_complex(p, "a_0") : std::sqrt(-2.0 * a_m1 * a_1);
    return figure_eight(FigureEightParams{a_m1, a_0, a_1, param_complex(p, "b_m1"),
                                          param_complex(p, "b_0"), param_complex(p, "b_1")},
                        spec.margin);
  }
  throw SchemaError("unknown family \"" + spec.family + "\"");
}

std::string level_curve_csv(const LevelCurve& curve) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "theta,r,x1,x2,x3\n";
  for (const auto& n : curve.nodes) {
    os << n.theta << ',' << n.r << ',' << n.x1 << ',' << n.x2 << ',' << n.x3 << '\n';
  }
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw IoError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename temporary file onto " + path);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("malformed JSON in " + what + ": " + e.what());
  }
}

}  // namespace minsurf
