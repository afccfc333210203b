// minsurf command-line front end.
//
// Exit status: 0 success / all verdicts pass, 1 a failing verdict,
// 2 usage or validation error, 3 numerical failure.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "minsurf/errors.hpp"
#include "minsurf/experiments.hpp"
#include "minsurf/families.hpp"
#include "minsurf/measures.hpp"
#include "minsurf/serialize.hpp"
#include "minsurf/svg.hpp"

using namespace minsurf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

Complex parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    const std::string a = s.substr(0, comma);
    const std::string b = s.substr(comma + 1);
    const double re = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    const double im = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::logic_error&) {
    throw DomainError("cannot parse complex number \"" + s + "\" (expected re,im)");
  }
}

std::pair<double, double> parse_pair(const std::string& s, const std::string& what) {
  const Complex c = parse_complex(s);
  if (s.find(',') == std::string::npos) throw DomainError(what + " must be given as lo,hi");
  return {c.real(), c.imag()};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file_atomic(path, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

WeierstrassData load_data(const std::string& path) {
  return data_from_json(parse_json(read_file(path), path));
}

struct Globals {
  int theta_nodes = 4096;
  double tol = 1e-10;
  std::uint64_t seed = 20240531;
  bool serial = false;

  NumericConfig cfg() const {
    if (theta_nodes < 16) throw DomainError("--theta-nodes must be at least 16");
    if (!(tol > 0.0)) throw DomainError("--tol must be positive");
    return {theta_nodes, serial ? Exec::Serial : Exec::Parallel, tol};
  }
};

int exit_for(const MeasureReport& r) {
  if (r.provenance.contains("error")) {
    return r.provenance["error"]["class"] == "numerical" ? kExitNumerical : kExitUsage;
  }
  return r.all_pass() ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal annuli in slabs from Laurent Weierstrass data"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--theta-nodes", g.theta_nodes, "angular quadrature nodes")->capture_default_str();
  app.add_option("--tol", g.tol, "radial quadrature tolerance")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized scenarios")->capture_default_str();
  app.add_flag("--serial", g.serial, "disable OpenMP in the node loops");

  // gen
  auto* gen = app.add_subcommand("gen", "construct family data and write Weierstrass JSON");
  std::string family, spec_path, out_path;
  std::string c1 = "1,0", eps1 = "0.05,0", c2, eps2, a_m1 = "1,0", a_1 = "1,0", a_0, b_m1, b_0, b_1;
  int k = 1;
  double f3 = 2.0 * std::numbers::pi, center = 0.0, margin = 0.05;
  bool symmetric = false;
  gen->add_option("--family", family, "catenoid | perturbed_two_cover | figure_eight");
  gen->add_option("--spec", spec_path, "family spec JSON instead of flags");
  gen->add_option("--k", k, "catenoid cover order");
  gen->add_option("--f3", f3, "catenoid vertical flux");
  gen->add_option("--center", center, "catenoid waist height");
  gen->add_option("--c1", c1);
  gen->add_option("--eps1", eps1);
  gen->add_option("--c2", c2);
  gen->add_option("--eps2", eps2);
  gen->add_option("--a-m1", a_m1);
  gen->add_option("--a-0", a_0);
  gen->add_option("--a-1", a_1);
  gen->add_option("--b-m1", b_m1);
  gen->add_option("--b-0", b_0);
  gen->add_option("--b-1", b_1);
  gen->add_option("--margin", margin, "relative window margin")->capture_default_str();
  gen->add_flag("--symmetric", symmetric, "reflection-symmetric second triple");
  gen->add_option("--out", out_path, "output path (default stdout)");

  // check
  auto* check = app.add_subcommand("check", "period, flux, symmetry and winding verdicts");
  std::string data_path;
  check->add_option("--data", data_path, "Weierstrass JSON")->required();
  check->add_option("--out", out_path);

  // measure
  auto* measure = app.add_subcommand("measure", "length | area | curvature");
  std::string what, slab_str, window_str;
  std::optional<double> radius, level;
  measure->add_option("--data", data_path)->required();
  measure->add_option("what", what, "length | area | curvature")
      ->required()
      ->check(CLI::IsMember({"length", "area", "curvature"}));
  measure->add_option("--r", radius, "circle radius for length");
  measure->add_option("--height", level, "level height for length");
  measure->add_option("--slab", slab_str, "h_minus,h_plus for area (default: thin slab)");
  measure->add_option("--window", window_str, "r_inner,r_outer for curvature (default: data window)");
  measure->add_option("--out", out_path);

  // trace
  auto* trace = app.add_subcommand("trace", "trace a level curve");
  double height = 0.0;
  std::string csv_path, svg_path;
  bool with_profile = false;
  trace->add_option("--data", data_path)->required();
  trace->add_option("--height", height)->required();
  trace->add_option("--csv", csv_path, "node CSV output");
  trace->add_option("--svg", svg_path, "SVG plot output");
  trace->add_flag("--profile", with_profile, "add the L, L'' inset to the SVG");

  // compare
  auto* compare = app.add_subcommand("compare", "compare level lengths and area with a catenoid");
  std::string against = "cover2";
  int grid = 33;
  compare->add_option("--data", data_path)->required();
  compare->add_option("--against", against, "cover2 | catenoid | waist")
      ->check(CLI::IsMember({"cover2", "catenoid", "waist"}))
      ->capture_default_str();
  compare->add_option("--relation", what, "below | above (default: by target)")
      ->check(CLI::IsMember({"below", "above"}));
  compare->add_option("--slab", slab_str);
  compare->add_option("--grid", grid)->capture_default_str();
  compare->add_option("--out", out_path);

  // report
  auto* report = app.add_subcommand("report", "run a named scenario");
  std::string scenario;
  std::vector<std::string> params;
  report->add_option("--scenario", scenario)->required()->check(CLI::IsMember(scenario_catalog()));
  report->add_option("--data", data_path, "replace the scenario's default surface");
  report->add_option("--param", params, "key=value scenario parameter (repeatable)");
  report->add_option("--out", out_path);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run a scenario over a parameter list");
  std::string sweep_key;
  std::vector<double> sweep_values;
  sweep->add_option("--scenario", scenario)->required()->check(CLI::IsMember(scenario_catalog()));
  sweep->add_option("--key", sweep_key, "parameter to vary")->required();
  sweep->add_option("--values", sweep_values, "comma-separated values")->required()->delimiter(',');
  sweep->add_option("--param", params, "fixed key=value parameters");
  sweep->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  auto parse_params = [&](Scenario& s) {
    for (const auto& kv : params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw DomainError("--param expects key=value, got " + kv);
      try {
        s.params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
      } catch (const std::logic_error&) {
        throw DomainError("--param value is not a number: " + kv);
      }
    }
  };

  try {
    const NumericConfig cfg = g.cfg();

    if (*gen) {
      WeierstrassData d = [&] {
        if (!spec_path.empty()) {
          return build_family(family_spec_from_json(parse_json(read_file(spec_path), spec_path)));
        }
        if (family == "catenoid") return catenoid_cover(k, f3, center, margin).data;
        if (family == "perturbed_two_cover") {
          if (symmetric) return perturbed_two_cover(parse_complex(c1), parse_complex(eps1), true, margin);
          if (c2.empty() || eps2.empty()) throw DomainError("non-symmetric cover needs --c2 and --eps2");
          return perturbed_two_cover_explicit(parse_complex(c1), parse_complex(eps1), parse_complex(c2),
                                              parse_complex(eps2), margin);
        }
        if (family == "figure_eight") {
          if (symmetric) return figure_eight(parse_complex(a_m1), parse_complex(a_1), true, margin);
          if (b_m1.empty() || b_0.empty() || b_1.empty()) {
            throw DomainError("non-symmetric figure eight needs --b-m1, --b-0 and --b-1");
          }
          const Complex am = parse_complex(a_m1);
          const Complex ap = parse_complex(a_1);
          const Complex a0 = a_0.empty() ? std::sqrt(-2.0 * am * ap) : parse_complex(a_0);
          return figure_eight(FigureEightParams{am, a0, ap, parse_complex(b_m1), parse_complex(b_0),
                                                parse_complex(b_1)},
                              margin);
        }
        throw DomainError("--family or --spec is required (catenoid | perturbed_two_cover | figure_eight)");
      }();
      emit(dump(data_to_json(d)), out_path);
      return kExitOk;
    }

    if (*check) {
      const WeierstrassData d = load_data(data_path);
      const PeriodVerdict v = period_check(d);
      Json j;
      j["well_defined"] = v.well_defined;
      j["vertical_flux"] = v.vertical_flux;
      Json res = Json::array();
      for (const Complex& c : v.residues) res.push_back(complex_to_json(c));
      j["residues"] = res;
      if (v.well_defined) {
        const FluxVector f = flux(d);
        j["flux"] = {f.f1, f.f2, f.f3};
      }
      j["symmetric"] = symmetry_check(d);
      j["gauss_winding"] = gauss_winding(d, d.window().geometric_mean());
      j["roots_on_distinct_circles"] = roots_on_distinct_circles(d);
      emit(dump(j), out_path);
      return v.well_defined && v.vertical_flux ? kExitOk : kExitVerdict;
    }

    if (*measure) {
      const WeierstrassData d = load_data(data_path);
      Json j;
      j["measure"] = what;
      if (what == "length") {
        if (radius.has_value() == level.has_value()) {
          throw DomainError("length needs exactly one of --r or --height");
        }
        if (radius) {
          j["r"] = *radius;
          j["L"] = circle_length(d, *radius, cfg);
          j["L_closed"] = circle_length_closed(d, *radius);
          j["L2"] = circle_length_dd(d, *radius);
          j["L2_fd"] = circle_length_dd_fd(d, *radius, 1e-3, cfg);
        } else {
          const LevelCurve c = trace_level(d, *level, cfg);
          j["h"] = *level;
          j["ell"] = c.length;
          j["self_intersections"] = c.self_intersections;
          j["multiplicity"] = c.multiplicity;
        }
      } else if (what == "area") {
        Slab slab = thin_slab(d);
        if (!slab_str.empty()) {
          const auto [lo, hi] = parse_pair(slab_str, "--slab");
          slab = Slab(lo, hi);
        }
        j["slab"] = {slab.h_minus, slab.h_plus};
        j["area"] = slab_area(d, slab, cfg);
      } else {
        AnnulusWindow w = d.window();
        if (!window_str.empty()) {
          const auto [lo, hi] = parse_pair(window_str, "--window");
          w = AnnulusWindow(lo, hi);
        }
        j["window"] = {w.r_inner, w.r_outer};
        j["total_curvature"] = total_curvature(d, w, cfg);
      }
      emit(dump(j), out_path);
      return kExitOk;
    }

    if (*trace) {
      const WeierstrassData d = load_data(data_path);
      const LevelCurve c = trace_level(d, height, cfg);
      if (!csv_path.empty()) write_file_atomic(csv_path, level_curve_csv(c));
      if (!svg_path.empty()) {
        std::optional<CircleLengthProfile> prof;
        if (with_profile) prof = length_profile(d, 128);
        render_svg({c}, prof, svg_path);
      }
      Json j;
      j["h"] = c.h;
      j["length"] = c.length;
      j["self_intersections"] = c.self_intersections;
      j["multiplicity"] = c.multiplicity;
      j["turning_number"] = turning_number(c);
      j["nodes"] = c.nodes.size();
      std::cout << dump(j);
      return kExitOk;
    }

    if (*compare) {
      const WeierstrassData d = load_data(data_path);
      Slab slab = thin_slab(d);
      if (!slab_str.empty()) {
        const auto [lo, hi] = parse_pair(slab_str, "--slab");
        slab = Slab(lo, hi);
      }
      const double flux3 = flux(d).f3;
      CatenoidParams cat{flux3, 0.0, 2};
      Relation rel = Relation::Below;
      if (against == "catenoid") {
        cat = {flux3, 0.0, 1};
        rel = Relation::Above;
      } else if (against == "waist") {
        cat = marginally_stable_waist(slab);
        rel = Relation::Above;
      }
      if (what == "below") rel = Relation::Below;
      if (what == "above") rel = Relation::Above;
      MeasureReport r;
      r.scenario = "compare_" + against;
      if (against != "waist") r.merge(compare_lengths(d, cat, slab, grid, rel, cfg), "");
      r.merge(compare_areas(d, cat, slab, rel, cfg), "");
      r.provenance["version"] = kToolVersion;
      r.provenance["theta_nodes"] = cfg.theta_nodes;
      r.provenance["data"] = data_to_json(d);
      emit(dump(report_to_json(r)), out_path);
      return r.all_pass() ? kExitOk : kExitVerdict;
    }

    if (*report) {
      Scenario s{scenario, std::nullopt, {}, cfg, g.seed};
      if (!data_path.empty()) s.data = load_data(data_path);
      parse_params(s);
      const MeasureReport r = run_scenario(s);
      emit(dump(report_to_json(r)), out_path);
      if (r.provenance.contains("error")) {
        std::cerr << "minsurf: " << r.provenance["error"]["message"].get<std::string>() << "\n";
      }
      return exit_for(r);
    }

    if (*sweep) {
      Json all = Json::array();
      int rc = kExitOk;
      for (double v : sweep_values) {
        Scenario s{scenario, std::nullopt, {}, cfg, g.seed};
        parse_params(s);
        s.params[sweep_key] = v;
        const MeasureReport r = run_scenario(s);
        all.push_back({{"key", sweep_key}, {"value", v}, {"report", report_to_json(r)}});
        rc = std::max(rc, exit_for(r));
      }
      emit(dump(all), out_path);
      return rc;
    }
  } catch (const Error& e) {
    std::cerr << "minsurf: " << e.what() << "\n";
    return e.error_class() == ErrorClass::Numerical ? kExitNumerical : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "minsurf: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
