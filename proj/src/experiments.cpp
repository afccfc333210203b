#include "minsurf/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "minsurf/errors.hpp"
#include "minsurf/families.hpp"

namespace minsurf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPinnedUStar = 1.1996786;

// tolerances of the shipped checks
constexpr double kIdentityTol = 1e-8;
constexpr double kWaistTol = 1e-6;
constexpr double kStrictTol = 1e-12;
constexpr double kReflectTol = 1e-9;
constexpr double kHorizontalFluxTol = 1e-12;
constexpr double kControlTol = 1e-8;
constexpr double kFig8CurvatureTol = 0.02;
constexpr double kCatenoidCurvatureTol = 1e-3;
constexpr double kUStarTol = 1e-6;

using Params = std::map<std::string, double>;

double param(const Params& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

int int_param(const Params& p, const std::string& key, int fallback, int min_value) {
  const double v = param(p, key, fallback);
  if (v != std::floor(v) || v < min_value || v > 1e6) {
    std::ostringstream os;
    os << "parameter " << key << " must be an integer >= " << min_value;
    throw DomainError(os.str());
  }
  return static_cast<int>(v);
}

std::vector<double> window_radii(const AnnulusWindow& w, int n) {
  const double a = std::log(w.r_inner);
  const double b = std::log(w.r_outer);
  std::vector<double> r(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(j)] = std::exp(a + (b - a) * (j + 0.5) / n);
  return r;
}

// Adds well_defined and vertical_flux verdicts for every surface; returns
// false if any fails, in which case the scenario stops there.
bool period_verdicts(MeasureReport& rep, const std::vector<const WeierstrassData*>& surfaces) {
  bool wd = true;
  bool vf = true;
  for (const auto* d : surfaces) {
    const PeriodVerdict v = period_check(*d);
    wd = wd && v.well_defined;
    vf = vf && v.vertical_flux;
  }
  rep.check("well_defined", wd, wd ? 1.0 : -1.0);
  rep.check("vertical_flux", vf, vf ? 1.0 : -1.0);
  if (!(wd && vf)) rep.provenance["notes"].push_back("period check failed; remaining checks skipped");
  return wd && vf;
}

WeierstrassData default_perturbed(const Params& p) {
  return perturbed_two_cover({param(p, "c1_re", 1.0), param(p, "c1_im", 0.0)},
                             {param(p, "eps1_re", 0.05), param(p, "eps1_im", 0.0)}, true,
                             param(p, "margin", 0.05));
}

WeierstrassData default_figure_eight(const Params& p) {
  return figure_eight({param(p, "a_m1_re", 1.0), param(p, "a_m1_im", 0.0)},
                      {param(p, "a_1_re", 1.0), param(p, "a_1_im", 0.0)}, true,
                      param(p, "margin", 0.05));
}

void require_three_term(const WeierstrassData& d) {
  for (const auto* g : {&d.g_minus(), &d.g_plus()}) {
    if (g->lowest() < -1 || g->highest() > 1 || d.parity() != Parity::Even) {
      throw PreconditionError("scenario needs even data with exponents in {-1, 0, 1}");
    }
  }
}

Json echo_params(const Params& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

// --- scenarios -------------------------------------------------------------

MeasureReport lemma_3_1(const Scenario& s) {
  MeasureReport rep;
  const int samples = int_param(s.params, "samples", 100, 1);
  const int grid = int_param(s.params, "grid", 32, 2);
  std::vector<WeierstrassData> set;
  if (s.data) {
    set.push_back(*s.data);
  } else {
    for (int i = 0; i < samples; ++i) set.push_back(random_even_data(s.seed + static_cast<std::uint64_t>(i)));
  }
  std::vector<const WeierstrassData*> ptrs;
  for (const auto& d : set) ptrs.push_back(&d);
  if (!period_verdicts(rep, ptrs)) return rep;

  double worst = std::numeric_limits<double>::infinity();
  for (const auto& d : set) {
    if (d.parity() != Parity::Even) throw PreconditionError("lemma_3_1 needs even-parity data");
    for (double r : window_radii(d.window(), grid)) {
      const double L = circle_length_closed(d, r);
      worst = std::min(worst, (circle_length_dd(d, r) - 2.0 * L) / L);
    }
  }
  rep.set("samples", static_cast<double>(set.size()));
  rep.set("min_relative_defect_2", worst);
  rep.check("strict_convexity_L2_gt_2L", worst > kStrictTol, worst);
  return rep;
}

MeasureReport lemma_3_4_identity(const Scenario& s) {
  MeasureReport rep;
  const int samples = int_param(s.params, "samples", 20, 1);
  const int grid = int_param(s.params, "grid", 32, 2);
  std::vector<WeierstrassData> set;
  if (s.data) {
    set.push_back(*s.data);
  } else {
    set.push_back(default_figure_eight(s.params));
    for (int i = 0; i < samples; ++i) {
      set.push_back(random_even_data(s.seed + static_cast<std::uint64_t>(i), 1));
    }
  }
  std::vector<const WeierstrassData*> ptrs;
  for (const auto& d : set) ptrs.push_back(&d);
  if (!period_verdicts(rep, ptrs)) return rep;

  double worst = 0.0;
  for (const auto& d : set) {
    require_three_term(d);
    const double cm = 2.0 * kPi * std::abs(d.g_minus().coeff(0));
    const double cp = 2.0 * kPi * std::abs(d.g_plus().coeff(0));
    const double rhs_const = (cm * cm + cp * cp) / kPi;
    for (double r : window_radii(d.window(), grid)) {
      const double L = circle_length_closed(d, r);
      const double lhs = circle_length_dd(d, r);
      const double rhs = 4.0 * L - rhs_const;
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), L));
    }
  }
  rep.set("samples", static_cast<double>(set.size()));
  rep.set("max_relative_error", worst);
  rep.check("identity_L2_eq_4L_minus_c", worst <= kIdentityTol, kIdentityTol - worst);
  return rep;
}

MeasureReport theorem_3_5(const Scenario& s) {
  MeasureReport rep;
  const WeierstrassData d = s.data ? *s.data : default_perturbed(s.params);
  if (!period_verdicts(rep, {&d})) return rep;
  require_three_term(d);
  const int grid = int_param(s.params, "grid", 64, 2);
  const PerturbedCoverParams p = perturbed_cover_params(d);
  const double eps_sq = std::norm(p.eps1) + std::norm(p.eps2);
  const double expected = -4.0 * kPi * eps_sq;

  const AnnulusWindow& w = d.window();
  const int wind = gauss_winding(d, w.geometric_mean());
  bool constant = true;
  for (double r : window_radii(w, 5)) constant = constant && gauss_winding(d, r) == wind;
  rep.set("gauss_winding", wind);
  rep.check("gauss_winding_abs_2", std::abs(wind) == 2 && constant, std::abs(wind) == 2 ? 0.0 : -1.0);

  double worst_err = 0.0;
  double max_excess = -std::numeric_limits<double>::infinity();
  double defect_sum = 0.0;
  const std::vector<double> radii = window_radii(w, grid);
  for (double r : radii) {
    const double L = circle_length_closed(d, r);
    const double defect = circle_length_dd(d, r) - 4.0 * L;
    defect_sum += defect;
    worst_err = std::max(worst_err, std::abs(defect - expected) / std::max(std::abs(expected), kStrictTol * L));
    max_excess = std::max(max_excess, defect / L);
  }
  rep.set("defect_computed", defect_sum / static_cast<double>(radii.size()));
  rep.set("defect_8pi_mean_eps_sq", -8.0 * kPi * 0.5 * eps_sq);
  rep.set("max_relative_error", worst_err);
  rep.set("max_relative_L2_minus_4L", max_excess);
  rep.check("defect_identity", worst_err <= kIdentityTol, kIdentityTol - worst_err);
  rep.check("L2_lt_4L", max_excess < 0.0, -max_excess);
  return rep;
}

void symmetry_checks(MeasureReport& rep, const WeierstrassData& d, const std::string& tag) {
  const bool sym = symmetry_check(d);
  rep.check(tag + "symmetry_check", sym, sym ? 1.0 : -1.0);
  const double dev = reflection_deviation(d, 32);
  rep.set(tag + "reflection_deviation", dev);
  rep.check(tag + "reflection", dev <= kReflectTol, kReflectTol - dev);
  const FluxVector f = flux(d);
  const double horiz = std::max(std::abs(f.f1), std::abs(f.f2)) / std::abs(f.f3);
  rep.set(tag + "f3", f.f3);
  rep.set(tag + "relative_horizontal_flux", horiz);
  rep.check(tag + "flux_vertical", horiz <= kHorizontalFluxTol, kHorizontalFluxTol - horiz);
}

MeasureReport prop_3_6_symmetry(const Scenario& s) {
  MeasureReport rep;
  if (s.data) {
    if (!period_verdicts(rep, {&*s.data})) return rep;
    symmetry_checks(rep, *s.data, "");
    return rep;
  }
  const WeierstrassData pc = default_perturbed(s.params);
  const WeierstrassData fe = default_figure_eight(s.params);
  if (!period_verdicts(rep, {&pc, &fe})) return rep;
  symmetry_checks(rep, pc, "perturbed.");
  symmetry_checks(rep, fe, "figure_eight.");
  return rep;
}

MeasureReport prop_3_7(const Scenario& s) {
  MeasureReport rep;
  const WeierstrassData d = s.data ? *s.data : default_perturbed(s.params);
  if (!period_verdicts(rep, {&d})) return rep;
  const int n = int_param(s.params, "grid", 33, 3);
  const double f3 = flux(d).f3;
  const Slab slab = thin_slab(d);
  const CatenoidParams c2{f3, 0.0, 2};
  rep.merge(compare_lengths(d, c2, slab, n, Relation::Below, s.cfg), "");

  // same comparison in the circle coordinate t = ln r, where the cover has
  // L(t) = f3 cosh(2t)
  double worst = std::numeric_limits<double>::infinity();
  for (double r : window_radii(d.window(), n)) {
    const double t = std::log(r);
    if (std::abs(t) < 1e-12) continue;
    const double lc = f3 * std::cosh(2.0 * t);
    worst = std::min(worst, (lc - circle_length_closed(d, r)) / lc);
  }
  rep.set("min_relative_margin_circle_length_t", worst);
  rep.check("circle_length_below_cover_in_t", worst > 0.0, worst);
  return rep;
}

MeasureReport theorem_3_8(const Scenario& s) {
  MeasureReport rep;
  const WeierstrassData d = s.data ? *s.data : default_perturbed(s.params);
  if (!period_verdicts(rep, {&d})) return rep;
  const double f3 = flux(d).f3;
  const Slab slab = thin_slab(d);
  const CatenoidParams c2{f3, 0.0, 2};
  rep.merge(compare_areas(d, c2, slab, Relation::Below, s.cfg), "");

  // thickness sweep: where does the sign of the margin sit
  const Slab full = clip_to_slab(d, Slab(-std::numeric_limits<double>::max(),
                                         std::numeric_limits<double>::max()));
  for (double factor : {0.05, 0.125, 0.25, 0.5, 0.9}) {
    const Slab sl = full.scaled(factor);
    const double a = slab_area(d, sl, s.cfg);
    const double ac = catenoid_slab_area(c2, sl);
    std::ostringstream key;
    key << "sweep_relative_margin_x" << factor;
    rep.set(key.str(), (ac - a) / ac);
  }

  // eps -> 0 control: the exact cover against itself
  const PerturbedCoverParams p = perturbed_cover_params(d);
  const WeierstrassData ctrl = perturbed_two_cover(p.c1, 0.0, true, param(s.params, "margin", 0.05));
  const double fc = flux(ctrl).f3;
  const Slab cslab = thin_slab(ctrl);
  const double a_ctrl = slab_area(ctrl, cslab, s.cfg);
  const double ac_ctrl = catenoid_slab_area({fc, 0.0, 2}, cslab);
  const double rel = std::abs(ac_ctrl - a_ctrl) / ac_ctrl;
  rep.set("control_relative_margin", rel);
  rep.check("control_margin_collapses", rel <= kControlTol, kControlTol - rel);
  return rep;
}

MeasureReport theorem_4_1(const Scenario& s) {
  MeasureReport rep;
  const WeierstrassData d = s.data ? *s.data : default_figure_eight(s.params);
  if (!period_verdicts(rep, {&d})) return rep;
  // odd count so the symmetric window's center circle is on the grid
  const int grid = int_param(s.params, "grid", 65, 2);
  const int levels = int_param(s.params, "levels", 9, 2);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  double t_at_lo = 0.0;
  for (double r : window_radii(d.window(), grid)) {
    const double L = circle_length_closed(d, r);
    const double L2 = circle_length_dd(d, r);
    if ((L2 - 2.0 * L) / L < lo) {
      lo = (L2 - 2.0 * L) / L;
      t_at_lo = std::log(r);
    }
    hi = std::max(hi, (L2 - 4.0 * L) / L);
  }
  rep.set("min_relative_L2_minus_2L", lo);
  rep.set("t_at_min_L2_minus_2L", t_at_lo);
  rep.set("max_relative_L2_minus_4L", hi);
  rep.check("L2_gt_2L_strict", lo > kStrictTol, lo);
  rep.check("L2_lt_4L", hi < 0.0, -hi);

  const int wind = gauss_winding(d, d.window().geometric_mean());
  bool constant = true;
  for (double r : window_radii(d.window(), 5)) constant = constant && gauss_winding(d, r) == wind;
  rep.set("gauss_winding", wind);
  rep.check("gauss_winding_zero", wind == 0 && constant, wind == 0 ? 0.0 : -std::abs(wind));

  rep.merge(classify_levels(d, thin_slab(d), levels, 1, s.cfg), "levels.");
  rep.set("roots_on_distinct_circles", roots_on_distinct_circles(d) ? 1.0 : 0.0);
  return rep;
}

MeasureReport corollary_4_2(const Scenario& s) {
  MeasureReport rep;
  const WeierstrassData d = s.data ? *s.data : default_figure_eight(s.params);
  if (!period_verdicts(rep, {&d})) return rep;
  require_three_term(d);
  const int grid = int_param(s.params, "grid", 65, 2);
  const double f3 = flux(d).f3;
  const double cm = 2.0 * kPi * std::abs(d.g_minus().coeff(0));
  const double cp = 2.0 * kPi * std::abs(d.g_plus().coeff(0));
  const double c = (cm * cm + cp * cp) / kPi;
  double worst = 0.0;
  for (double r : window_radii(d.window(), grid)) {
    const double L = circle_length_closed(d, r);
    const double rhs = 4.0 * L - c;
    worst = std::max(worst, std::abs(circle_length_dd(d, r) - rhs) / std::max(std::abs(rhs), L));
  }
  const double k = 2.0 * kPi / f3;
  rep.set("f3", f3);
  rep.set("c_minus_abs", cm);
  rep.set("c_plus_abs", cp);
  // in h = t / k: l'' = k^2 (4 l - c)
  rep.set("h_form_coefficient", 4.0 * k * k);
  rep.set("h_form_constant", k * k * c);
  rep.set("max_relative_error", worst);
  rep.check("identity_l2_eq_4l_minus_c", worst <= kIdentityTol, kIdentityTol - worst);
  return rep;
}

MeasureReport theorem_4_3(const Scenario& s) {
  MeasureReport rep;
  const WeierstrassData d = s.data ? *s.data : default_figure_eight(s.params);
  if (!period_verdicts(rep, {&d})) return rep;
  const int n = int_param(s.params, "grid", 33, 3);
  const double f3 = flux(d).f3;
  const Slab slab = thin_slab(d);

  const double u = coth_fixed_point();
  rep.set("u_star", u);
  rep.check("u_star_matches", std::abs(u - kPinnedUStar) <= kUStarTol,
            kUStarTol - std::abs(u - kPinnedUStar));
  const CatenoidParams c_omega = marginally_stable_waist(slab);
  rep.set("c_omega_f3", c_omega.f3);
  rep.merge(compare_areas(d, c_omega, slab, Relation::Above, s.cfg), "c_omega.");
  rep.merge(compare_lengths(d, {f3, 0.0, 1}, slab, n, Relation::Above, s.cfg), "catenoid.");
  return rep;
}

MeasureReport step_two(const Scenario& s) {
  MeasureReport rep;
  const WeierstrassData d = s.data ? *s.data : default_figure_eight(s.params);
  if (!period_verdicts(rep, {&d})) return rep;
  const int n = int_param(s.params, "grid", 33, 3);
  const double f3 = flux(d).f3;
  const Slab slab = thin_slab(d);
  const CatenoidParams c2{f3, 0.0, 2};
  rep.merge(compare_lengths(d, c2, slab, n, Relation::Below, s.cfg), "");
  rep.merge(compare_areas(d, c2, slab, Relation::Below, s.cfg), "");
  return rep;
}

MeasureReport total_curvature_8pi(const Scenario& s) {
  MeasureReport rep;
  const WeierstrassData d = s.data ? *s.data : default_figure_eight(s.params);
  const CatenoidCover cat = catenoid_cover(1, 2.0 * kPi);
  if (!period_verdicts(rep, {&d, &cat.data})) return rep;
  const double lo = param(s.params, "r_lo", 1e-3);
  const double hi = param(s.params, "r_hi", 1e3);
  const double k = total_curvature(d, AnnulusWindow(lo, hi), s.cfg);
  const double rel = std::abs(k + 8.0 * kPi) / (8.0 * kPi);
  rep.set("total_curvature", k);
  rep.set("relative_error_vs_minus_8pi", rel);
  rep.check("total_curvature_minus_8pi", rel <= kFig8CurvatureTol, kFig8CurvatureTol - rel);

  const double kc = total_curvature(cat.data, AnnulusWindow(std::exp(-8.0), std::exp(8.0)), s.cfg);
  const double relc = std::abs(kc + 4.0 * kPi) / (4.0 * kPi);
  rep.set("catenoid_total_curvature", kc);
  rep.set("catenoid_relative_error_vs_minus_4pi", relc);
  rep.check("catenoid_total_curvature_minus_4pi", relc <= kCatenoidCurvatureTol,
            kCatenoidCurvatureTol - relc);
  return rep;
}

struct Entry {
  std::function<MeasureReport(const Scenario&)> run;
  std::set<std::string> params;
};

const std::map<std::string, Entry>& registry() {
  static const std::set<std::string> pert{"c1_re", "c1_im", "eps1_re", "eps1_im", "margin"};
  static const std::set<std::string> fig{"a_m1_re", "a_m1_im", "a_1_re", "a_1_im", "margin"};
  auto with = [](std::set<std::string> base, std::initializer_list<const char*> extra) {
    for (const char* e : extra) base.insert(e);
    return base;
  };
  static const std::map<std::string, Entry> r{
      {"lemma_3_1", {lemma_3_1, {"samples", "grid"}}},
      {"lemma_3_4_identity", {lemma_3_4_identity, with(fig, {"samples", "grid"})}},
      {"theorem_3_5", {theorem_3_5, with(pert, {"grid"})}},
      {"prop_3_6_symmetry", {prop_3_6_symmetry, with(pert, {"a_m1_re", "a_m1_im", "a_1_re", "a_1_im"})}},
      {"prop_3_7", {prop_3_7, with(pert, {"grid"})}},
      {"theorem_3_8", {theorem_3_8, pert}},
      {"theorem_4_1", {theorem_4_1, with(fig, {"grid", "levels"})}},
      {"corollary_4_2", {corollary_4_2, with(fig, {"grid"})}},
      {"theorem_4_3", {theorem_4_3, with(fig, {"grid"})}},
      {"step_two", {step_two, with(fig, {"grid"})}},
      {"total_curvature_8pi", {total_curvature_8pi, with(fig, {"r_lo", "r_hi"})}},
  };
  return r;
}

}  // namespace

// --- report -----------------------------------------------------------------

void MeasureReport::set(const std::string& name, double value) {
  for (auto& [k, v] : quantities) {
    if (k == name) {
      v = value;
      return;
    }
  }
  quantities.emplace_back(name, value);
}

void MeasureReport::check(const std::string& name, bool pass, double margin) {
  for (auto& [k, v] : verdicts) {
    if (k == name) {
      v = {pass, margin};
      return;
    }
  }
  verdicts.emplace_back(name, Verdict{pass, margin});
}

void MeasureReport::merge(const MeasureReport& other, const std::string& prefix) {
  for (const auto& [k, v] : other.quantities) set(prefix + k, v);
  for (const auto& [k, v] : other.verdicts) check(prefix + k, v.pass, v.margin);
  for (const auto& [k, v] : other.provenance.items()) provenance[prefix + k] = v;
}

bool MeasureReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second.pass; });
}

const Verdict* MeasureReport::verdict(const std::string& name) const {
  for (const auto& [k, v] : verdicts) {
    if (k == name) return &v;
  }
  return nullptr;
}

std::optional<double> MeasureReport::quantity(const std::string& name) const {
  for (const auto& [k, v] : quantities) {
    if (k == name) return v;
  }
  return std::nullopt;
}

Json report_to_json(const MeasureReport& r) {
  Json j;
  j["scenario"] = r.scenario;
  Json q = Json::object();
  for (const auto& [k, v] : r.quantities) q[k] = v;
  j["quantities"] = q;
  Json v = Json::object();
  for (const auto& [k, x] : r.verdicts) v[k] = {{"pass", x.pass}, {"margin", x.margin}};
  j["verdicts"] = v;
  j["provenance"] = r.provenance;
  return j;
}

const std::vector<std::string>& scenario_catalog() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, e] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

MeasureReport run_scenario(const Scenario& s) {
  auto it = registry().find(s.name);
  if (it == registry().end()) throw SchemaError("unknown scenario \"" + s.name + "\"");
  for (const auto& [k, v] : s.params) {
    if (!it->second.params.count(k)) {
      throw SchemaError("scenario " + s.name + " does not take parameter \"" + k + "\"");
    }
  }

  MeasureReport rep;
  try {
    rep = it->second.run(s);
    rep.check("completed", true, 0.0);
  } catch (const Error& e) {
    rep.check("completed", false, -1.0);
    rep.provenance["error"] = {
        {"class", e.error_class() == ErrorClass::Numerical ? "numerical" : "validation"},
        {"message", e.what()}};
  }
  rep.scenario = s.name;
  Json prov;
  prov["tool"] = "minsurf";
  prov["version"] = kToolVersion;
  prov["theta_nodes"] = s.cfg.theta_nodes;
  prov["radial_tol"] = s.cfg.radial_tol;
  prov["exec"] = s.cfg.exec == Exec::Serial ? "serial" : "parallel";
  prov["seed"] = s.seed;
  prov["params"] = echo_params(s.params);
  if (s.data) prov["data"] = data_to_json(*s.data);
  for (const auto& [k, v] : rep.provenance.items()) prov[k] = v;
  rep.provenance = prov;
  return rep;
}

// --- comparisons -------------------------------------------------------------

std::vector<double> height_grid(const Slab& slab, int n) {
  if (n < 2) throw DomainError("height grid needs at least 2 points");
  std::vector<double> h(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    h[static_cast<std::size_t>(i)] = slab.h_minus + slab.thickness() * i / (n - 1);
  }
  return h;
}

MeasureReport compare_lengths(const WeierstrassData& sigma, const CatenoidParams& cat,
                              const Slab& slab, int n_heights, Relation expected,
                              const NumericConfig& cfg) {
  const double f3 = flux(sigma).f3;
  if (std::abs(f3 - cat.f3) > 1e-9 * std::abs(f3)) {
    std::ostringstream os;
    os << "flux mismatch: surface f3 = " << f3 << ", catenoid f3 = " << cat.f3;
    throw PreconditionError(os.str());
  }
  MeasureReport rep;
  const bool sym = symmetry_check(sigma);
  const Waist waist = sym ? Waist{0.0, trace_level(sigma, 0.0, cfg).length}
                          : find_waist(sigma, slab, 17, cfg);
  const double waist_err = std::abs(waist.length - f3) / f3;
  rep.set("f3", f3);
  rep.set("waist_h", waist.h0);
  rep.set("waist_length", waist.length);
  rep.set("waist_relative_error", waist_err);
  rep.check("waist_length_equals_flux", waist_err <= kWaistTol, kWaistTol - waist_err);

  double worst = std::numeric_limits<double>::infinity();
  double worst_h = 0.0;
  bool below_flux = false;
  Json levels = Json::array();
  for (double h : height_grid(slab, n_heights)) {
    const double ls = trace_level(sigma, h, cfg).length;
    below_flux = below_flux || ls < f3 * (1.0 - kWaistTol);
    const double lc = catenoid_level_length(cat, h);
    levels.push_back({{"h", h}, {"ell_sigma", ls}, {"ell_catenoid", lc}});
    if (std::abs(h - waist.h0) <= 1e-12 * std::max(1.0, slab.half_height())) continue;
    const double m = (expected == Relation::Below ? lc - ls : ls - lc) / lc;
    if (m < worst) {
      worst = m;
      worst_h = h;
    }
  }
  rep.set("min_relative_margin", worst);
  rep.set("h_at_min_margin", worst_h);
  rep.check("flux_bounds_level_length", !below_flux, below_flux ? -1.0 : 1.0);
  rep.check(expected == Relation::Below ? "ell_sigma_below_catenoid" : "ell_sigma_above_catenoid",
            worst > 0.0, worst);
  rep.provenance["levels"] = levels;
  rep.provenance["catenoid"] = {{"f3", cat.f3}, {"center", cat.center}, {"k", cat.k}};
  rep.provenance["slab"] = {slab.h_minus, slab.h_plus};
  return rep;
}

MeasureReport compare_areas(const WeierstrassData& sigma, const CatenoidParams& cat,
                            const Slab& slab, Relation expected, const NumericConfig& cfg) {
  MeasureReport rep;
  const double a = slab_area(sigma, slab, cfg);
  const double ac = catenoid_slab_area(cat, slab);
  const double margin = expected == Relation::Below ? ac - a : a - ac;
  rep.set("area_sigma", a);
  rep.set("area_catenoid", ac);
  rep.set("area_margin", margin);
  rep.set("area_relative_margin", margin / ac);
  rep.check(expected == Relation::Below ? "area_sigma_below_catenoid" : "area_sigma_above_catenoid",
            margin > 0.0, margin / ac);
  rep.provenance["slab"] = {slab.h_minus, slab.h_plus};
  return rep;
}

MeasureReport classify_levels(const WeierstrassData& sigma, const Slab& slab, int n_levels,
                              int expected_crossings, const NumericConfig& cfg) {
  MeasureReport rep;
  int mismatched = 0;
  int degenerate = 0;
  int min_x = std::numeric_limits<int>::max();
  int max_x = 0;
  int max_mult = 1;
  int min_turn = std::numeric_limits<int>::max();
  int max_turn = std::numeric_limits<int>::min();
  Json levels = Json::array();
  for (double h : height_grid(slab, n_levels)) {
    const LevelCurve c = trace_level(sigma, h, cfg);
    const int turn = turning_number(c);
    if (c.multiplicity > 1) ++degenerate;
    if (c.multiplicity != 1 || c.self_intersections != expected_crossings) ++mismatched;
    min_x = std::min(min_x, c.self_intersections);
    max_x = std::max(max_x, c.self_intersections);
    max_mult = std::max(max_mult, c.multiplicity);
    min_turn = std::min(min_turn, turn);
    max_turn = std::max(max_turn, turn);
    levels.push_back({{"h", h},
                      {"self_intersections", c.self_intersections},
                      {"multiplicity", c.multiplicity},
                      {"turning_number", turn}});
  }
  rep.set("levels", n_levels);
  rep.set("min_crossings", min_x);
  rep.set("max_crossings", max_x);
  rep.set("max_multiplicity", max_mult);
  rep.set("degenerate_levels", degenerate);
  rep.set("min_turning_number", min_turn);
  rep.set("max_turning_number", max_turn);
  rep.check("crossings_match", mismatched == 0, -static_cast<double>(mismatched));
  rep.provenance["levels"] = levels;
  return rep;
}

double reflection_deviation(const WeierstrassData& data, int grid) {
  if (grid < 2) throw DomainError("reflection grid needs at least 2 points per axis");
  const AnnulusWindow& w = data.window();
  const double a = std::log(w.r_inner);
  const double b = std::log(w.r_outer);
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double th = 2.0 * kPi * i / grid;
    for (int j = 0; j < grid; ++j) {
      const double r = std::exp(a + (b - a) * (j + 0.5) / grid);
      const Complex z = std::polar(r, th);
      const Vec3 x = immerse(data, z);
      const Vec3 y = immerse(data, 1.0 / std::conj(z));
      worst = std::max({worst, std::abs(y[0] - x[0]), std::abs(y[1] - x[1]), std::abs(y[2] + x[2])});
    }
  }
  return worst;
}

WeierstrassData random_even_data(std::uint64_t seed, int max_exponent) {
  if (max_exponent < 1) throw DomainError("random data needs max_exponent >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto draw = [&] { return Complex(normal(rng), normal(rng)); };
  for (int attempt = 0; attempt < 100; ++attempt) {
    LaurentPoly::Terms a, b;
    Complex sa{}, sb{};
    for (int n = 1; n <= max_exponent; ++n) {
      a[-n] = draw();
      a[n] = draw();
      b[-n] = draw();
      b[n] = draw();
      sa += a[-n] * a[n];
      sb += b[-n] * b[n];
    }
    // constant term of G^2 is a_0^2 + 2 sum a_{-n} a_n
    a[0] = std::sqrt(-2.0 * sa);
    b[0] = std::sqrt(-2.0 * sb);
    LaurentPoly gm(a);
    LaurentPoly gp(b);
    const Complex c = multiply(gm, gp).coeff(0);
    if (std::abs(c) < 1e-3) continue;
    gp *= std::conj(c) / std::abs(c);
    try {
      return WeierstrassData::from_g_pair(gm, gp, Parity::Even, admissible_annulus(gm, gp, 0.05));
    } catch (const InadmissibleWindowError&) {
      continue;
    }
  }
  throw RootFindingError("could not draw admissible random data");
}

}  // namespace minsurf
