#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minsurf/measures.hpp"
#include "minsurf/serialize.hpp"
#include "minsurf/weierstrass.hpp"

namespace minsurf {

inline constexpr const char* kToolVersion = "0.1.0";

struct Verdict {
  bool pass = false;
  /// Signed distance to failure; positive when the check holds.
  double margin = 0.0;
};

struct MeasureReport {
  std::string scenario;
  std::vector<std::pair<std::string, double>> quantities;
  std::vector<std::pair<std::string, Verdict>> verdicts;
  Json provenance = Json::object();

  void set(const std::string& name, double value);
  void check(const std::string& name, bool pass, double margin);
  /// Appends another report's quantities and verdicts under a name prefix.
  void merge(const MeasureReport& other, const std::string& prefix);
  bool all_pass() const;
  const Verdict* verdict(const std::string& name) const;
  std::optional<double> quantity(const std::string& name) const;
};

Json report_to_json(const MeasureReport& r);

struct Scenario {
  std::string name;
  /// Replaces the scenario's default surface when set.
  std::optional<WeierstrassData> data;
  /// Scenario parameters (e.g. "eps1", "samples", "grid"); unknown names are
  /// rejected by run_scenario.
  std::map<std::string, double> params;
  NumericConfig cfg;
  std::uint64_t seed = 20240531;
};

/// Names of the shipped paper-claim scenarios.
const std::vector<std::string>& scenario_catalog();

/// Runs a scenario. Failed inequalities become failing verdicts. Construction
/// and tracing errors are caught and reported as a failing "completed" verdict
/// with the error recorded under provenance.error.
MeasureReport run_scenario(const Scenario& s);

enum class Relation { Below, Above };

/// l_Sigma(h) vs the closed-form catenoid length on a uniform grid of n
/// heights over the slab. Requires matching flux.
MeasureReport compare_lengths(const WeierstrassData& sigma, const CatenoidParams& cat,
                              const Slab& slab, int n_heights, Relation expected,
                              const NumericConfig& cfg = {});

/// Area of sigma over the slab vs the closed-form catenoid area.
MeasureReport compare_areas(const WeierstrassData& sigma, const CatenoidParams& cat,
                            const Slab& slab, Relation expected, const NumericConfig& cfg = {});

/// Per-level crossing counts, multiplicities and turning numbers for n
/// uniformly spaced levels in the slab.
MeasureReport classify_levels(const WeierstrassData& sigma, const Slab& slab, int n_levels,
                              int expected_crossings, const NumericConfig& cfg = {});

/// max |X(1/conj z) - R3 X(z)| over a grid x grid tensor grid in (theta, ln r)
/// on the window, R3 negating the third coordinate.
double reflection_deviation(const WeierstrassData& data, int grid = 32);

/// Uniform grid of n heights over [h_minus, h_plus] (n >= 2).
std::vector<double> height_grid(const Slab& slab, int n);

/// Random even-parity data with exponents in [-2, 2] passing the period
/// check (a_0 solved from the constant-term constraint, G+ rotated so the
/// flux is real and positive).
WeierstrassData random_even_data(std::uint64_t seed, int max_exponent = 2);

}  // namespace minsurf
