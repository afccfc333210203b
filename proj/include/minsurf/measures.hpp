#pragma once

#include <numbers>
#include <vector>

#include "minsurf/level_curve.hpp"
#include "minsurf/quadrature.hpp"
#include "minsurf/weierstrass.hpp"

namespace minsurf {

/// L(r) = 1/2 * integral of (|F-| + |F+|) over |z| = r, by trapezoid rule.
double circle_length(const WeierstrassData& data, double r, const NumericConfig& cfg = {});

/// Same quantity from coefficients: pi * r^p * sum |a_n|^2 r^{2n} over G- and G+.
double circle_length_closed(const WeierstrassData& data, double r);

/// d^2 L / dt^2 at t = ln r from coefficients.
double circle_length_dd(const WeierstrassData& data, double r);

/// Central second difference of circle_length in t.
double circle_length_dd_fd(const WeierstrassData& data, double r, double step = 1e-3,
                           const NumericConfig& cfg = {});

struct ProfileSample {
  double t = 0.0;
  double L = 0.0;
  double L2 = 0.0;
};

struct CircleLengthProfile {
  std::vector<ProfileSample> samples;
};

/// n samples uniform in t strictly inside the window.
CircleLengthProfile length_profile(const WeierstrassData& data, int n);

struct ConvexityReport {
  int k = 0;  // |gauss winding|
  double min_defect_k2 = 0.0;  // min (L'' - k^2 L)
  double max_defect_k2 = 0.0;
  double min_defect_2 = 0.0;  // min (L'' - 2L)
  double min_defect_4 = 0.0;  // min (L'' - 4L)
  double max_defect_4 = 0.0;  // max (L'' - 4L)
  double min_L = 0.0;
};

ConvexityReport convexity_report(const WeierstrassData& data, const std::vector<double>& radii);

/// Area of the part of the surface between the levels slab.h_minus and
/// slab.h_plus. The radial integral is done exactly per theta node.
double slab_area(const WeierstrassData& data, const Slab& slab, const NumericConfig& cfg = {});

/// Integral of the Gauss curvature over the annulus window (negative).
double total_curvature(const WeierstrassData& data, const AnnulusWindow& window,
                       const NumericConfig& cfg = {});

/// k-fold cover of a vertical catenoid with flux f3 and waist at height center.
struct CatenoidParams {
  double f3 = 2.0 * std::numbers::pi;
  double center = 0.0;
  int k = 1;

  /// Neck radius of each sheet, f3 / (2 pi k).
  double neck_radius() const;
};

/// f3 * cosh(k (2 pi / f3) (h - center)).
double catenoid_level_length(const CatenoidParams& params, double h);

double catenoid_slab_area(const CatenoidParams& params, const Slab& slab);

/// Root of coth(u) = u.
double coth_fixed_point();

/// Catenoid piece whose boundary circles are tangent to rays from the slab
/// center.
CatenoidParams marginally_stable_waist(const Slab& slab);

struct Waist {
  double h0 = 0.0;
  double length = 0.0;
};

/// Minimizes traced level length over the slab (grid scan + golden section).
Waist find_waist(const WeierstrassData& data, const Slab& slab, int grid = 17,
                 const NumericConfig& cfg = {});

}  // namespace minsurf
