#pragma once

#include <array>
#include <vector>

#include "minsurf/quadrature.hpp"
#include "minsurf/weierstrass.hpp"

namespace minsurf {

struct LevelNode {
  double theta = 0.0;
  double r = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

/// Traced level set {x3 = h} as a graph r(theta) over the uniform theta grid.
struct LevelCurve {
  double h = 0.0;
  std::vector<LevelNode> nodes;
  double length = 0.0;
  /// Transversal crossings of the planar (x1, x2) image of one traversal.
  int self_intersections = 0;
  /// Number of times the planar image is traversed (k for a k-fold cover).
  int multiplicity = 1;
  std::vector<std::array<double, 2>> crossings;
};

/// Unique r in the window with height(r e^{i theta}) = h.
///
/// Throws HeightOutOfRangeError if h is not attained on the ray and
/// NonMonotoneRayError if the radial derivative of x3 changes sign on the
/// ray (32 probes), i.e. the level set is not a graph over theta.
double level_radius(const WeierstrassData& data, double h, double theta);

LevelCurve trace_level(const WeierstrassData& data, double h, const NumericConfig& cfg = {});

/// Transversal self-crossings of a closed polyline, merged within tol.
/// Adjacent segments are skipped. Segment parameters are tested on [0, 1)
/// with a 1e-12 slack so crossings through a node are not lost to rounding.
std::vector<std::array<double, 2>> polyline_crossings(const std::vector<std::array<double, 2>>& pts,
                                                      double tol = 1e-9);

/// Rotation index of the closed planar polyline over all nodes: 1 for an
/// embedded circle, 0 for a figure eight, k for a k-times traversed circle
/// (sign follows orientation).
int turning_number(const LevelCurve& curve);

/// d/dtheta of uniformly sampled periodic data by FFT.
std::vector<double> spectral_derivative(const std::vector<double>& samples);

}  // namespace minsurf
