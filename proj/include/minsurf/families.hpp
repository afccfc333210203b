#pragma once

#include "minsurf/measures.hpp"
#include "minsurf/weierstrass.hpp"

namespace minsurf {

struct CatenoidCover {
  WeierstrassData data;
  CatenoidParams params;
};

/// k-fold cover with flux (0, 0, f3): F- = c z^k, F+ = c z^-k, c = f3 / (2 pi).
/// Odd k uses odd parity. The waist sits at height center.
CatenoidCover catenoid_cover(int k, double f3, double center = 0.0, double margin = 0.05);

struct PerturbedCoverParams {
  Complex c1, c2, eps1, eps2, delta1, delta2;
};

/// G- = c1 z + eps1 + delta1/z, G+ = c2/z + eps2 + delta2 z with
/// delta = -eps^2 / (2c). symmetric sets (c2, eps2) = conj(c1, eps1).
WeierstrassData perturbed_two_cover(Complex c1, Complex eps1, bool symmetric = true,
                                    double margin = 0.05);

/// Both triples supplied; deltas are solved from the constraint.
WeierstrassData perturbed_two_cover_explicit(Complex c1, Complex eps1, Complex c2, Complex eps2,
                                             double margin = 0.05);

/// Reads (c, eps, delta) back from perturbed-cover data. Throws
/// UnsupportedDataError for other shapes and InadmissibleParametersError
/// outside |eps| < |c|/4.
PerturbedCoverParams perturbed_cover_params(const WeierstrassData& data);

struct FigureEightParams {
  Complex a_m1, a_0, a_1, b_m1, b_0, b_1;
};

/// G- = a_m1/z + a_0 + a_1 z with a_0 = sqrt(-2 a_m1 a_1) (principal branch);
/// symmetric sets b_n = conj(a_{-n}).
WeierstrassData figure_eight(Complex a_m1, Complex a_1, bool symmetric = true, double margin = 0.05);

/// Explicit b triple; b_0 must satisfy b_0^2 + 2 b_m1 b_1 = 0 (not enforced,
/// period_check reports it).
WeierstrassData figure_eight(const FigureEightParams& params, double margin = 0.05);

/// True if the roots of G- and G+ lie on pairwise distinct circles.
bool roots_on_distinct_circles(const WeierstrassData& data, double rel_tol = 1e-9);

/// Root-free annulus around the geometric mean of all root moduli of G+-,
/// clipped to (anchor/e, anchor*e) and shrunk by (1 + margin) on each side.
AnnulusWindow admissible_annulus(const LaurentPoly& g_minus, const LaurentPoly& g_plus,
                                 double margin = 0.05);

/// Largest slab inside both the request and the height range attained on
/// every ray of the window.
Slab clip_to_slab(const WeierstrassData& data, const Slab& requested);

/// clip_to_slab over an unbounded request, then scaled by 1/4 about its center.
Slab thin_slab(const WeierstrassData& data);

}  // namespace minsurf
