#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "minsurf/errors.hpp"
#include "minsurf/families.hpp"
#include "minsurf/level_curve.hpp"

using namespace minsurf;
using std::numbers::pi;

TEST(Families, CatenoidCoverParityAndFlux) {
  for (int k = 1; k <= 4; ++k) {
    const CatenoidCover c = catenoid_cover(k, 3.0);
    EXPECT_EQ(c.data.parity(), k % 2 ? Parity::Odd : Parity::Even);
    EXPECT_NEAR(flux(c.data).f3, 3.0, 1e-12);
    EXPECT_EQ(c.params.k, k);
    EXPECT_NEAR(c.params.neck_radius(), 3.0 / (2.0 * pi * k), 1e-15);
  }
  EXPECT_THROW(catenoid_cover(0, 1.0), Error);
  EXPECT_THROW(catenoid_cover(1, -1.0), Error);
}

TEST(Families, PerturbedCoverCoefficients) {
  const Complex c1 = {1.0, 0.2}, eps = {0.05, -0.01};
  const WeierstrassData d = perturbed_two_cover(c1, eps);
  const PerturbedCoverParams p = perturbed_cover_params(d);
  EXPECT_LT(std::abs(p.c1 - c1), 1e-15);
  EXPECT_LT(std::abs(p.eps1 - eps), 1e-15);
  EXPECT_LT(std::abs(p.delta1 + eps * eps / (2.0 * c1)), 1e-15);
  EXPECT_LT(std::abs(p.c2 - std::conj(c1)), 1e-15);
  EXPECT_LT(std::abs(p.eps2 - std::conj(eps)), 1e-15);
  EXPECT_TRUE(period_check(d).vertical_flux);
}

TEST(Families, PerturbedCoverRejections) {
  EXPECT_THROW(perturbed_two_cover(1.0, 0.05, false), PreconditionError);
  EXPECT_THROW(perturbed_two_cover_explicit(1.0, 0.3, 1.0, 0.05), InadmissibleParametersError);
  EXPECT_NO_THROW(perturbed_two_cover_explicit(1.0, 0.05, 1.3, 0.1));
}

TEST(Families, FigureEightConstraint) {
  const Complex am = {0.7, 0.1}, ap = {1.2, -0.3};
  const WeierstrassData d = figure_eight(am, ap);
  const Complex a0 = d.g_minus().coeff(0);
  EXPECT_LT(std::abs(a0 * a0 + 2.0 * am * ap), 1e-14);
  EXPECT_TRUE(period_check(d).vertical_flux);
  EXPECT_TRUE(symmetry_check(d));
  EXPECT_EQ(gauss_winding(d, d.window().geometric_mean()), 0);
}

TEST(Families, AdmissibleAnnulusAvoidsRoots) {
  for (const auto& d : {figure_eight(1.0, 1.0), figure_eight({0.5, 0.0}, {2.0, 1.0}), perturbed_two_cover(1.0, 0.1)}) {
    const AnnulusWindow w = d.window();
    for (const LaurentPoly* p : {&d.g_minus(), &d.g_plus()}) {
      for (const Complex& z : roots(*p)) EXPECT_FALSE(std::abs(z) >= w.r_inner && std::abs(z) <= w.r_outer);
    }
    EXPECT_LE(w.r_outer / w.r_inner, std::exp(2.0) + 1e-12);
  }
}

TEST(Families, ClippedSlabIsAttainedOnEveryRay) {
  for (const auto& d : {figure_eight(1.0, 1.0), perturbed_two_cover(1.0, 0.05)}) {
    const Slab s = clip_to_slab(d, Slab(-100.0, 100.0));
    for (int j = 0; j < 16; ++j) {
      const double th = 2.0 * pi * j / 16;
      EXPECT_NO_THROW(level_radius(d, s.h_minus * 0.999, th));
      EXPECT_NO_THROW(level_radius(d, s.h_plus * 0.999, th));
    }
    const Slab t = thin_slab(d);
    EXPECT_NEAR(t.thickness(), 0.25 * s.thickness(), 1e-14);
    EXPECT_NEAR(t.center(), s.center(), 1e-14);
  }
}

TEST(Families, ThinSlabIsSymmetricForSymmetricData) {
  const Slab s = thin_slab(figure_eight(1.0, 1.0));
  EXPECT_NEAR(s.center(), 0.0, 1e-12);
}
