#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "minsurf/errors.hpp"
#include "minsurf/experiments.hpp"
#include "minsurf/families.hpp"
#include "minsurf/weierstrass.hpp"

using namespace minsurf;
using std::numbers::pi;

namespace {

std::vector<Complex> window_points(const AnnulusWindow& w, int n = 7) {
  std::vector<Complex> pts;
  const double a = std::log(w.r_inner), b = std::log(w.r_outer);
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < n; ++j) pts.push_back(std::polar(std::exp(a + (b - a) * i / (n + 1)), 0.3 + 0.9 * j));
  }
  return pts;
}

std::vector<WeierstrassData> samples() {
  return {catenoid_cover(1, 2.0 * pi).data, catenoid_cover(2, 3.0).data, catenoid_cover(3, 2.0 * pi, 0.4).data,
          perturbed_two_cover(1.0, 0.05), perturbed_two_cover({0.8, 0.3}, {0.02, -0.1}),
          figure_eight(1.0, 1.0), random_even_data(11), random_even_data(12)};
}

}  // namespace

TEST(Weierstrass, CatenoidImmersionAtUnitCircle) {
  const WeierstrassData d = catenoid_cover(1, 2.0 * pi).data;
  const Vec3 a = immerse(d, 1.0);
  EXPECT_NEAR(a[0], 1.0, 1e-12);
  EXPECT_NEAR(a[1], 0.0, 1e-12);
  EXPECT_NEAR(a[2], 0.0, 1e-12);
  const Vec3 b = immerse(d, Complex(0.0, 1.0));
  EXPECT_NEAR(b[0], 0.0, 1e-12);
  EXPECT_NEAR(b[1], -1.0, 1e-12);
  // Catenoid profile: radius cosh(x3).
  const Vec3 c = immerse(d, 1.7);
  EXPECT_NEAR(std::hypot(c[0], c[1]), std::cosh(c[2]), 1e-12);
}

TEST(Weierstrass, IsotropyOfPhi) {
  for (const auto& d : samples()) {
    for (const Complex& z : window_points(d.window())) {
      const Complex s = d.phi1()(z) * d.phi1()(z) + d.phi2()(z) * d.phi2()(z) + d.phi3()(z) * d.phi3()(z);
      const double scale = std::norm(d.phi1()(z)) + std::norm(d.phi2()(z)) + std::norm(d.phi3()(z));
      EXPECT_LT(std::abs(s), 1e-12 * scale);
    }
  }
}

TEST(Weierstrass, ImmersionDerivativeIsRealPartOfPhi) {
  for (const auto& d : samples()) {
    for (const Complex& z : window_points(d.window(), 3)) {
      const double h = 1e-6;
      const Vec3 xp = immerse(d, z + h), xm = immerse(d, z - h);
      for (int i = 0; i < 3; ++i) {
        const double fd = (xp[i] - xm[i]) / (2.0 * h);
        EXPECT_NEAR(fd, d.phi(i + 1)(z).real(), 1e-6 * (1.0 + std::abs(d.phi(i + 1)(z))));
      }
    }
  }
}

TEST(Weierstrass, HeightIsHarmonic) {
  for (const auto& d : samples()) {
    for (const Complex& z : window_points(d.window(), 3)) {
      auto five_point = [&](double h) {
        return (height(d, z + h) + height(d, z - h) + height(d, z + Complex(0, h)) +
                height(d, z - Complex(0, h)) - 4.0 * height(d, z)) /
               (h * h);
      };
      // Richardson step removes the O(h^2) stencil error.
      const double lap = (4.0 * five_point(1e-3) - five_point(2e-3)) / 3.0;
      EXPECT_LT(std::abs(lap), 1e-6 * (1.0 + d.psi3().sum_abs_coeff()));
    }
  }
}

TEST(Weierstrass, RadialHeightDerivative) {
  const WeierstrassData d = figure_eight(1.0, 1.0);
  for (const Complex& z : window_points(d.window(), 4)) {
    const Complex u = z / std::abs(z);
    const double h = 1e-6;
    const double fd = (height(d, z + h * u) - height(d, z - h * u)) / (2.0 * h);
    EXPECT_NEAR(d.height_radial_derivative(z), fd, 1e-7);
  }
}

TEST(Weierstrass, MetricFactorForms) {
  for (const auto& d : samples()) {
    for (const Complex& z : window_points(d.window(), 3)) {
      const MetricFactor m = metric_factor(d, z);
      const double r = std::abs(z);
      EXPECT_NEAR(m.lambda * r, m.mu, 1e-12 * m.mu);
      EXPECT_NEAR(mu_from_psi3(d, z), m.mu, 1e-11 * m.mu);
      EXPECT_NEAR(d.mu(z), m.mu, 1e-11 * m.mu);
    }
  }
}

TEST(Weierstrass, PeriodsAndFlux) {
  for (const auto& d : samples()) {
    const PeriodVerdict v = period_check(d);
    EXPECT_TRUE(v.well_defined);
    EXPECT_TRUE(v.vertical_flux);
  }
  const FluxVector f = flux(catenoid_cover(2, 3.0).data);
  EXPECT_NEAR(f.f3, 3.0, 1e-12);
  EXPECT_NEAR(flux(figure_eight(1.0, 1.0)).f3, 8.0 * pi, 1e-12);

  // Flux oracle: contour integral of the conormal, i.e. Im of the phi integral.
  const WeierstrassData d = perturbed_two_cover(1.0, 0.05);
  Complex s = 0.0;
  const int n = 2048;
  for (int j = 0; j < n; ++j) {
    const Complex z = std::polar(1.0, 2.0 * pi * j / n);
    s += d.phi3()(z) * Complex(0, 1) * z;
  }
  s *= 2.0 * pi / n;
  EXPECT_NEAR(s.imag(), flux(d).f3, 1e-10);
}

TEST(Weierstrass, ViolatedConstraintIsDetected) {
  // a0^2 + 2 a_-1 a_1 = 0.1
  const LaurentPoly gm{{-1, 1.0}, {0, Complex(0, -std::sqrt(1.9))}, {1, 1.0}};
  const LaurentPoly gp{{-1, 1.0}, {0, Complex(0, std::sqrt(1.9))}, {1, 1.0}};
  const WeierstrassData d = WeierstrassData::from_g_pair(gm, gp, Parity::Even, {0.7, 1.3});
  const PeriodVerdict v = period_check(d);
  EXPECT_FALSE(v.vertical_flux);
  EXPECT_THROW(flux(d), PreconditionError);
}

TEST(Weierstrass, RootInWindowRejected) {
  const LaurentPoly gm{{0, -1.0}, {1, 1.0}};  // root at z = 1
  EXPECT_THROW(WeierstrassData::from_g_pair(gm, LaurentPoly::constant(1.0), Parity::Even, {0.5, 2.0}),
               InadmissibleWindowError);
}

TEST(Weierstrass, FromFgParity) {
  // f = 1, g = 1/z: F- = z, F+ = 1/z, odd parity.
  const WeierstrassData d = from_fg(LaurentPoly::constant(1.0), LaurentPoly::constant(1.0),
                                    LaurentPoly::monomial(1), {0.5, 2.0});
  EXPECT_EQ(d.parity(), Parity::Odd);
  const Complex z = std::polar(1.3, 0.2);
  EXPECT_LT(std::abs(d.eval_f_minus(z) - z), 1e-14);
  EXPECT_LT(std::abs(d.eval_f_plus(z) - 1.0 / z), 1e-14);
  // f = 1, g = z: F- = z, F+ = z^3, even would need squares, odd: z * 1, z * z^2.
  const WeierstrassData e = from_fg(LaurentPoly::constant(1.0), LaurentPoly::monomial(1),
                                    LaurentPoly::constant(1.0), {0.5, 2.0});
  EXPECT_EQ(e.parity(), Parity::Odd);
  // f = z, g = z: F- = z^2, F+ = z^4, even.
  const WeierstrassData q = from_fg(LaurentPoly::monomial(1), LaurentPoly::monomial(1),
                                    LaurentPoly::constant(1.0), {0.5, 2.0});
  EXPECT_EQ(q.parity(), Parity::Even);
  // f = 1, g = z^(1/2) is not representable.
  EXPECT_THROW(from_fg(LaurentPoly{{0, 1.0}, {1, 1.0}}, LaurentPoly::constant(1.0),
                       LaurentPoly::constant(1.0), {0.1, 0.5}),
               Error);
}

TEST(Weierstrass, SymmetryCheck) {
  EXPECT_TRUE(symmetry_check(perturbed_two_cover(1.0, 0.05)));
  EXPECT_TRUE(symmetry_check(figure_eight(1.0, 1.0)));
  EXPECT_TRUE(symmetry_check(catenoid_cover(1, 2.0 * pi).data));
  EXPECT_FALSE(symmetry_check(perturbed_two_cover_explicit(1.0, 0.05, 1.2, 0.05)));
}

TEST(Weierstrass, ReflectionProperty) {
  for (const auto& d : {perturbed_two_cover(1.0, 0.05), figure_eight(1.0, 1.0), catenoid_cover(2, 5.0).data}) {
    EXPECT_LT(reflection_deviation(d, 16), 1e-9);
  }
}

TEST(Weierstrass, GaussWinding) {
  EXPECT_EQ(std::abs(gauss_winding(catenoid_cover(1, 2.0 * pi).data, 1.0)), 1);
  EXPECT_EQ(std::abs(gauss_winding(catenoid_cover(3, 2.0 * pi).data, 1.0)), 3);
  EXPECT_EQ(std::abs(gauss_winding(perturbed_two_cover(1.0, 0.05), 1.0)), 2);
  EXPECT_EQ(gauss_winding(figure_eight(1.0, 1.0), 1.0), 0);
  EXPECT_THROW(gauss_winding(figure_eight(1.0, 1.0), 100.0), DomainError);
}

TEST(Weierstrass, HeightOffsetShiftsX3) {
  const WeierstrassData d = figure_eight(1.0, 1.0);
  const WeierstrassData e = d.with_height_offset(0.5);
  const Complex z = std::polar(1.2, 0.4);
  EXPECT_NEAR(height(e, z) - height(d, z), 0.5, 1e-14);
  EXPECT_FALSE(d == e);
  EXPECT_TRUE(d == d.with_height_offset(0.0));
}

TEST(Weierstrass, SphericalDerivativeMatchesDefinition) {
  const WeierstrassData d = perturbed_two_cover(1.0, 0.05);
  for (const Complex& z : window_points(d.window(), 3)) {
    const double h = 1e-6;
    const Complex gp = (d.gauss_map(z + h) - d.gauss_map(z - h)) / (2.0 * h);
    const double g2 = std::norm(d.gauss_map(z));
    EXPECT_NEAR(d.spherical_derivative(z), 2.0 * std::abs(gp) / (1.0 + g2), 1e-6);
  }
}
