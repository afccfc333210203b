#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "minsurf/experiments.hpp"
#include "minsurf/families.hpp"
#include "minsurf/measures.hpp"
#include "minsurf/quadrature.hpp"

using namespace minsurf;
using std::numbers::pi;

namespace {

std::vector<WeierstrassData> family_set() {
  return {catenoid_cover(1, 2.0 * pi).data, catenoid_cover(2, 2.0 * pi).data, catenoid_cover(3, 5.0).data,
          perturbed_two_cover(1.0, 0.05), figure_eight(1.0, 1.0), random_even_data(3)};
}

std::vector<double> radii(const AnnulusWindow& w, int n) {
  std::vector<double> out;
  const double a = std::log(w.r_inner), b = std::log(w.r_outer);
  for (int i = 1; i <= n; ++i) out.push_back(std::exp(a + (b - a) * i / (n + 1)));
  return out;
}

// Brute-force slab area: bisection level radii on each ray, Gauss-Legendre in
// t = ln r of mu^2, trapezoid in theta.
double brute_area(const WeierstrassData& d, const Slab& s, int n_theta, int n_t) {
  const GaussRule g = gauss_legendre(n_t);
  const double ta = std::log(d.window().r_inner), tb = std::log(d.window().r_outer);
  std::vector<double> per(n_theta);
  for (int j = 0; j < n_theta; ++j) {
    const double th = 2.0 * pi * j / n_theta;
    auto x3 = [&](double t) { return height(d, std::polar(std::exp(t), th)); };
    const bool up = x3(tb) > x3(ta);
    auto root = [&](double h) {
      return bisect([&](double t) { return (x3(t) - h) * (up ? 1.0 : -1.0); }, ta, tb, 1e-15);
    };
    double t0 = root(s.h_minus), t1 = root(s.h_plus);
    if (t0 > t1) std::swap(t0, t1);
    double sum = 0.0;
    for (int i = 0; i < n_t; ++i) {
      const double t = 0.5 * (t0 + t1) + 0.5 * (t1 - t0) * g.nodes[i];
      const double mu = d.mu(std::polar(std::exp(t), th));
      sum += g.weights[i] * mu * mu;
    }
    per[j] = 0.5 * (t1 - t0) * sum;
  }
  return periodic_trapezoid(per);
}

}  // namespace

TEST(Measures, CircleLengthQuadratureMatchesClosedForm) {
  for (const auto& d : family_set()) {
    for (double r : radii(d.window(), 5)) {
      const double closed = circle_length_closed(d, r);
      EXPECT_NEAR(circle_length(d, r), closed, 1e-12 * closed);
    }
  }
}

TEST(Measures, SecondDerivativeMatchesFiniteDifference) {
  for (const auto& d : family_set()) {
    for (double r : radii(d.window(), 5)) {
      const double closed = circle_length_dd(d, r);
      EXPECT_NEAR(circle_length_dd_fd(d, r), closed, 1e-5 * std::abs(closed));
    }
  }
}

TEST(Measures, CatenoidCoverLaw) {
  for (int k = 1; k <= 3; ++k) {
    const WeierstrassData d = catenoid_cover(k, 2.0 * pi).data;
    for (double r : radii(d.window(), 50)) {
      const double L = circle_length_closed(d, r);
      EXPECT_NEAR(circle_length_dd(d, r), k * k * L, 1e-8 * L);
    }
  }
}

TEST(Measures, StrictConvexityOnRandomData) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const WeierstrassData d = random_even_data(seed);
    const ConvexityReport rep = convexity_report(d, radii(d.window(), 32));
    EXPECT_GT(rep.min_defect_2, 0.0) << "seed " << seed;
  }
}

TEST(Measures, PerturbedDefectIdentity) {
  // L'' - 4L = -4 pi (|eps1|^2 + |eps2|^2), independent of r.
  const Complex eps = {0.03, 0.04};
  const WeierstrassData d = perturbed_two_cover(1.0, eps);
  const double expect = -4.0 * pi * 2.0 * std::norm(eps);
  for (double r : radii(d.window(), 10)) {
    EXPECT_NEAR(circle_length_dd(d, r) - 4.0 * circle_length_closed(d, r), expect, 1e-8 * std::abs(expect));
  }
}

TEST(Measures, SlabAreaAgainstBruteForce) {
  for (const auto& d : {figure_eight(1.0, 1.0), perturbed_two_cover(1.0, 0.05)}) {
    const Slab s = thin_slab(d);
    const double area = slab_area(d, s);
    const double oracle = brute_area(d, s, 256, 256);
    EXPECT_NEAR(area, oracle, 1e-8 * oracle);
  }
}

TEST(Measures, CatenoidAreaClosedForm) {
  for (int k = 1; k <= 3; ++k) {
    const CatenoidCover c = catenoid_cover(k, 2.0 * pi, 0.2);
    const Slab s(0.2 - 0.4, 0.2 + 0.3);
    EXPECT_NEAR(slab_area(c.data, s), catenoid_slab_area(c.params, s), 1e-9 * catenoid_slab_area(c.params, s));
  }
}

TEST(Measures, CatenoidAreaIsLengthIntegral) {
  // Oracle: surface of revolution, 2 pi k r(h) sqrt(1 + r'(h)^2) dh.
  const CatenoidParams p{5.0, 0.1, 2};
  const double a = p.neck_radius();
  auto integrand = [&](double h) {
    const double u = (h - p.center) / a;
    return 2.0 * pi * p.k * a * std::cosh(u) * std::cosh(u);
  };
  const Slab s(-0.3, 0.6);
  EXPECT_NEAR(catenoid_slab_area(p, s), adaptive_gauss_legendre(integrand, s.h_minus, s.h_plus, 1e-14),
              1e-11);
  EXPECT_NEAR(catenoid_level_length(p, 0.4), 5.0 * std::cosh(2.0 * (2.0 * pi / 5.0) * 0.3), 1e-12);
}

TEST(Measures, CothFixedPointAndStableWaist) {
  const double u = coth_fixed_point();
  EXPECT_NEAR(u * std::tanh(u), 1.0, 1e-14);
  EXPECT_NEAR(u, 1.1996786, 1e-6);
  const Slab s(-0.5, 0.9);
  const CatenoidParams c = marginally_stable_waist(s);
  EXPECT_EQ(c.k, 1);
  EXPECT_NEAR(c.center, s.center(), 1e-15);
  // Boundary circle tangent to the ray from the slab center.
  const double a = c.neck_radius(), hh = s.half_height();
  const double radius = a * std::cosh(hh / a);
  EXPECT_NEAR(std::sinh(hh / a), radius / hh, 1e-12);
}

TEST(Measures, TotalCurvatureOfCatenoidBand) {
  // g = z^k covers the spherical band between r1^k and r2^k k times.
  for (int k = 1; k <= 2; ++k) {
    const WeierstrassData d = catenoid_cover(k, 2.0 * pi).data;
    const AnnulusWindow w = d.window();
    const double a = std::pow(w.r_inner, 2 * k), b = std::pow(w.r_outer, 2 * k);
    const double expect = -4.0 * pi * k * (b / (1.0 + b) - a / (1.0 + a));
    EXPECT_NEAR(total_curvature(d, w), expect, 1e-8 * std::abs(expect));
  }
}

TEST(Measures, SerialEqualsParallel) {
  const WeierstrassData d = figure_eight(1.0, 1.0);
  NumericConfig s, p;
  s.exec = Exec::Serial;
  p.exec = Exec::Parallel;
  const Slab slab = thin_slab(d);
  EXPECT_EQ(slab_area(d, slab, s), slab_area(d, slab, p));
  EXPECT_EQ(circle_length(d, 1.1, s), circle_length(d, 1.1, p));
  EXPECT_EQ(total_curvature(d, d.window(), s), total_curvature(d, d.window(), p));
}

TEST(Measures, FindWaistOfShiftedCatenoid) {
  const CatenoidCover c = catenoid_cover(1, 2.0 * pi, 0.3);
  const Waist w = find_waist(c.data, Slab(-0.2, 0.7));
  EXPECT_NEAR(w.h0, 0.3, 1e-5);
  EXPECT_NEAR(w.length, 2.0 * pi, 1e-8);
}

TEST(Measures, LengthProfileInsideWindow) {
  const WeierstrassData d = figure_eight(1.0, 1.0);
  const CircleLengthProfile p = length_profile(d, 40);
  ASSERT_EQ(p.samples.size(), 40u);
  for (const auto& s : p.samples) {
    EXPECT_TRUE(d.window().contains(std::exp(s.t)));
    EXPECT_NEAR(s.L, circle_length_closed(d, std::exp(s.t)), 1e-12 * s.L);
  }
}
