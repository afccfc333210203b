#include "minsurf/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

constexpr double kPi = std::numbers::pi;

// sum over G- and G+ of |a_n|^2 w^{2n+p}, w^2 weighted by (2n+p)^pow
double coefficient_sum(const WeierstrassData& data, double r, int pow) {
  const int p = data.parity_shift();
  double s = 0.0;
  for (const auto* g : {&data.g_minus(), &data.g_plus()}) {
    for (const auto& [n, c] : g->terms()) {
      const double e = 2.0 * n + p;
      s += std::pow(e, pow) * std::norm(c) * std::pow(r, e);
    }
  }
  return s;
}

// Dense coefficients of |G(r e^{i theta})|^2 as a real Laurent polynomial in r,
// indexed from exponent 2*lo.
void add_modulus_squared(const LaurentPoly& g, double theta, int lo, std::vector<double>& q) {
  for (const auto& [m, a] : g.terms()) {
    for (const auto& [n, b] : g.terms()) {
      const Complex t = a * std::conj(b) * std::polar(1.0, (m - n) * theta);
      q[static_cast<std::size_t>(m + n - 2 * lo)] += t.real();
    }
  }
}

}  // namespace

double circle_length(const WeierstrassData& data, double r, const NumericConfig& cfg) {
  if (!(r > 0.0)) throw DomainError("circle radius must be positive");
  const std::vector<double> theta = theta_nodes(cfg.theta_nodes);
  std::vector<double> mu(theta.size());
  for_each_node(theta.size(), cfg.exec,
                [&](std::size_t j) { mu[j] = data.mu(std::polar(r, theta[j])); });
  return periodic_trapezoid(mu);
}

double circle_length_closed(const WeierstrassData& data, double r) {
  if (!(r > 0.0)) throw DomainError("circle radius must be positive");
  return kPi * coefficient_sum(data, r, 0);
}

double circle_length_dd(const WeierstrassData& data, double r) {
  if (!(r > 0.0)) throw DomainError("circle radius must be positive");
  return kPi * coefficient_sum(data, r, 2);
}

double circle_length_dd_fd(const WeierstrassData& data, double r, double step,
                           const NumericConfig& cfg) {
  if (!(step > 0.0)) throw DomainError("finite-difference step must be positive");
  const double lp = circle_length(data, r * std::exp(step), cfg);
  const double l0 = circle_length(data, r, cfg);
  const double lm = circle_length(data, r * std::exp(-step), cfg);
  return (lp - 2.0 * l0 + lm) / (step * step);
}

CircleLengthProfile length_profile(const WeierstrassData& data, int n) {
  if (n < 1) throw DomainError("profile needs at least one sample");
  const double a = std::log(data.window().r_inner);
  const double b = std::log(data.window().r_outer);
  CircleLengthProfile prof;
  prof.samples.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = a + (b - a) * (j + 0.5) / n;
    const double r = std::exp(t);
    prof.samples.push_back({t, circle_length_closed(data, r), circle_length_dd(data, r)});
  }
  return prof;
}

ConvexityReport convexity_report(const WeierstrassData& data, const std::vector<double>& radii) {
  if (radii.empty()) throw DomainError("convexity report needs a nonempty grid");
  for (double r : radii) {
    if (!data.window().contains(r)) throw DomainError("convexity grid leaves the window");
  }
  ConvexityReport rep;
  rep.k = std::abs(gauss_winding(data, data.window().geometric_mean()));
  const double k2 = static_cast<double>(rep.k) * rep.k;
  bool first = true;
  for (double r : radii) {
    const double L = circle_length_closed(data, r);
    const double L2 = circle_length_dd(data, r);
    const double dk = L2 - k2 * L;
    const double d2 = L2 - 2.0 * L;
    const double d4 = L2 - 4.0 * L;
    if (first) {
      rep.min_defect_k2 = rep.max_defect_k2 = dk;
      rep.min_defect_2 = d2;
      rep.min_defect_4 = rep.max_defect_4 = d4;
      rep.min_L = L;
      first = false;
      continue;
    }
    rep.min_defect_k2 = std::min(rep.min_defect_k2, dk);
    rep.max_defect_k2 = std::max(rep.max_defect_k2, dk);
    rep.min_defect_2 = std::min(rep.min_defect_2, d2);
    rep.min_defect_4 = std::min(rep.min_defect_4, d4);
    rep.max_defect_4 = std::max(rep.max_defect_4, d4);
    rep.min_L = std::min(rep.min_L, L);
  }
  return rep;
}

double slab_area(const WeierstrassData& data, const Slab& slab, const NumericConfig& cfg) {
  const std::vector<double> theta = theta_nodes(cfg.theta_nodes);
  const int lo = std::min(data.g_minus().lowest(), data.g_plus().lowest());
  const int hi = std::max(data.g_minus().highest(), data.g_plus().highest());
  const int p = data.parity_shift();
  const std::size_t qlen = static_cast<std::size_t>(2 * (hi - lo) + 1);

  std::vector<double> strip(theta.size());
  for_each_node(theta.size(), cfg.exec, [&](std::size_t j) {
    const double r_lo = level_radius(data, slab.h_minus, theta[j]);
    const double r_hi = level_radius(data, slab.h_plus, theta[j]);

    // lambda^2 r = r^{2p-1} (|G-|^2 + |G+|^2)^2 / 4
    std::vector<double> q(qlen, 0.0);
    add_modulus_squared(data.g_minus(), theta[j], lo, q);
    add_modulus_squared(data.g_plus(), theta[j], lo, q);
    std::vector<double> q2(2 * qlen - 1, 0.0);
    for (std::size_t u = 0; u < qlen; ++u) {
      for (std::size_t v = 0; v < qlen; ++v) q2[u + v] += q[u] * q[v];
    }
    const double log_ratio = std::log(r_hi / r_lo);
    double acc = 0.0;
    for (std::size_t e = 0; e < q2.size(); ++e) {
      if (q2[e] == 0.0) continue;
      const int power = static_cast<int>(e) + 4 * lo + 2 * p - 1;
      if (power == -1) {
        acc += q2[e] * log_ratio;
      } else {
        const double k = power + 1.0;
        acc += q2[e] * (std::pow(r_hi, k) - std::pow(r_lo, k)) / k;
      }
    }
    strip[j] = std::abs(0.25 * acc);
  });
  return periodic_trapezoid(strip);
}

double total_curvature(const WeierstrassData& data, const AnnulusWindow& window,
                       const NumericConfig& cfg) {
  const std::vector<double> theta = theta_nodes(cfg.theta_nodes);
  const double a = std::log(window.r_inner);
  const double b = std::log(window.r_outer);
  std::vector<double> ray(theta.size());
  for_each_node(theta.size(), cfg.exec, [&](std::size_t j) {
    const Complex dir = std::polar(1.0, theta[j]);
    auto density = [&](double s) {
      const double r = std::exp(s);
      const double k = data.spherical_derivative(r * dir);
      return k * k * r * r;
    };
    ray[j] = adaptive_gauss_legendre(density, a, b, cfg.radial_tol);
  });
  return -periodic_trapezoid(ray);
}

double CatenoidParams::neck_radius() const { return f3 / (2.0 * kPi * k); }

double catenoid_level_length(const CatenoidParams& params, double h) {
  return params.f3 * std::cosh((h - params.center) / params.neck_radius());
}

double catenoid_slab_area(const CatenoidParams& params, const Slab& slab) {
  const double rho = params.neck_radius();
  const double up = (slab.h_plus - params.center) / rho;
  const double dn = (slab.h_minus - params.center) / rho;
  return 2.0 * kPi * params.k * rho *
         (0.5 * (slab.h_plus - slab.h_minus) + 0.25 * rho * (std::sinh(2.0 * up) - std::sinh(2.0 * dn)));
}

double coth_fixed_point() {
  return bisect([](double u) { return u * std::tanh(u) - 1.0; }, 1.0, 2.0, 1e-15);
}

CatenoidParams marginally_stable_waist(const Slab& slab) {
  const double half = slab.half_height();
  if (!(half > 0.0)) throw DomainError("degenerate slab");
  const double a = coth_fixed_point() / half;
  return {2.0 * kPi / a, slab.center(), 1};
}

Waist find_waist(const WeierstrassData& data, const Slab& slab, int grid, const NumericConfig& cfg) {
  if (grid < 3) throw DomainError("waist search needs at least 3 grid heights");
  auto len = [&](double h) { return trace_level(data, h, cfg).length; };
  std::vector<double> hs(static_cast<std::size_t>(grid));
  std::vector<double> ls(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    hs[i] = slab.h_minus + slab.thickness() * (i + 0.5) / grid;
    ls[i] = len(hs[i]);
  }
  const std::size_t best =
      static_cast<std::size_t>(std::min_element(ls.begin(), ls.end()) - ls.begin());
  double a = best == 0 ? hs.front() : hs[best - 1];
  double b = best + 1 == hs.size() ? hs.back() : hs[best + 1];

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = len(c);
  double fd = len(d);
  const double tol = 1e-9 * std::max(1.0, slab.half_height());
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = len(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = len(d);
    }
  }
  const double h0 = 0.5 * (a + b);
  return {h0, len(h0)};
}

}  // namespace minsurf
