#include "minsurf/level_curve.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

constexpr int kMonotoneProbes = 32;
constexpr int kMaxNewton = 200;
constexpr int kMaxMultiplicity = 16;
constexpr double kParamSlack = 1e-12;

// fftw planning is not thread-safe; execution is
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

void require_single_valued_height(const WeierstrassData& data) {
  const Complex c = data.phi3().coeff(-1);
  if (std::abs(c.imag()) > 1e-12 * std::max(data.phi3().max_abs_coeff(), 1e-300)) {
    throw MultivaluedError("height is multivalued: z^-1 coefficient of phi3 is not real");
  }
}

double cross(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

double radius_impl(const WeierstrassData& data, double h, double theta) {
  const Complex dir = std::polar(1.0, theta);
  auto f = [&](double s) { return data.height_unchecked(std::exp(s) * dir) - h; };
  auto df = [&](double s) {
    const double r = std::exp(s);
    return r * data.height_radial_derivative(r * dir);
  };

  double a = std::log(data.window().r_inner);
  double b = std::log(data.window().r_outer);
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return std::exp(a);
  if (fb == 0.0) return std::exp(b);
  if ((fa > 0.0) == (fb > 0.0)) {
    std::ostringstream os;
    os << "height " << h << " not attained on the ray theta = " << theta << " (range "
       << std::min(fa, fb) + h << " .. " << std::max(fa, fb) + h << ")";
    throw HeightOutOfRangeError(os.str());
  }

  const bool increasing = fb > fa;
  for (int j = 0; j < kMonotoneProbes; ++j) {
    const double s = a + (b - a) * j / (kMonotoneProbes - 1);
    const double d = df(s);
    if (!(increasing ? d > 0.0 : d < 0.0)) {
      std::ostringstream os;
      os << "x3 is not monotone along the ray theta = " << theta << " (d x3/dr = " << d
         << " at r = " << std::exp(s) << ")";
      throw NonMonotoneRayError(os.str());
    }
  }

  // safeguarded Newton in s = ln r
  double s = 0.5 * (a + b);
  for (int it = 0; it < kMaxNewton; ++it) {
    const double fs = f(s);
    if (fs == 0.0) break;
    if ((fs > 0.0) == (fa > 0.0)) {
      a = s;
      fa = fs;
    } else {
      b = s;
    }
    double next = s - fs / df(s);
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    const double step = std::abs(next - s);
    s = next;
    if (step <= 4e-16 * std::max(1.0, std::abs(s)) || b - a <= 4e-16 * std::max(1.0, std::abs(s))) {
      break;
    }
  }
  return std::exp(s);
}

int detect_multiplicity(const std::vector<std::array<double, 2>>& pts, double tol) {
  const std::size_t n = pts.size();
  for (int m = kMaxMultiplicity; m > 1; --m) {
    if (n % static_cast<std::size_t>(m) != 0) continue;
    const std::size_t period = n / static_cast<std::size_t>(m);
    bool periodic = true;
    for (std::size_t j = 0; j + period < n && periodic; ++j) {
      const double dx = pts[j][0] - pts[j + period][0];
      const double dy = pts[j][1] - pts[j + period][1];
      periodic = std::hypot(dx, dy) <= tol;
    }
    if (periodic) return m;
  }
  return 1;
}

}  // namespace

double level_radius(const WeierstrassData& data, double h, double theta) {
  require_single_valued_height(data);
  return radius_impl(data, h, theta);
}

std::vector<double> spectral_derivative(const std::vector<double>& samples) {
  const int n = static_cast<int>(samples.size());
  if (n < 4) throw DomainError("spectral derivative needs at least 4 samples");
  std::vector<double> in(samples);
  std::vector<fftw_complex> spec(static_cast<std::size_t>(n / 2 + 1));
  std::vector<double> out(static_cast<std::size_t>(n));
  fftw_plan fwd;
  fftw_plan bwd;
  {
    std::lock_guard lock(fftw_planner_mutex());
    fwd = fftw_plan_dft_r2c_1d(n, in.data(), spec.data(), FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_1d(n, spec.data(), out.data(), FFTW_ESTIMATE);
  }
  fftw_execute(fwd);
  for (int k = 0; k <= n / 2; ++k) {
    auto& c = spec[static_cast<std::size_t>(k)];
    // drop the Nyquist mode, its derivative is not real
    const double kk = (n % 2 == 0 && k == n / 2) ? 0.0 : static_cast<double>(k);
    const double re = c[0];
    c[0] = -kk * c[1] / n;
    c[1] = kk * re / n;
  }
  fftw_execute(bwd);
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  return out;
}

LevelCurve trace_level(const WeierstrassData& data, double h, const NumericConfig& cfg) {
  require_single_valued_height(data);
  const std::vector<double> theta = theta_nodes(cfg.theta_nodes);
  const std::size_t n = theta.size();

  LevelCurve curve;
  curve.h = h;
  curve.nodes.resize(n);
  std::vector<double> radii(n);
  for_each_node(n, cfg.exec, [&](std::size_t j) {
    const double r = radius_impl(data, h, theta[j]);
    const Vec3 x = data.immerse_unchecked(std::polar(r, theta[j]));
    radii[j] = r;
    curve.nodes[j] = {theta[j], r, x[0], x[1], x[2]};
  });

  const std::vector<double> dr = spectral_derivative(radii);
  std::vector<double> integrand(n);
  for_each_node(n, cfg.exec, [&](std::size_t j) {
    const double r = radii[j];
    const double lambda = data.mu(std::polar(r, theta[j])) / r;
    integrand[j] = lambda * std::hypot(dr[j], r);
  });
  curve.length = periodic_trapezoid(integrand);

  std::vector<std::array<double, 2>> pts(n);
  double extent = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    pts[j] = {curve.nodes[j].x1, curve.nodes[j].x2};
    extent = std::max({extent, std::abs(pts[j][0]), std::abs(pts[j][1])});
  }
  const double tol = 1e-9 * std::max(1.0, extent);
  curve.multiplicity = detect_multiplicity(pts, tol);
  if (curve.multiplicity > 1) pts.resize(n / static_cast<std::size_t>(curve.multiplicity));
  curve.crossings = polyline_crossings(pts, tol);
  curve.self_intersections = static_cast<int>(curve.crossings.size());
  return curve;
}

std::vector<std::array<double, 2>> polyline_crossings(const std::vector<std::array<double, 2>>& pts,
                                                      double tol) {
  const std::size_t n = pts.size();
  std::vector<std::array<double, 2>> found;
  if (n < 4) return found;

  struct Seg {
    std::size_t i;
    double xmin, xmax, ymin, ymax;
  };
  std::vector<Seg> segs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % n];
    segs[i] = {i, std::min(p[0], q[0]), std::max(p[0], q[0]), std::min(p[1], q[1]),
               std::max(p[1], q[1])};
  }
  std::sort(segs.begin(), segs.end(),
            [](const Seg& a, const Seg& b) { return a.xmin < b.xmin || (a.xmin == b.xmin && a.i < b.i); });

  for (std::size_t u = 0; u < n; ++u) {
    const Seg& A = segs[u];
    for (std::size_t v = u + 1; v < n && segs[v].xmin <= A.xmax; ++v) {
      const Seg& B = segs[v];
      if (B.ymin > A.ymax || B.ymax < A.ymin) continue;
      const std::size_t gap = A.i > B.i ? A.i - B.i : B.i - A.i;
      if (gap == 1 || gap == n - 1) continue;

      const auto& p = pts[A.i];
      const auto& p2 = pts[(A.i + 1) % n];
      const auto& q = pts[B.i];
      const auto& q2 = pts[(B.i + 1) % n];
      const std::array<double, 2> d1{p2[0] - p[0], p2[1] - p[1]};
      const std::array<double, 2> d2{q2[0] - q[0], q2[1] - q[1]};
      const double denom = cross(d1, d2);
      if (std::abs(denom) <= 1e-14 * std::hypot(d1[0], d1[1]) * std::hypot(d2[0], d2[1])) continue;
      const std::array<double, 2> w{q[0] - p[0], q[1] - p[1]};
      const double s = cross(w, d2) / denom;
      const double t = cross(w, d1) / denom;
      // crossings through a shared node show up on both neighbours; the merge
      // below collapses them, so admit a rounding-sized slack here
      if (s < -kParamSlack || s >= 1.0 + kParamSlack || t < -kParamSlack || t >= 1.0 + kParamSlack) {
        continue;
      }
      const std::array<double, 2> x{p[0] + s * d1[0], p[1] + s * d1[1]};
      const bool dup = std::any_of(found.begin(), found.end(), [&](const auto& y) {
        return std::hypot(x[0] - y[0], x[1] - y[1]) <= tol;
      });
      if (!dup) found.push_back(x);
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

int turning_number(const LevelCurve& curve) {
  const std::size_t n = curve.nodes.size();
  if (n < 3) throw DomainError("turning number needs at least 3 nodes");
  auto edge = [&](std::size_t j) {
    const auto& a = curve.nodes[j];
    const auto& b = curve.nodes[(j + 1) % n];
    return Complex(b.x1 - a.x1, b.x2 - a.x2);
  };
  double total = 0.0;
  Complex prev = edge(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex cur = edge(j);
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

}  // namespace minsurf
