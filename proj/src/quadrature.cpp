#include "minsurf/quadrature.hpp"

#include <cmath>
#include <exception>
#include <numbers>

#include "minsurf/errors.hpp"

namespace minsurf {

void for_each_node(std::size_t n, Exec exec, const std::function<void(std::size_t)>& fn) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  // exceptions cannot cross the parallel region; keep the lowest-index one
  const auto count = static_cast<long long>(n);
  std::exception_ptr first;
  long long first_index = count;
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(minsurf_for_each_node)
      if (i < first_index) {
        first_index = i;
        first = std::current_exception();
      }
    }
  }
  if (first) std::rethrow_exception(first);
}

std::vector<double> theta_nodes(int n) {
  if (n < 4) throw DomainError("need at least 4 theta nodes");
  std::vector<double> th(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) th[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / n;
  return th;
}

namespace {
double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}
}  // namespace

double periodic_trapezoid(const std::vector<double>& samples) {
  if (samples.empty()) return 0.0;
  return pairwise_sum(samples.data(), samples.size()) * 2.0 * std::numbers::pi /
         static_cast<double>(samples.size());
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs n >= 1");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

namespace {
double panel(const std::function<double(double)>& f, const GaussRule& rule, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return s * half;
}

double refine(const std::function<double(double)>& f, const GaussRule& rule, double a, double b,
              double whole, double abs_tol, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = panel(f, rule, a, m);
  const double right = panel(f, rule, m, b);
  const double split = left + right;
  if (depth <= 0 || std::abs(split - whole) <= std::max(tol * std::abs(split), abs_tol)) return split;
  return refine(f, rule, a, m, left, 0.5 * abs_tol, tol, depth - 1) +
         refine(f, rule, m, b, right, 0.5 * abs_tol, tol, depth - 1);
}
}  // namespace

double adaptive_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                               double tol, int points, int max_depth) {
  const GaussRule rule = gauss_legendre(points);
  const double whole = panel(f, rule, a, b);
  return refine(f, rule, a, b, whole, tol * std::abs(whole), tol, max_depth);
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw DomainError("bisection bracket has no sign change");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace minsurf
