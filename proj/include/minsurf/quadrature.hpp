#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace minsurf {

/// Execution policy for the data-parallel node loops. Both policies produce
/// bit-identical results: per-node values are written into arrays and reduced
/// serially afterwards.
enum class Exec { Serial, Parallel };

/// Node counts and policy shared by the measurement routines.
struct NumericConfig {
  int theta_nodes = 4096;
  Exec exec = Exec::Parallel;
  double radial_tol = 1e-10;
};

/// Calls fn(i) for i in [0, n), distributing over OpenMP threads when
/// exec == Exec::Parallel. fn must only write to slot i of its outputs. If
/// any call throws, the exception from the lowest index is rethrown.
void for_each_node(std::size_t n, Exec exec, const std::function<void(std::size_t)>& fn);

/// Uniform nodes theta_j = 2 pi j / n.
std::vector<double> theta_nodes(int n);

/// Ordered (pairwise) sum of the samples times 2 pi / n.
double periodic_trapezoid(const std::vector<double>& samples);

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// Gauss-Legendre rule with n points (Newton iteration on P_n).
GaussRule gauss_legendre(int n);

/// Adaptive Gauss-Legendre on [a, b]: panels are bisected until the n-point
/// value and the sum over the two halves agree to tol (relative, with an
/// absolute floor of tol * |first estimate|).
double adaptive_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                               double tol, int points = 10, int max_depth = 30);

/// Bisection root of a continuous function with f(lo), f(hi) of opposite sign.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace minsurf
