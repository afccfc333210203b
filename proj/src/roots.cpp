// Aberth-Ehrlich simultaneous root iteration for the ordinary polynomial
// z^{-lowest} p(z). Degrees here are small (<= ~20), so robustness matters
// more than speed: a deterministic start circle, a hard iteration cap, and
// seeded random perturbation restarts if the iteration stalls.

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "minsurf/errors.hpp"
#include "minsurf/laurent.hpp"

namespace minsurf {

namespace {

constexpr int kMaxIterations = 500;
constexpr int kMaxRestarts = 6;
constexpr double kResidualTol = 1e-12;
constexpr std::uint32_t kSeed = 0x5eed1234u;

struct Eval {
  Complex p;
  Complex dp;
  double abs_bound;  // sum |a_i| |z|^i, the rounding scale of p(z)
};

Eval horner(const std::vector<Complex>& a, Complex z) {
  Complex p = a.back();
  Complex dp{};
  double bound = std::abs(a.back());
  const double az = std::abs(z);
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
    bound = bound * az + std::abs(a[i]);
  }
  return {p, dp, bound};
}

bool aberth(const std::vector<Complex>& a, std::vector<Complex>& z) {
  const std::size_t d = z.size();
  std::vector<bool> done(d, false);
  for (int it = 0; it < kMaxIterations; ++it) {
    bool all = true;
    for (std::size_t k = 0; k < d; ++k) {
      if (done[k]) continue;
      const Eval e = horner(a, z[k]);
      if (std::abs(e.p) <= 4.0 * std::numeric_limits<double>::epsilon() * e.abs_bound) {
        done[k] = true;
        continue;
      }
      Complex sum{};
      for (std::size_t j = 0; j < d; ++j) {
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      }
      const Complex denom = e.dp - e.p * sum;
      if (denom == Complex{}) {
        all = false;
        continue;
      }
      const Complex w = e.p / denom;
      z[k] -= w;
      if (std::abs(w) <= 1e-16 * std::abs(z[k])) {
        done[k] = true;
      } else {
        all = false;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

std::vector<Complex> roots(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("roots of the zero polynomial");
  const int lo = p.lowest();
  const int d = p.highest() - lo;
  if (d == 0) return {};

  std::vector<Complex> a(static_cast<std::size_t>(d + 1));
  for (const auto& [n, c] : p.terms()) a[static_cast<std::size_t>(n - lo)] = c;
  const Complex lead = a.back();
  for (auto& c : a) c /= lead;

  if (d == 1) return {-a[0]};

  // start on the circle whose radius is the geometric mean of the root moduli
  const double radius = std::pow(std::abs(a[0]), 1.0 / d);
  std::mt19937 rng(kSeed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double phase = 2.0 * std::numbers::pi * unit(rng);
  std::vector<Complex> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    z[static_cast<std::size_t>(k)] =
        std::polar(radius, phase + 2.0 * std::numbers::pi * (k + 0.25) / d);
  }

  bool ok = aberth(a, z);
  for (int restart = 0; !ok && restart < kMaxRestarts; ++restart) {
    for (auto& zk : z) {
      zk *= std::polar(1.0 + 0.1 * (unit(rng) - 0.5), 2.0 * std::numbers::pi * unit(rng));
    }
    ok = aberth(a, z);
  }

  for (const Complex& zk : z) {
    const Eval e = horner(a, zk);
    if (!(std::abs(e.p) <= kResidualTol * e.abs_bound)) {
      std::ostringstream os;
      os << "Aberth-Ehrlich failed to converge (residual " << std::abs(e.p) << " at " << zk
         << ")";
      throw RootFindingError(os.str());
    }
  }
  return z;
}

}  // namespace minsurf
