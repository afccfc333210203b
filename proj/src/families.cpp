#include "minsurf/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

constexpr int kClipNodes = 4096;

AnnulusWindow window_or_throw(const LaurentPoly& gm, const LaurentPoly& gp, double margin) {
  try {
    return admissible_annulus(gm, gp, margin);
  } catch (const InadmissibleWindowError& e) {
    throw InadmissibleParametersError(e.what());
  }
}

}  // namespace

CatenoidCover catenoid_cover(int k, double f3, double center, double margin) {
  if (k < 1) throw DomainError("cover order k must be >= 1");
  if (!(f3 > 0.0) || !std::isfinite(f3)) throw DomainError("flux f3 must be positive");
  const double c = f3 / (2.0 * std::numbers::pi);
  const Complex root_c = std::sqrt(c);
  LaurentPoly gm, gp;
  Parity parity;
  if (k % 2 == 0) {
    gm = LaurentPoly::monomial(k / 2, root_c);
    gp = LaurentPoly::monomial(-k / 2, root_c);
    parity = Parity::Even;
  } else {
    gm = LaurentPoly::monomial((k - 1) / 2, root_c);
    gp = LaurentPoly::monomial((-k - 1) / 2, root_c);
    parity = Parity::Odd;
  }
  const AnnulusWindow w = admissible_annulus(gm, gp, margin);
  return {WeierstrassData::from_g_pair(gm, gp, parity, w, center), CatenoidParams{f3, center, k}};
}

WeierstrassData perturbed_two_cover(Complex c1, Complex eps1, bool symmetric, double margin) {
  if (!symmetric) {
    throw PreconditionError("non-symmetric perturbed covers need the explicit (c2, eps2) form");
  }
  return perturbed_two_cover_explicit(c1, eps1, std::conj(c1), std::conj(eps1), margin);
}

WeierstrassData perturbed_two_cover_explicit(Complex c1, Complex eps1, Complex c2, Complex eps2,
                                             double margin) {
  for (Complex v : {c1, eps1, c2, eps2}) checked(v);
  if (c1 == Complex{} || c2 == Complex{}) throw DomainError("c1 and c2 must be nonzero");
  if (!(std::abs(eps1) < 0.25 * std::abs(c1)) || !(std::abs(eps2) < 0.25 * std::abs(c2))) {
    std::ostringstream os;
    os << "perturbation too large: need |eps| < |c|/4, got |eps1|/|c1| = "
       << std::abs(eps1) / std::abs(c1) << ", |eps2|/|c2| = " << std::abs(eps2) / std::abs(c2);
    throw InadmissibleParametersError(os.str());
  }
  const Complex delta1 = -eps1 * eps1 / (2.0 * c1);
  const Complex delta2 = -eps2 * eps2 / (2.0 * c2);
  const LaurentPoly gm{{-1, delta1}, {0, eps1}, {1, c1}};
  const LaurentPoly gp{{-1, c2}, {0, eps2}, {1, delta2}};
  return WeierstrassData::from_g_pair(gm, gp, Parity::Even, window_or_throw(gm, gp, margin));
}

PerturbedCoverParams perturbed_cover_params(const WeierstrassData& data) {
  const auto& gm = data.g_minus();
  const auto& gp = data.g_plus();
  if (data.parity() != Parity::Even || gm.is_zero() || gp.is_zero() || gm.lowest() < -1 ||
      gm.highest() != 1 || gp.lowest() != -1 || gp.highest() > 1) {
    throw UnsupportedDataError("not a perturbed 2-cover: need even data with G- = c1 z + ..., G+ = c2/z + ...");
  }
  const PerturbedCoverParams p{gm.coeff(1), gp.coeff(-1), gm.coeff(0), gp.coeff(0), gm.coeff(-1), gp.coeff(1)};
  if (!(std::abs(p.eps1) < 0.25 * std::abs(p.c1)) || !(std::abs(p.eps2) < 0.25 * std::abs(p.c2))) {
    throw InadmissibleParametersError("not in the perturbed 2-cover regime: need |eps| < |c|/4");
  }
  return p;
}

WeierstrassData figure_eight(Complex a_m1, Complex a_1, bool symmetric, double margin) {
  checked(a_m1);
  checked(a_1);
  if (a_m1 == Complex{} || a_1 == Complex{}) throw DomainError("a_m1 and a_1 must be nonzero");
  if (!symmetric) {
    throw PreconditionError("non-symmetric figure-eight data needs an explicit b triple");
  }
  const Complex a_0 = std::sqrt(-2.0 * a_m1 * a_1);
  return figure_eight(
      FigureEightParams{a_m1, a_0, a_1, std::conj(a_1), std::conj(a_0), std::conj(a_m1)}, margin);
}

WeierstrassData figure_eight(const FigureEightParams& p, double margin) {
  for (Complex v : {p.a_m1, p.a_0, p.a_1, p.b_m1, p.b_0, p.b_1}) {
    checked(v);
    if (v == Complex{}) throw DomainError("figure-eight coefficients must all be nonzero");
  }
  const LaurentPoly gm{{-1, p.a_m1}, {0, p.a_0}, {1, p.a_1}};
  const LaurentPoly gp{{-1, p.b_m1}, {0, p.b_0}, {1, p.b_1}};
  return WeierstrassData::from_g_pair(gm, gp, Parity::Even, window_or_throw(gm, gp, margin));
}

bool roots_on_distinct_circles(const WeierstrassData& data, double rel_tol) {
  std::vector<double> m;
  for (const auto* g : {&data.g_minus(), &data.g_plus()}) {
    for (const Complex& z : roots(*g)) m.push_back(std::abs(z));
  }
  std::sort(m.begin(), m.end());
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] - m[i - 1] <= rel_tol * m[i]) return false;
  }
  return true;
}

AnnulusWindow admissible_annulus(const LaurentPoly& g_minus, const LaurentPoly& g_plus,
                                 double margin) {
  if (g_minus.is_zero() || g_plus.is_zero()) throw DomainError("G+- must be nonzero");
  if (!(margin > 0.0 && margin < 1.0)) throw DomainError("margin must lie in (0, 1)");
  std::vector<double> moduli;
  for (const auto* g : {&g_minus, &g_plus}) {
    for (const Complex& z : roots(*g)) moduli.push_back(std::abs(z));
  }
  double log_sum = 0.0;
  for (double m : moduli) log_sum += std::log(m);
  const double anchor = moduli.empty() ? 1.0 : std::exp(log_sum / static_cast<double>(moduli.size()));

  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (double m : moduli) {
    if (std::abs(m - anchor) <= 1e-12 * anchor) {
      throw InadmissibleWindowError("a root lies on the anchor circle |z| = " + std::to_string(anchor));
    }
    if (m < anchor) lo = std::max(lo, m);
    if (m > anchor) hi = std::min(hi, m);
  }
  lo = std::max(lo, anchor / std::numbers::e) * (1.0 + margin);
  hi = std::min(hi, anchor * std::numbers::e) / (1.0 + margin);
  if (!(lo < hi)) {
    std::ostringstream os;
    os << "no root-free annulus around |z| = " << anchor << " survives margin " << margin;
    throw InadmissibleWindowError(os.str());
  }
  return AnnulusWindow(lo, hi);
}

Slab clip_to_slab(const WeierstrassData& data, const Slab& requested) {
  const double pv = data.phi3().coeff(-1).imag();
  if (std::abs(pv) > 1e-12 * std::max(data.phi3().max_abs_coeff(), 1e-300)) {
    throw MultivaluedError("height is multivalued: z^-1 coefficient of phi3 is not real");
  }
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  const std::vector<double> theta = theta_nodes(kClipNodes);
  for (double th : theta) {
    const double a = data.height_unchecked(std::polar(data.window().r_inner, th));
    const double b = data.height_unchecked(std::polar(data.window().r_outer, th));
    lo = std::max(lo, std::min(a, b));
    hi = std::min(hi, std::max(a, b));
  }
  if (!(lo < hi)) throw EmptySlabError("no height is attained on every ray of the window");
  const double out_lo = std::max(lo, requested.h_minus);
  const double out_hi = std::min(hi, requested.h_plus);
  if (!(out_lo < out_hi)) {
    std::ostringstream os;
    os << "requested slab (" << requested.h_minus << ", " << requested.h_plus
       << ") misses the attainable range (" << lo << ", " << hi << ")";
    throw EmptySlabError(os.str());
  }
  return Slab(out_lo, out_hi);
}

Slab thin_slab(const WeierstrassData& data) {
  return clip_to_slab(data, Slab(-std::numeric_limits<double>::max(),
                                 std::numeric_limits<double>::max()))
      .scaled(0.25);
}

}  // namespace minsurf
