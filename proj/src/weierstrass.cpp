#include "minsurf/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

constexpr double kCoeffTol = 1e-12;
constexpr double kSymmetryTol = 1e-10;
constexpr int kSymmetryGrid = 64;

void require_single_valued(const LogTermAntiderivative& prim, const LaurentPoly& phi, int index) {
  const double scale = std::max(phi.max_abs_coeff(), 1e-300);
  if (std::abs(prim.log_coefficient.imag()) > kCoeffTol * scale) {
    std::ostringstream os;
    os << "coordinate x" << index << " is multivalued: log coefficient " << prim.log_coefficient
       << " has nonzero imaginary part";
    throw MultivaluedError(os.str());
  }
}

}  // namespace

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity parity_from_string(const std::string& s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw SchemaError("parity must be \"even\" or \"odd\", got \"" + s + "\"");
}

Slab::Slab(double lo, double hi) : h_minus(lo), h_plus(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    std::ostringstream os;
    os << "slab requires h_minus < h_plus, got (" << lo << ", " << hi << ")";
    throw DomainError(os.str());
  }
}

Slab Slab::scaled(double factor) const {
  if (!(factor > 0.0)) throw DomainError("slab scale factor must be positive");
  const double c = center();
  const double hh = half_height() * factor;
  return Slab(c - hh, c + hh);
}

WeierstrassData WeierstrassData::from_g_pair(LaurentPoly g_minus, LaurentPoly g_plus,
                                             Parity parity, AnnulusWindow window,
                                             double height_offset) {
  if (g_minus.is_zero() || g_plus.is_zero()) {
    throw DomainError("G- and G+ must be nonzero Laurent polynomials");
  }
  if (!std::isfinite(height_offset)) throw DomainError("height offset must be finite");

  std::vector<double> bad;
  for (const auto* p : {&g_minus, &g_plus}) {
    for (const Complex& z : roots(*p)) {
      const double m = std::abs(z);
      if (m >= window.r_inner && m <= window.r_outer) bad.push_back(m);
    }
  }
  if (!bad.empty()) {
    std::ostringstream os;
    os << "window (" << window.r_inner << ", " << window.r_outer
       << ") contains roots of G+- with moduli";
    for (double m : bad) os << ' ' << m;
    throw InadmissibleWindowError(os.str());
  }

  WeierstrassData d;
  d.g_minus_ = std::move(g_minus);
  d.g_plus_ = std::move(g_plus);
  d.parity_ = parity;
  d.window_ = window;
  d.height_offset_ = height_offset;
  d.derive();
  return d;
}

void WeierstrassData::derive() {
  const int shift = parity_shift();
  f_minus_ = multiply(g_minus_, g_minus_).shifted(shift);
  f_plus_ = multiply(g_plus_, g_plus_).shifted(shift);
  psi3_ = multiply(g_minus_, g_plus_).shifted(shift);

  phi_[0] = (f_minus_ - f_plus_).shifted(-1) * Complex(0.5, 0.0);
  phi_[1] = (f_minus_ + f_plus_).shifted(-1) * Complex(0.0, 0.5);
  phi_[2] = psi3_.shifted(-1);

  for (std::size_t i = 0; i < 3; ++i) {
    primitive_[i] = antiderivative(phi_[i]);
    dense_primitive_[i] = DenseLaurent(primitive_[i].poly_part);
  }
  log_radius_ = std::log(window_.geometric_mean());

  dense_gm_ = DenseLaurent(g_minus_);
  dense_gp_ = DenseLaurent(g_plus_);
  dense_fm_ = DenseLaurent(f_minus_);
  dense_fp_ = DenseLaurent(f_plus_);
  dense_psi3_ = DenseLaurent(psi3_);
}

WeierstrassData WeierstrassData::with_window(AnnulusWindow w) const {
  return from_g_pair(g_minus_, g_plus_, parity_, w, height_offset_);
}

WeierstrassData WeierstrassData::with_height_offset(double offset) const {
  if (!std::isfinite(offset)) throw DomainError("height offset must be finite");
  WeierstrassData d = *this;
  d.height_offset_ = offset;
  return d;
}

double WeierstrassData::spherical_derivative(Complex z) const {
  const auto [gm, dgm] = dense_gm_.value_and_derivative(z);
  const auto [gp, dgp] = dense_gp_.value_and_derivative(z);
  const double den = std::norm(gm) + std::norm(gp);
  if (den == 0.0) return 0.0;
  return 2.0 * std::abs(dgp * gm - gp * dgm) / den;
}

double WeierstrassData::height_unchecked(Complex z) const {
  const double log_r = std::log(std::abs(z));
  return dense_primitive_[2](z).real() + primitive_[2].log_coefficient.real() * (log_r - log_radius_) +
         height_offset_;
}

double WeierstrassData::height_radial_derivative(Complex z) const {
  return (eval_phi3(z) * (z / std::abs(z))).real();
}

Vec3 WeierstrassData::immerse_unchecked(Complex z) const {
  const double log_r = std::log(std::abs(z)) - log_radius_;
  Vec3 x{};
  for (std::size_t i = 0; i < 3; ++i) {
    x[i] = dense_primitive_[i](z).real() + primitive_[i].log_coefficient.real() * log_r;
  }
  x[2] += height_offset_;
  return x;
}

bool WeierstrassData::operator==(const WeierstrassData& o) const {
  return g_minus_ == o.g_minus_ && g_plus_ == o.g_plus_ && parity_ == o.parity_ &&
         window_ == o.window_ && height_offset_ == o.height_offset_;
}

WeierstrassData from_fg(const LaurentPoly& f, const LaurentPoly& g_num, const LaurentPoly& g_den,
                        AnnulusWindow window) {
  if (f.is_zero() || g_num.is_zero() || g_den.is_zero()) {
    throw DomainError("f, g numerator and g denominator must be nonzero");
  }
  // F- = z f, F+ = z f g^2
  const LaurentPoly f_minus = f.shifted(1);
  const auto f_plus = divide_exact(multiply(f_minus, multiply(g_num, g_num)), multiply(g_den, g_den));
  if (!f_plus) throw UnsupportedDataError("z f g^2 is not a Laurent polynomial");

  Parity parity;
  std::optional<LaurentPoly> gm = sqrt_exact(f_minus);
  std::optional<LaurentPoly> gp = sqrt_exact(*f_plus);
  if (gm && gp) {
    parity = Parity::Even;
  } else {
    gm = sqrt_exact(f_minus.shifted(-1));
    gp = sqrt_exact(f_plus->shifted(-1));
    if (!gm || !gp) {
      throw ParityUndeterminedError("F- and F+ are neither both squares nor both z times squares");
    }
    parity = Parity::Odd;
  }

  // fix the branch of G+ so that psi3 = G- G+ (times z) equals z f g
  const LaurentPoly lhs = multiply(multiply(*gm, *gp).shifted(parity == Parity::Odd ? 1 : 0), g_den);
  const LaurentPoly rhs = multiply(f_minus, g_num);
  if (!lhs.approx_equal(rhs, 1e-10)) {
    if ((-lhs).approx_equal(rhs, 1e-10)) {
      *gp = -*gp;
    } else {
      throw UnsupportedDataError("square roots of F+- do not reproduce the height differential");
    }
  }
  return WeierstrassData::from_g_pair(*gm, *gp, parity, window);
}

PeriodVerdict period_check(const WeierstrassData& data) {
  PeriodVerdict v;
  for (int i = 1; i <= 3; ++i) v.residues[static_cast<std::size_t>(i - 1)] = data.phi(i).coeff(-1);
  const double scale = std::max({data.f_minus().max_abs_coeff(), data.f_plus().max_abs_coeff(), 1e-300});
  v.vertical_flux = std::abs(data.f_minus().coeff(0)) <= kCoeffTol * scale &&
                    std::abs(data.f_plus().coeff(0)) <= kCoeffTol * scale;
  v.well_defined = v.vertical_flux && std::abs(v.residues[2].imag()) <= kCoeffTol * scale;
  return v;
}

FluxVector flux(const WeierstrassData& data) {
  const PeriodVerdict v = period_check(data);
  if (!v.well_defined) throw PreconditionError("flux requires data passing the period check");
  const double two_pi = 2.0 * std::numbers::pi;
  return {two_pi * v.residues[0].real(), two_pi * v.residues[1].real(),
          two_pi * v.residues[2].real()};
}

double height(const WeierstrassData& data, Complex z) {
  if (z == Complex{}) throw DomainError("height evaluated at z = 0");
  require_single_valued(antiderivative(data.phi3()), data.phi3(), 3);
  return data.height_unchecked(z);
}

Vec3 immerse(const WeierstrassData& data, Complex z) {
  if (z == Complex{}) throw DomainError("immersion evaluated at z = 0");
  for (int i = 1; i <= 3; ++i) require_single_valued(antiderivative(data.phi(i)), data.phi(i), i);
  return data.immerse_unchecked(z);
}

MetricFactor metric_factor(const WeierstrassData& data, Complex z) {
  if (z == Complex{}) throw DomainError("metric evaluated at z = 0");
  double s = 0.0;
  for (int i = 1; i <= 3; ++i) s += std::norm(eval(data.phi(i), z));
  const double lambda = std::sqrt(0.5 * s);
  return {lambda, std::abs(z) * lambda};
}

double mu_from_psi3(const WeierstrassData& data, Complex z) {
  if (z == Complex{}) throw DomainError("metric evaluated at z = 0");
  const Complex g = data.gauss_map(z);
  const double ag = std::abs(g);
  if (!(ag > 0.0) || !std::isfinite(ag)) {
    throw DomainError("Gauss map vanishes or has a pole at the evaluation point");
  }
  return 0.5 * std::abs(data.eval_psi3(z)) * (1.0 / ag + ag);
}

bool symmetry_check(const WeierstrassData& data) {
  if (data.parity() == Parity::Even) {
    return data.g_plus().approx_equal(data.g_minus().reflected(), kCoeffTol);
  }
  const AnnulusWindow& w = data.window();
  for (double r : {w.r_inner, w.geometric_mean(), w.r_outer}) {
    for (int j = 0; j < kSymmetryGrid; ++j) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * (j + 0.5) / kSymmetryGrid);
      const Complex zr = 1.0 / std::conj(z);
      const Complex prod = data.gauss_map(zr) * std::conj(data.gauss_map(z));
      if (!(std::abs(prod - 1.0) <= kSymmetryTol)) return false;
      const Complex a = data.eval_psi3(zr);
      const Complex b = std::conj(data.eval_psi3(z));
      const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
      if (!(std::abs(a - b) <= kSymmetryTol * scale)) return false;
    }
  }
  return true;
}

int gauss_winding(const WeierstrassData& data, double r) {
  if (!data.window().contains(r)) {
    std::ostringstream os;
    os << "radius " << r << " outside window (" << data.window().r_inner << ", "
       << data.window().r_outer << ")";
    throw DomainError(os.str());
  }
  return winding_on_circle(data.g_plus(), r) - winding_on_circle(data.g_minus(), r);
}

}  // namespace minsurf
