#pragma once

#include <array>
#include <string>

#include "minsurf/laurent.hpp"

namespace minsurf {

/// Even: F± = G±², odd: F± = z·G±².
enum class Parity { Even, Odd };

std::string to_string(Parity p);
Parity parity_from_string(const std::string& s);

using Vec3 = std::array<double, 3>;

/// Open region h_minus < x3 < h_plus.
struct Slab {
  double h_minus = -1.0;
  double h_plus = 1.0;

  Slab() = default;
  Slab(double lo, double hi);

  double center() const { return 0.5 * (h_minus + h_plus); }
  double half_height() const { return 0.5 * (h_plus - h_minus); }
  double thickness() const { return h_plus - h_minus; }
  /// Same center, height scaled by factor.
  Slab scaled(double factor) const;
};

struct FluxVector {
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
};

struct PeriodVerdict {
  bool well_defined = false;
  bool vertical_flux = false;
  /// z^{-1} coefficients of phi1, phi2, phi3.
  std::array<Complex, 3> residues{};
};

struct MetricFactor {
  double lambda = 0.0;
  double mu = 0.0;
};

/// Weierstrass data of a minimal annulus, parameterized by (G₋, G₊, parity)
/// on an annular window. With ψ₃ = G₋G₊ (times z when odd) the Gauss map is
/// g = G₊/G₋, F₋ = ψ₃/g, F₊ = ψ₃g and
///   φ₁ = (F₋ − F₊)/(2z),  φ₂ = i(F₋ + F₊)/(2z),  φ₃ = ψ₃/z.
class WeierstrassData {
 public:
  /// Throws InadmissibleWindowError if G₋ or G₊ has a root with modulus in
  /// [r_inner, r_outer].
  static WeierstrassData from_g_pair(LaurentPoly g_minus, LaurentPoly g_plus, Parity parity,
                                     AnnulusWindow window, double height_offset = 0.0);

  const LaurentPoly& g_minus() const { return g_minus_; }
  const LaurentPoly& g_plus() const { return g_plus_; }
  Parity parity() const { return parity_; }
  const AnnulusWindow& window() const { return window_; }
  double height_offset() const { return height_offset_; }
  const LaurentPoly& f_minus() const { return f_minus_; }
  const LaurentPoly& f_plus() const { return f_plus_; }
  const LaurentPoly& psi3() const { return psi3_; }
  const LaurentPoly& phi(int i) const { return phi_[static_cast<std::size_t>(i - 1)]; }
  const LaurentPoly& phi1() const { return phi_[0]; }
  const LaurentPoly& phi2() const { return phi_[1]; }
  const LaurentPoly& phi3() const { return phi_[2]; }
  /// 0 for even parity, 1 for odd (|F±| = r^p |G±|²).
  int parity_shift() const { return parity_ == Parity::Odd ? 1 : 0; }

  /// Same data on another window (admissibility re-checked).
  WeierstrassData with_window(AnnulusWindow w) const;
  WeierstrassData with_height_offset(double offset) const;

  // Fast pointwise evaluation used by the measurement kernels.
  Complex eval_g_minus(Complex z) const { return dense_gm_(z); }
  Complex eval_g_plus(Complex z) const { return dense_gp_(z); }
  Complex eval_f_minus(Complex z) const { return dense_fm_(z); }
  Complex eval_f_plus(Complex z) const { return dense_fp_(z); }
  Complex eval_psi3(Complex z) const { return dense_psi3_(z); }
  Complex eval_phi3(Complex z) const { return dense_psi3_(z) / z; }
  Complex gauss_map(Complex z) const { return dense_gp_(z) / dense_gm_(z); }
  /// Spherical derivative 2|g'|/(1+|g|²), finite at poles and zeros of g.
  double spherical_derivative(Complex z) const;
  /// ½(|F₋| + |F₊|), the circle-length density.
  double mu(Complex z) const { return 0.5 * (std::abs(dense_fm_(z)) + std::abs(dense_fp_(z))); }

  /// x3 without the single-valuedness check (callers check once up front).
  double height_unchecked(Complex z) const;
  /// Radial derivative of x3 along the ray through z.
  double height_radial_derivative(Complex z) const;
  Vec3 immerse_unchecked(Complex z) const;

  bool operator==(const WeierstrassData& o) const;

 private:
  WeierstrassData() = default;
  void derive();

  LaurentPoly g_minus_;
  LaurentPoly g_plus_;
  Parity parity_ = Parity::Even;
  AnnulusWindow window_;
  double height_offset_ = 0.0;

  LaurentPoly f_minus_;
  LaurentPoly f_plus_;
  LaurentPoly psi3_;
  std::array<LaurentPoly, 3> phi_;
  std::array<LogTermAntiderivative, 3> primitive_;
  std::array<DenseLaurent, 3> dense_primitive_;
  double log_radius_ = 0.0;  // ln of the normalization circle radius

  DenseLaurent dense_gm_, dense_gp_, dense_fm_, dense_fp_, dense_psi3_;
};

/// Builds data from (f, g = g_num/g_den): F₋ = z f, F₊ = z f g², with parity
/// read off from whether F± are squares or z times squares.
WeierstrassData from_fg(const LaurentPoly& f, const LaurentPoly& g_num, const LaurentPoly& g_den,
                        AnnulusWindow window);

PeriodVerdict period_check(const WeierstrassData& data);

/// Flux across |z| = r from residues. Requires a well-defined immersion.
FluxVector flux(const WeierstrassData& data);

/// x3(z), normalized to zero mean on the geometric-mean circle of the window
/// (plus the height offset).
double height(const WeierstrassData& data, Complex z);

Vec3 immerse(const WeierstrassData& data, Complex z);

MetricFactor metric_factor(const WeierstrassData& data, Complex z);

/// μ from ½|ψ₃|(1/|g| + |g|); agrees with metric_factor().mu.
double mu_from_psi3(const WeierstrassData& data, Complex z);

/// Reflection symmetry through a horizontal plane: g(1/z̄) = 1/conj(g(z)) and
/// ψ₃(1/z̄) = conj(ψ₃(z)). Coefficient test b_n = conj(a_{-n}) for even data.
bool symmetry_check(const WeierstrassData& data);

/// Winding of g = G₊/G₋ on |z| = r (r inside the window).
int gauss_winding(const WeierstrassData& data, double r);

}  // namespace minsurf
