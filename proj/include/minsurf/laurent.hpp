#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

namespace minsurf {

using Complex = std::complex<double>;

/// Throws DomainError unless both parts are finite.
Complex checked(Complex c);

/// Open annulus r_inner < |z| < r_outer.
struct AnnulusWindow {
  double r_inner = 0.0;
  double r_outer = 0.0;

  AnnulusWindow() = default;
  AnnulusWindow(double inner, double outer);

  double geometric_mean() const;
  bool contains(double r) const { return r > r_inner && r < r_outer; }
  bool operator==(const AnnulusWindow&) const = default;
};

/// Finite Laurent polynomial sum_n c_n z^n with a sparse exponent map.
///
/// Coefficients with magnitude below 1e-300 are pruned on every mutation so
/// the extreme exponents always carry nonzero coefficients.
class LaurentPoly {
 public:
  using Terms = std::map<int, Complex>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);
  LaurentPoly(std::initializer_list<std::pair<const int, Complex>> terms);

  static LaurentPoly constant(Complex c);
  static LaurentPoly monomial(int exponent, Complex c = 1.0);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Extreme exponents; both 0 for the zero polynomial.
  int lowest() const;
  int highest() const;
  Complex coeff(int n) const;
  /// Largest coefficient magnitude (0 for the zero polynomial).
  double max_abs_coeff() const;
  double sum_abs_coeff() const;

  Complex operator()(Complex z) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(Complex s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, Complex s) { return a *= s; }
  friend LaurentPoly operator*(Complex s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly&) const = default;

  /// Multiplies by z^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly derivative() const;
  /// z -> conj(p(1/conj(z))), i.e. c_n -> conj(c_{-n}).
  LaurentPoly reflected() const;
  /// True if every coefficient differs by at most tol * scale, where scale is
  /// the larger of the two max coefficient magnitudes (or 1 if both are zero).
  bool approx_equal(const LaurentPoly& o, double tol) const;

 private:
  void prune();
  Terms terms_;
};

/// Contiguous copy of a LaurentPoly for evaluation inside hot loops.
class DenseLaurent {
 public:
  DenseLaurent() = default;
  explicit DenseLaurent(const LaurentPoly& p);

  Complex operator()(Complex z) const;
  /// Value and derivative at z.
  std::pair<Complex, Complex> value_and_derivative(Complex z) const;
  bool empty() const { return coeffs_.empty(); }

 private:
  int lowest_ = 0;
  std::vector<Complex> coeffs_;
};

/// Evaluates sum c_n z^n by Horner on the nonnegative part and on the
/// negative part in 1/z. Throws DomainError for z == 0.
Complex eval(const LaurentPoly& p, Complex z);

LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q);

struct LogTermAntiderivative {
  LaurentPoly poly_part;
  Complex log_coefficient{0.0, 0.0};
};

LogTermAntiderivative antiderivative(const LaurentPoly& p);

/// Mean over |z| = r; equals the constant coefficient for every r > 0.
Complex circle_mean(const LaurentPoly& p, double r);

/// Closed form of the integral of |p(r e^{i theta})|^2 over [0, 2 pi].
double circle_l2(const LaurentPoly& p, double r);

/// Nonzero roots of p, i.e. roots of z^{-lowest} p(z), repeated by multiplicity.
std::vector<Complex> roots(const LaurentPoly& p);

/// Winding number of p around 0 along |z| = r, from the root count inside the
/// circle. Throws DegenerateContourError when a root lies within
/// 1e-9 relative distance of the circle.
int winding_on_circle(const LaurentPoly& p, double r);

/// Same winding number from summed argument increments over n samples.
/// Used to cross-check the algebraic count.
double winding_by_argument(const LaurentPoly& p, double r, int n = 4096);

/// Exact division: returns q with p == q * d up to tol, or nullopt.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d,
                                        double tol = 1e-12);

/// Laurent square root s with s*s == p up to tol (leading coefficient takes the
/// principal branch), or nullopt if p is not a perfect square.
std::optional<LaurentPoly> sqrt_exact(const LaurentPoly& p, double tol = 1e-12);

}  // namespace minsurf
