#include "minsurf/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {
constexpr double kPruneThreshold = 1e-300;
}

Complex checked(Complex c) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw DomainError("non-finite complex scalar");
  }
  return c;
}

AnnulusWindow::AnnulusWindow(double inner, double outer) : r_inner(inner), r_outer(outer) {
  if (!(inner > 0.0) || !(outer > inner) || !std::isfinite(outer)) {
    std::ostringstream os;
    os << "annulus window requires 0 < r_inner < r_outer < inf, got (" << inner << ", "
       << outer << ")";
    throw DomainError(os.str());
  }
}

double AnnulusWindow::geometric_mean() const { return std::sqrt(r_inner * r_outer); }

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
  for (auto& [n, c] : terms_) checked(c);
  prune();
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, Complex>> terms)
    : LaurentPoly(Terms(terms)) {}

LaurentPoly LaurentPoly::constant(Complex c) { return LaurentPoly({{0, c}}); }

LaurentPoly LaurentPoly::monomial(int exponent, Complex c) { return LaurentPoly({{exponent, c}}); }

void LaurentPoly::prune() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
}

int LaurentPoly::lowest() const { return terms_.empty() ? 0 : terms_.begin()->first; }

int LaurentPoly::highest() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Complex LaurentPoly::coeff(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Complex{} : it->second;
}

double LaurentPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [n, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double LaurentPoly::sum_abs_coeff() const {
  double s = 0.0;
  for (const auto& [n, c] : terms_) s += std::abs(c);
  return s;
}

Complex LaurentPoly::operator()(Complex z) const { return eval(*this, z); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [n, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [n, c] : o.terms_) terms_[n] += c;
  prune();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [n, c] : o.terms_) terms_[n] -= c;
  prune();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(Complex s) {
  checked(s);
  for (auto& [n, c] : terms_) c *= s;
  prune();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return multiply(a, b); }

LaurentPoly LaurentPoly::shifted(int k) const {
  Terms t;
  for (const auto& [n, c] : terms_) t.emplace(n + k, c);
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::derivative() const {
  Terms t;
  for (const auto& [n, c] : terms_) {
    if (n != 0) t.emplace(n - 1, c * static_cast<double>(n));
  }
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::reflected() const {
  Terms t;
  for (const auto& [n, c] : terms_) t.emplace(-n, std::conj(c));
  return LaurentPoly(std::move(t));
}

bool LaurentPoly::approx_equal(const LaurentPoly& o, double tol) const {
  double scale = std::max(max_abs_coeff(), o.max_abs_coeff());
  if (scale == 0.0) return true;
  auto diff = *this - o;
  return diff.max_abs_coeff() <= tol * scale;
}

Complex eval(const LaurentPoly& p, Complex z) {
  if (z == Complex{}) throw DomainError("Laurent polynomial evaluated at z = 0");
  if (p.is_zero()) return {};
  // nonnegative exponents: Horner in z from the top down
  Complex pos{};
  if (p.highest() >= 0) {
    for (int n = p.highest(); n >= 0; --n) pos = pos * z + p.coeff(n);
  }
  // negative exponents: Horner in w = 1/z on sum_{m>=1} c_{-m} w^m
  Complex neg{};
  if (p.lowest() < 0) {
    const Complex w = 1.0 / z;
    for (int m = -p.lowest(); m >= 1; --m) neg = (neg + p.coeff(-m)) * w;
  }
  return pos + neg;
}

DenseLaurent::DenseLaurent(const LaurentPoly& p) : lowest_(p.lowest()) {
  if (p.is_zero()) return;
  coeffs_.resize(static_cast<std::size_t>(p.highest() - p.lowest() + 1));
  for (const auto& [n, c] : p.terms()) coeffs_[static_cast<std::size_t>(n - lowest_)] = c;
}

Complex DenseLaurent::operator()(Complex z) const {
  if (coeffs_.empty()) return {};
  Complex acc{};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
  return lowest_ == 0 ? acc : acc * std::pow(z, lowest_);
}

std::pair<Complex, Complex> DenseLaurent::value_and_derivative(Complex z) const {
  if (coeffs_.empty()) return {};
  // q(z) = sum coeffs_[i] z^i, p = z^lowest q, p' = z^lowest (q' + lowest q / z)
  Complex q{};
  Complex dq{};
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    dq = dq * z + q;
    q = q * z + coeffs_[i];
  }
  const Complex zl = lowest_ == 0 ? Complex(1.0) : std::pow(z, lowest_);
  return {zl * q, zl * (dq + static_cast<double>(lowest_) * q / z)};
}

LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly::Terms t;
  for (const auto& [m, a] : p.terms()) {
    for (const auto& [n, b] : q.terms()) t[m + n] += a * b;
  }
  return LaurentPoly(std::move(t));
}

LogTermAntiderivative antiderivative(const LaurentPoly& p) {
  LaurentPoly::Terms t;
  Complex log_coef{};
  for (const auto& [n, c] : p.terms()) {
    if (n == -1) {
      log_coef = c;
    } else {
      t.emplace(n + 1, c / static_cast<double>(n + 1));
    }
  }
  return {LaurentPoly(std::move(t)), log_coef};
}

Complex circle_mean(const LaurentPoly& p, double r) {
  if (!(r > 0.0)) throw DomainError("circle radius must be positive");
  return p.coeff(0);
}

double circle_l2(const LaurentPoly& p, double r) {
  if (!(r > 0.0)) throw DomainError("circle radius must be positive");
  double s = 0.0;
  for (const auto& [n, c] : p.terms()) s += std::norm(c) * std::pow(r, 2 * n);
  return 2.0 * std::numbers::pi * s;
}

int winding_on_circle(const LaurentPoly& p, double r) {
  if (!(r > 0.0)) throw DomainError("circle radius must be positive");
  if (p.is_zero()) throw DomainError("winding number of the zero polynomial");
  int inside = 0;
  for (const Complex& z : roots(p)) {
    const double m = std::abs(z);
    if (std::abs(m - r) <= 1e-9 * r) {
      std::ostringstream os;
      os << "root of modulus " << m << " lies on the contour |z| = " << r;
      throw DegenerateContourError(os.str());
    }
    if (m < r) ++inside;
  }
  return inside + p.lowest();
}

double winding_by_argument(const LaurentPoly& p, double r, int n) {
  double total = 0.0;
  Complex prev = eval(p, Complex(r, 0.0));
  for (int j = 1; j <= n; ++j) {
    const double th = 2.0 * std::numbers::pi * j / n;
    const Complex cur = eval(p, std::polar(r, th));
    total += std::arg(cur / prev);
    prev = cur;
  }
  return total / (2.0 * std::numbers::pi);
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d, double tol) {
  if (d.is_zero()) throw DomainError("division by the zero Laurent polynomial");
  if (p.is_zero()) return LaurentPoly{};
  const int dh = d.highest();
  const int dl = d.lowest();
  const Complex lead = d.coeff(dh);
  const int q_hi = p.highest() - dh;
  const int q_lo = p.lowest() - dl;
  if (q_hi < q_lo) return std::nullopt;

  // work on a dense copy of the remainder
  const int base = p.lowest();
  std::vector<Complex> rem(static_cast<std::size_t>(p.highest() - base + 1));
  for (const auto& [n, c] : p.terms()) rem[static_cast<std::size_t>(n - base)] = c;

  LaurentPoly::Terms q;
  for (int e = q_hi; e >= q_lo; --e) {
    const Complex t = rem[static_cast<std::size_t>(e + dh - base)] / lead;
    if (t == Complex{}) continue;
    q[e] = t;
    for (const auto& [n, c] : d.terms()) rem[static_cast<std::size_t>(e + n - base)] -= t * c;
  }
  const double scale = p.max_abs_coeff();
  for (const Complex& c : rem) {
    if (std::abs(c) > tol * scale) return std::nullopt;
  }
  // drop quotient terms that are pure rounding noise
  const double qscale = [&] {
    double m = 0.0;
    for (const auto& [n, c] : q) m = std::max(m, std::abs(c));
    return m;
  }();
  std::erase_if(q, [&](const auto& kv) { return std::abs(kv.second) <= tol * qscale * 1e-3; });
  return LaurentPoly(std::move(q));
}

std::optional<LaurentPoly> sqrt_exact(const LaurentPoly& p, double tol) {
  if (p.is_zero()) return LaurentPoly{};
  const int lo = p.lowest();
  const int hi = p.highest();
  if ((lo % 2) != 0 || (hi % 2) != 0) return std::nullopt;
  const int top = hi / 2;
  const int bot = lo / 2;
  std::map<int, Complex> s;
  const Complex s_top = std::sqrt(p.coeff(hi));
  s[top] = s_top;
  for (int k = top - 1; k >= bot; --k) {
    const int target = top + k;
    Complex acc{};
    for (int i = k + 1; i < top; ++i) {
      const int j = target - i;
      if (j <= k || j >= top) continue;
      auto it = s.find(j);
      if (it != s.end()) acc += s[i] * it->second;
    }
    const Complex c = (p.coeff(target) - acc) / (2.0 * s_top);
    s[k] = c;
  }
  LaurentPoly root{LaurentPoly::Terms(s.begin(), s.end())};
  if (!multiply(root, root).approx_equal(p, tol)) return std::nullopt;
  // snap rounding-level coefficients to zero
  const double scale = root.max_abs_coeff();
  LaurentPoly::Terms cleaned;
  for (const auto& [n, c] : root.terms()) {
    if (std::abs(c) > 1e-14 * scale) cleaned.emplace(n, c);
  }
  return LaurentPoly(std::move(cleaned));
}

}  // namespace minsurf
