// Non-parabolic deformation of the parabolic representations.
//
// With a -> (t 1; 0 1/t) and b -> (t 0; x 1/t), the word relation
// W rho(a) = rho(b) W holds iff
//
//   (1,2):  phi(t, x) = w11 + (1/t - t) w12 = 0
//   (2,1):  (t - 1/t) w21 = x w11
//   (2,2):  w21 = x w12
//
// phi is symmetric under t <-> 1/t, so phi(t, x) = psi(s, x) with s = t + 1/t
// and psi(2, x) the Riley polynomial. Real roots of psi(2, .) are continued
// along s = 2 cos(theta) into elliptic traces s_n = 2 cos(2 pi / n).

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "riley/error.hpp"
#include "riley/exactpoly.hpp"
#include "riley/riley.hpp"
#include "riley/sturm.hpp"
#include "riley/twobridge.hpp"

namespace riley {

// Element of Z[t, 1/t, x] on a dense grid of (t exponent, x exponent).
class LaurentBi {
 public:
  struct Term {
    int t_exp;
    int x_exp;
    BigInt coeff;
  };

  LaurentBi() = default;

  static LaurentBi monomial(const BigInt& c, int t_exp, int x_exp) {
    LaurentBi r;
    if (c == 0) return r;
    r.reshape(t_exp, t_exp, x_exp);
    r.at(t_exp, x_exp) = c;
    return r;
  }
  static LaurentBi constant(const BigInt& c) { return monomial(c, 0, 0); }

  BigInt coeff(int t_exp, int x_exp) const {
    if (!in_grid(t_exp, x_exp)) return 0;
    return cells_[index(t_exp, x_exp)];
  }

  // Non-zero terms ordered by x exponent, then t exponent.
  std::vector<Term> terms() const {
    std::vector<Term> out;
    for (int m = 0; m < rows_; ++m)
      for (int j = t_lo_; j < t_lo_ + width_; ++j) {
        const BigInt& c = cells_[index(j, m)];
        if (c != 0) out.push_back({j, m, c});
      }
    return out;
  }

  bool is_zero() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const BigInt& c) { return c == 0; });
  }

  int x_degree() const {
    for (int m = rows_ - 1; m >= 0; --m)
      for (int j = t_lo_; j < t_lo_ + width_; ++j)
        if (cells_[index(j, m)] != 0) return m;
    return -1;
  }

  // Smallest and largest t exponent among non-zero terms (0, 0 when zero).
  std::pair<int, int> t_range() const {
    int lo = 0, hi = 0;
    bool any = false;
    for (const auto& term : terms()) {
      lo = any ? std::min(lo, term.t_exp) : term.t_exp;
      hi = any ? std::max(hi, term.t_exp) : term.t_exp;
      any = true;
    }
    return {lo, hi};
  }

  // this <- t^k this
  void shift_t(int k) { t_lo_ += k; }

  // this <- this + sign * t^dt x^dx src
  void add_scaled(const LaurentBi& src, int dt, int dx, int sign) {
    // Grow to the occupied part of src only, so padding does not compound.
    int jlo = src.width_, jhi = -1, mtop = -1;
    for (int m = 0; m < src.rows_; ++m)
      for (int j = 0; j < src.width_; ++j)
        if (src.cells_[static_cast<std::size_t>(m) * src.width_ + j] != 0) {
          jlo = std::min(jlo, j);
          jhi = std::max(jhi, j);
          mtop = m;
        }
    if (mtop < 0) return;
    ensure(src.t_lo_ + jlo + dt, src.t_lo_ + jhi + dt, mtop + dx);
    for (int m = 0; m <= mtop; ++m) {
      for (int j = jlo; j <= jhi; ++j) {
        const BigInt& c = src.cells_[static_cast<std::size_t>(m) * src.width_ + j];
        if (c == 0) continue;
        BigInt& dst = at(src.t_lo_ + j + dt, m + dx);
        if (sign > 0)
          mpz_add(dst.get_mpz_t(), dst.get_mpz_t(), c.get_mpz_t());
        else
          mpz_sub(dst.get_mpz_t(), dst.get_mpz_t(), c.get_mpz_t());
      }
    }
  }

  friend LaurentBi operator+(const LaurentBi& a, const LaurentBi& b) {
    LaurentBi r = a;
    r.add_scaled(b, 0, 0, 1);
    return r;
  }
  friend LaurentBi operator-(const LaurentBi& a, const LaurentBi& b) {
    LaurentBi r = a;
    r.add_scaled(b, 0, 0, -1);
    return r;
  }
  friend LaurentBi operator*(const LaurentBi& a, const LaurentBi& b) {
    LaurentBi r;
    for (const auto& u : a.terms())
      for (const auto& v : b.terms()) {
        r.ensure(u.t_exp + v.t_exp, u.t_exp + v.t_exp, u.x_exp + v.x_exp);
        BigInt& dst = r.at(u.t_exp + v.t_exp, u.x_exp + v.x_exp);
        mpz_addmul(dst.get_mpz_t(), u.coeff.get_mpz_t(), v.coeff.get_mpz_t());
      }
    return r;
  }
  friend bool operator==(const LaurentBi& a, const LaurentBi& b) {
    const auto ta = a.terms(), tb = b.terms();
    if (ta.size() != tb.size()) return false;
    for (std::size_t i = 0; i < ta.size(); ++i)
      if (ta[i].t_exp != tb[i].t_exp || ta[i].x_exp != tb[i].x_exp || ta[i].coeff != tb[i].coeff) return false;
    return true;
  }

  // phi(1/t, x)
  LaurentBi inverted_t() const {
    LaurentBi r;
    for (const auto& term : terms()) {
      r.ensure(-term.t_exp, -term.t_exp, term.x_exp);
      r.at(-term.t_exp, term.x_exp) = term.coeff;
    }
    return r;
  }

  // Specialization t = 1.
  IntPoly at_t_one() const {
    std::vector<BigInt> c(std::max(rows_, 0));
    for (int m = 0; m < rows_; ++m)
      for (int j = 0; j < width_; ++j) c[m] += cells_[static_cast<std::size_t>(m) * width_ + j];
    return IntPoly(std::move(c));
  }

  std::complex<double> evaluate(std::complex<double> t, std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (int m = rows_ - 1; m >= 0; --m) {
      std::complex<double> row = 0.0;
      for (int j = t_lo_ + width_ - 1; j >= t_lo_; --j) row = row * t + cells_[index(j, m)].get_d();
      row *= std::pow(t, t_lo_);
      acc = acc * x + row;
    }
    return acc;
  }

 private:
  bool in_grid(int j, int m) const { return m >= 0 && m < rows_ && j >= t_lo_ && j < t_lo_ + width_; }
  std::size_t index(int j, int m) const { return static_cast<std::size_t>(m) * width_ + (j - t_lo_); }
  BigInt& at(int j, int m) { return cells_[index(j, m)]; }

  void reshape(int lo, int hi, int top) {
    t_lo_ = lo;
    width_ = hi - lo + 1;
    rows_ = top + 1;
    cells_.assign(static_cast<std::size_t>(width_) * rows_, BigInt(0));
  }

  // Grows the grid to cover t exponents [lo, hi] and x exponents [0, top].
  void ensure(int lo, int hi, int top) {
    if (cells_.empty()) {
      reshape(lo, hi, top);
      return;
    }
    if (lo >= t_lo_ && hi < t_lo_ + width_ && top < rows_) return;
    // Grow with slack so repeated word multiplication reallocates rarely.
    const int slack = std::max(2, width_ / 2);
    const int new_lo = lo < t_lo_ ? lo - slack : t_lo_;
    const int old_hi = t_lo_ + width_ - 1;
    const int new_hi = hi > old_hi ? hi + slack : old_hi;
    const int new_rows = top >= rows_ ? top + 1 + std::max(1, rows_ / 2) : rows_;
    const int new_width = new_hi - new_lo + 1;
    std::vector<BigInt> cells(static_cast<std::size_t>(new_width) * new_rows);
    for (int m = 0; m < rows_; ++m)
      for (int j = 0; j < width_; ++j)
        cells[static_cast<std::size_t>(m) * new_width + (t_lo_ + j - new_lo)].swap(
            cells_[static_cast<std::size_t>(m) * width_ + j]);
    cells_ = std::move(cells);
    t_lo_ = new_lo;
    width_ = new_width;
    rows_ = new_rows;
  }

  int t_lo_ = 0;
  int width_ = 0;
  int rows_ = 0;
  std::vector<BigInt> cells_;
};

struct LaurentMatrix {
  LaurentBi w11, w12, w21, w22;
};

// W = prod rho(a)^eps_i rho(b)^eta_i, built by right multiplication with
//   rho(a)^{+1} = (t 1; 0 1/t),   rho(a)^{-1} = (1/t -1; 0 t),
//   rho(b)^{+1} = (t 0; x 1/t),   rho(b)^{-1} = (1/t 0; -x t).
inline LaurentMatrix general_word(const SignData& sd) {
  LaurentMatrix W{LaurentBi::constant(1), {}, {}, LaurentBi::constant(1)};
  auto times_a = [](LaurentBi& c1, LaurentBi& c2, int e) {
    c1.shift_t(e);
    c2.shift_t(-e);
    c2.add_scaled(c1, -e, 0, e);
  };
  auto times_b = [](LaurentBi& c1, LaurentBi& c2, int e) {
    c1.shift_t(e);
    c1.add_scaled(c2, 0, 1, e);
    c2.shift_t(-e);
  };
  for (int i = 0; i < sd.n; ++i) {
    times_a(W.w11, W.w12, sd.eps[i]);
    times_a(W.w21, W.w22, sd.eps[i]);
    times_b(W.w11, W.w12, sd.eta[i]);
    times_b(W.w21, W.w22, sd.eta[i]);
  }
  return W;
}

// The three entry conditions of W rho(a) = rho(b) W.
struct RepresentationEquations {
  LaurentBi phi;     // w11 + (1/t - t) w12
  LaurentBi eq21;    // (t - 1/t) w21 - x w11
  LaurentBi eq22;    // w21 - x w12
};

inline RepresentationEquations representation_equations(const LaurentMatrix& W) {
  RepresentationEquations eq;
  eq.phi = W.w11;
  eq.phi.add_scaled(W.w12, -1, 0, 1);
  eq.phi.add_scaled(W.w12, 1, 0, -1);
  eq.eq21.add_scaled(W.w21, 1, 0, 1);
  eq.eq21.add_scaled(W.w21, -1, 0, -1);
  eq.eq21.add_scaled(W.w11, 0, 1, -1);
  eq.eq22 = W.w21;
  eq.eq22.add_scaled(W.w12, 0, 1, -1);
  return eq;
}

inline LaurentBi phi(const LaurentMatrix& W) { return representation_equations(W).phi; }

// t^j + t^{-j} = P_j(s): P_0 = 2, P_1 = s, P_j = s P_{j-1} - P_{j-2}.
inline std::vector<IntPoly> trace_polynomials(int jmax) {
  std::vector<IntPoly> P;
  P.push_back(IntPoly{2});
  if (jmax >= 1) P.push_back(IntPoly{0, 1});
  for (int j = 2; j <= jmax; ++j) P.push_back(shift(P[j - 1], 1) - P[j - 2]);
  return P;
}

// psi(s, x) = sum_m x^m (c_{0,m} + sum_{j>0} c_{j,m} P_j(s)).
class SymPoly {
 public:
  SymPoly() = default;
  // trace[m][j] is the coefficient of (t^j + t^-j) x^m for j > 0, and of x^m for j = 0.
  explicit SymPoly(std::vector<std::vector<BigInt>> trace) : trace_(std::move(trace)) {
    std::size_t jmax = 0;
    for (const auto& row : trace_) jmax = std::max(jmax, row.size());
    const auto P = trace_polynomials(jmax == 0 ? 0 : static_cast<int>(jmax) - 1);
    power_.resize(trace_.size());
    trace_d_.resize(trace_.size());
    for (std::size_t m = 0; m < trace_.size(); ++m) {
      IntPoly acc;
      const auto& row = trace_[m];
      for (std::size_t j = 0; j < row.size(); ++j) {
        trace_d_[m].push_back(row[j].get_d());
        if (row[j] == 0) continue;
        if (j == 0)
          acc += IntPoly::constant(row[0]);
        else
          acc += row[j] * P[j];
      }
      power_[m] = std::move(acc);
    }
  }

  int x_degree() const {
    for (int m = static_cast<int>(power_.size()) - 1; m >= 0; --m)
      if (!power_[m].is_zero()) return m;
    return -1;
  }
  // Coefficient of x^m as a polynomial in s.
  const IntPoly& x_coeff(int m) const { return power_.at(m); }
  BigInt coeff(int s_exp, int x_exp) const {
    if (x_exp < 0 || x_exp >= static_cast<int>(power_.size())) return 0;
    return power_[x_exp].coeff(static_cast<std::size_t>(s_exp));
  }

  // psi(s, .) for an integer s, exactly.
  IntPoly at_s(const BigInt& s) const {
    std::vector<BigInt> c(power_.size());
    for (std::size_t m = 0; m < power_.size(); ++m) c[m] = evaluate(power_[m], s);
    return IntPoly(std::move(c));
  }

  // Coefficients of x -> psi(2 cos theta, x), and of its theta-derivative,
  // summed in the stable cosine form rather than the power basis in s.
  std::vector<double> fiber(double theta) const { return fiber_impl(theta, false); }
  std::vector<double> fiber_dtheta(double theta) const { return fiber_impl(theta, true); }

 private:
  std::vector<double> fiber_impl(double theta, bool derivative) const {
    std::vector<double> out(trace_d_.size(), 0.0);
    for (std::size_t m = 0; m < trace_d_.size(); ++m) {
      double acc = 0.0;
      const auto& row = trace_d_[m];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] == 0.0) continue;
        const double jd = static_cast<double>(j);
        if (derivative)
          acc += j == 0 ? 0.0 : -2.0 * jd * row[j] * std::sin(jd * theta);
        else
          acc += j == 0 ? row[j] : 2.0 * row[j] * std::cos(jd * theta);
      }
      out[m] = acc;
    }
    return out;
  }

  std::vector<std::vector<BigInt>> trace_;
  std::vector<IntPoly> power_;
  std::vector<std::vector<double>> trace_d_;
};

inline bool is_t_symmetric(const LaurentBi& f) { return f == f.inverted_t(); }

inline SymPoly to_psi(const LaurentBi& phi) {
  if (!is_t_symmetric(phi)) throw std::invalid_argument("phi is not symmetric under t <-> 1/t");
  const int top = phi.x_degree();
  std::vector<std::vector<BigInt>> trace(top + 1);
  for (const auto& term : phi.terms()) {
    if (term.t_exp < 0) continue;
    auto& row = trace[term.x_exp];
    if (row.size() <= static_cast<std::size_t>(term.t_exp)) row.resize(term.t_exp + 1);
    row[term.t_exp] = term.coeff;
  }
  return SymPoly(std::move(trace));
}

// Exact construction of the deformation data of one knot, with the identities
// tying it to the parabolic case checked.
struct Deformation {
  Fraction fraction;
  SignData signs;
  LaurentMatrix word;
  RepresentationEquations equations;
  SymPoly psi;
  IntPoly lambda;
};

inline Deformation build_deformation(const Fraction& k) {
  Deformation d;
  d.fraction = k;
  d.signs = sign_sequences(k);
  d.word = general_word(d.signs);
  d.equations = representation_equations(d.word);
  if (!is_t_symmetric(d.equations.phi)) throw invariant_error("phi(t, x) != phi(1/t, x) for " + to_string(k));
  d.psi = to_psi(d.equations.phi);
  const RileySequence rs = riley_sequence(d.signs, Checks::structural);
  d.lambda = riley_polynomial(rs);
  if (d.psi.at_s(2) != d.lambda) throw invariant_error("psi(2, x) != lambda for " + to_string(k));
  const int n = d.signs.n;
  if (d.word.w11.at_t_one() != rs.a[n] || d.word.w12.at_t_one() != rs.b[n] ||
      d.word.w21.at_t_one() != rs.c[n] || d.word.w22.at_t_one() != rs.d[n])
    throw invariant_error("t = 1 specialization differs from the parabolic word for " + to_string(k));
  return d;
}

// ---------------------------------------------------------------------------
// Numerical continuation along s = 2 cos(theta), theta: 0 -> 2 pi / n.

struct Witness {
  Fraction fraction;
  int n = 0;
  double s_n = 0.0;
  double x0 = 0.0;        // parabolic root (theta = 0)
  double x_n = 0.0;       // continued root at s_n
  double residual = 0.0;  // |psi(s_n, x_n)|
  double tolerance = 0.0;
  bool converged = false;
  int steps = 0;
  std::string method;     // "newton", "bisection" or "none"
};

struct ContinuationOptions {
  double tolerance = 1e-9;    // relative to max |coefficient| of psi(s_n, .)
  int max_newton = 100;
  double trust_radius = 0.5;  // bound on each corrector's move from its predictor
  int max_steps = 200000;
};

namespace detail {

struct FiberValue {
  double f, fx;
};

inline FiberValue eval_fiber(const std::vector<double>& c, double x) {
  double f = 0.0, fx = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    fx = fx * x + f;
    f = f * x + c[i];
  }
  return {f, fx};
}

inline double max_abs(const std::vector<double>& c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::fabs(v));
  return m;
}

inline std::optional<double> newton(const std::vector<double>& c, double start, double anchor, double radius,
                                    int max_iter, double xtol) {
  double x = start;
  for (int i = 0; i < max_iter; ++i) {
    const auto [f, fx] = eval_fiber(c, x);
    if (f == 0.0) return x;
    if (fx == 0.0 || !std::isfinite(fx)) return std::nullopt;
    const double dx = f / fx;
    x -= dx;
    if (!std::isfinite(x) || std::fabs(x - anchor) > radius) return std::nullopt;
    if (std::fabs(dx) <= xtol * std::max(1.0, std::fabs(x))) return x;
  }
  return std::nullopt;
}

}  // namespace detail

inline Witness continue_root(const SymPoly& psi, const Interval& x0, int n, const ContinuationOptions& opt = {}) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  const double pi = std::numbers::pi;
  const double target = 2.0 * pi / n;
  Witness w;
  w.n = n;
  w.s_n = 2.0 * std::cos(target);

  Interval root = x0;
  if (!root.is_point()) {
    Rational width = 1;
    mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), 40);
    root = refine(SturmSequence(psi.at_s(2)), root, width);
  }
  w.x0 = root.approx();

  double theta = 0.0, x = w.x0;
  double h = target / 32.0;
  bool tracked = true;
  while (theta < target) {
    if (++w.steps > opt.max_steps || h < 1e-14) {
      tracked = false;
      break;
    }
    h = std::min(h, target - theta);
    const auto c = psi.fiber(theta);
    const auto ct = psi.fiber_dtheta(theta);
    const auto [f, fx] = detail::eval_fiber(c, x);
    (void)f;
    const double ft = detail::eval_fiber(ct, x).f;
    if (fx == 0.0 || !std::isfinite(fx)) {
      tracked = false;
      break;
    }
    const double slope = -ft / fx;
    const double pred = x + h * slope;
    // The corrector may not wander far from the predictor relative to the step.
    const double radius = std::min(opt.trust_radius, std::max(std::fabs(h * slope), 1e-6 * (1.0 + std::fabs(x))));
    const double next_theta = theta + h >= target - 1e-15 ? target : theta + h;
    auto corrected = detail::newton(psi.fiber(next_theta), pred, pred, radius, 12, 1e-13);
    if (!corrected) {
      h *= 0.5;
      continue;
    }
    theta = next_theta;
    x = *corrected;
    h *= 1.5;
  }

  const auto c = psi.fiber(target);
  w.tolerance = opt.tolerance * detail::max_abs(c);
  if (tracked) {
    if (auto polished = detail::newton(c, x, x, opt.trust_radius, opt.max_newton, 1e-15)) x = *polished;
    w.x_n = x;
    w.residual = std::fabs(detail::eval_fiber(c, x).f);
    w.method = "newton";
    w.converged = w.residual <= w.tolerance;
    if (w.converged) return w;
  }

  // Bisection on a sign change within the trust region around the last point.
  const double centre = x;
  const int samples = 64;
  std::optional<std::pair<double, double>> bracket;
  double best = opt.trust_radius + 1.0;
  double prev_x = centre - opt.trust_radius;
  double prev_f = detail::eval_fiber(c, prev_x).f;
  for (int i = 1; i <= samples; ++i) {
    const double xi = centre - opt.trust_radius + 2.0 * opt.trust_radius * i / samples;
    const double fi = detail::eval_fiber(c, xi).f;
    if ((prev_f <= 0.0 && fi >= 0.0) || (prev_f >= 0.0 && fi <= 0.0)) {
      const double d = std::fabs(0.5 * (prev_x + xi) - centre);
      if (d < best) {
        best = d;
        bracket = {prev_x, xi};
      }
    }
    prev_x = xi;
    prev_f = fi;
  }
  if (!bracket) {
    w.x_n = x;
    w.residual = std::fabs(detail::eval_fiber(c, x).f);
    w.method = "none";
    w.converged = false;
    return w;
  }
  auto [lo, hi] = *bracket;
  double flo = detail::eval_fiber(c, lo).f;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::fabs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = detail::eval_fiber(c, mid).f;
    if ((fm <= 0.0) == (flo <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  w.x_n = 0.5 * (lo + hi);
  w.residual = std::fabs(detail::eval_fiber(c, w.x_n).f);
  w.method = "bisection";
  w.converged = w.residual <= w.tolerance;
  return w;
}

// Witnesses for every real parabolic root and every n in [n_lo, n_hi].
inline std::vector<Witness> witnesses(const Deformation& d, int n_lo, int n_hi, const ContinuationOptions& opt = {}) {
  std::vector<Witness> out;
  const auto roots = isolate_real_roots(d.lambda);
  for (const auto& r : roots)
    for (int n = n_lo; n <= n_hi; ++n) {
      Witness w = continue_root(d.psi, r, n, opt);
      w.fraction = d.fraction;
      out.push_back(w);
    }
  return out;
}

struct RepresentationResidual {
  double relation = 0.0;      // max |(W rho(a) - rho(b) W)_ij|
  double eq21 = 0.0;          // |(t - 1/t) w21 - x w11|
  double eq22 = 0.0;          // |w21 - x w12|
  double trace_error = 0.0;   // |tr rho(a) - s|
  double order = 0.0;         // max deviation of rho(a)^n and the rotation R(theta)^n from I
  double word_scale = 0.0;    // max |w_ij|
};

// Evaluates the representation at t = e^{i theta}, s = 2 cos(theta), by
// multiplying the generator matrices numerically.
inline RepresentationResidual verify_representation(const SignData& sd, double s, double x,
                                                    std::optional<int> order = std::nullopt) {
  if (s > 2.0 || s < -2.0) throw std::invalid_argument("trace must satisfy |s| <= 2");
  using C = std::complex<double>;
  using M = std::array<C, 4>;  // row-major 2x2
  auto mul = [](const M& A, const M& B) {
    return M{A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3], A[2] * B[0] + A[3] * B[2],
             A[2] * B[1] + A[3] * B[3]};
  };
  const double theta = std::acos(s / 2.0);
  const C t = std::polar(1.0, theta);
  const C ti = 1.0 / t;
  const M a{t, 1.0, 0.0, ti}, a_inv{ti, -1.0, 0.0, t};
  const M b{t, 0.0, x, ti}, b_inv{ti, 0.0, -x, t};
  M W{1.0, 0.0, 0.0, 1.0};
  for (int i = 0; i < sd.n; ++i) {
    W = mul(W, sd.eps[i] > 0 ? a : a_inv);
    W = mul(W, sd.eta[i] > 0 ? b : b_inv);
  }
  const M lhs = mul(W, a), rhs = mul(b, W);
  RepresentationResidual r;
  for (int i = 0; i < 4; ++i) {
    r.relation = std::max(r.relation, std::abs(lhs[i] - rhs[i]));
    r.word_scale = std::max(r.word_scale, std::abs(W[i]));
  }
  r.eq21 = std::abs((t - ti) * W[2] - x * W[0]);
  r.eq22 = std::abs(W[2] - x * W[1]);
  r.trace_error = std::abs((t + ti) - s);
  if (order) {
    M P{1.0, 0.0, 0.0, 1.0};
    const double c = std::cos(theta), sn = std::sin(theta);
    const M R{c, -sn, sn, c};
    M Q{1.0, 0.0, 0.0, 1.0};
    for (int i = 0; i < *order; ++i) {
      P = mul(P, a);
      Q = mul(Q, R);
    }
    const M I{1.0, 0.0, 0.0, 1.0};
    for (int i = 0; i < 4; ++i) r.order = std::max({r.order, std::abs(P[i] - I[i]), std::abs(Q[i] - I[i])});
  }
  return r;
}

inline RepresentationResidual verify_representation(const Fraction& k, double s, double x,
                                                    std::optional<int> order = std::nullopt) {
  return verify_representation(sign_sequences(k), s, x, order);
}

}  // namespace riley
