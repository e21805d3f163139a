// Sturm sequences, real-root counting and isolation over Z[x].

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "riley/exactpoly.hpp"

namespace riley {

// Closed interval with rational endpoints. lo == hi denotes an exactly known root.
struct Interval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& r) const { return lo <= r && r <= hi; }
  double approx() const { return midpoint().get_d(); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

inline std::string to_string(const Interval& I) {
  return "[" + I.lo.get_str() + ", " + I.hi.get_str() + "]";
}

namespace detail {

// Scaled long double copy of an integer polynomial, used to decide signs at
// exactly representable points without big-integer arithmetic. A sign is
// returned only when the computed value exceeds a rigorous bound on the
// accumulated rounding error; otherwise the caller falls back to exact
// evaluation.
class FloatFilter {
 public:
  FloatFilter() = default;
  explicit FloatFilter(const IntPoly& f) {
    if (f.is_zero()) return;
    long top = std::numeric_limits<long>::min();
    std::vector<std::pair<double, long>> parts;
    parts.reserve(f.size());
    for (const auto& c : f.coeffs()) {
      long e = 0;
      const double m = mpz_get_d_2exp(&e, c.get_mpz_t());
      parts.emplace_back(m, e);
      if (c != 0) top = std::max(top, e);
    }
    coeffs_.resize(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto [m, e] = parts[i];
      if (m == 0.0) continue;
      const long rel = e - top;
      if (rel < kUnderflowExp) {
        coeffs_[i] = 0.0L;
        dropped_ = true;
      } else {
        coeffs_[i] = std::ldexp(static_cast<long double>(m), static_cast<int>(rel));
      }
    }
  }

  // +1 / -1 / 0 when certain; 2 when undecided.
  int sign(long double x) const {
    if (coeffs_.empty()) return 0;
    const long double ax = std::fabs(x);
    long double v = 0.0L, s = 0.0L;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      v = v * x + coeffs_[i];
      s = s * ax + std::fabs(coeffs_[i]);
    }
    if (!std::isfinite(v) || !std::isfinite(s)) return 2;
    const long double k = 2.0L * static_cast<long double>(coeffs_.size()) + 2.0L;
    const long double u = std::ldexp(1.0L, -63);
    // Horner rounding (gamma_k) plus truncation of each coefficient to a double.
    long double err = (k * u / (1.0L - k * u) + std::ldexp(1.0L, -51)) * s * 2.0L;
    if (dropped_) {
      long double tail = std::ldexp(1.0L, kUnderflowExp + 1);
      const long double base = std::max(1.0L, ax);
      for (std::size_t i = 0; i < coeffs_.size(); ++i) tail *= base;
      err += tail * static_cast<long double>(coeffs_.size());
      if (!std::isfinite(err)) return 2;
    }
    if (v > err) return 1;
    if (v < -err) return -1;
    return 2;
  }

 private:
  static constexpr long kUnderflowExp = -16000;
  std::vector<long double> coeffs_;
  bool dropped_ = false;
};

// Exact long double image of r, when one exists.
inline bool to_exact_long_double(const Rational& r, long double& out) {
  const auto& den = r.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) return false;
  const auto& num = r.get_num();
  if (mpz_sizeinbase(num.get_mpz_t(), 2) > 63) return false;
  const mp_bitcnt_t k = mpz_scan1(den.get_mpz_t(), 0);
  if (k > 16000) return false;
  const long v = mpz_get_si(num.get_mpz_t());
  out = std::ldexp(static_cast<long double>(v), -static_cast<int>(k));
  return true;
}

}  // namespace detail

// Classical Sturm chain s_0 = f, s_1 = f', s_{i+1} = -rem(s_{i-1}, s_i) up to
// positive factors. When f has repeated factors the chain is built for its
// squarefree part, so counts are always of distinct roots.
class SturmSequence {
 public:
  SturmSequence() = default;
  explicit SturmSequence(const IntPoly& f) : input_(f) {
    if (f.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
    input_squarefree_ = true;
    chain_ = build(f);
    if (chain_.back().degree() > 0) {
      input_squarefree_ = false;
      auto q = divides(primitive_part(chain_.back()), f);
      if (!q) throw std::logic_error("squarefree part is not an exact quotient");
      chain_ = build(*q);
    }
    filters_.reserve(chain_.size());
    for (const auto& s : chain_) filters_.emplace_back(s);
  }

  // Chain of -f from the chain of f: every member flips sign.
  SturmSequence negated() const {
    SturmSequence r = *this;
    r.input_ = -r.input_;
    for (auto& s : r.chain_) s = -s;
    for (std::size_t i = 0; i < r.chain_.size(); ++i) r.filters_[i] = detail::FloatFilter(r.chain_[i]);
    return r;
  }

  std::span<const IntPoly> members() const { return chain_; }
  // The (squarefree) polynomial whose roots the chain counts.
  const IntPoly& polynomial() const { return chain_.front(); }
  const IntPoly& input() const { return input_; }
  bool input_squarefree() const { return input_squarefree_; }

  // Sign of the input polynomial itself (not its squarefree part).
  Sign input_sign_at(const Rational& x) const {
    if (input_squarefree_) return sign_at(x);
    return ::riley::sign_at(input_, x);
  }

  Sign sign_of_member(std::size_t i, const Rational& x, long double xd, bool exact_double) const {
    if (exact_double) {
      const int s = filters_[i].sign(xd);
      if (s != 2) return Sign(s);
    }
    return ::riley::sign_at(chain_[i], x);
  }

  Sign sign_at(const Rational& x) const {
    long double xd = 0;
    const bool ok = detail::to_exact_long_double(x, xd);
    return sign_of_member(0, x, xd, ok);
  }

  // Sign changes of the chain at x, zeros skipped. At a root of f this equals
  // the count just to the right of it, so V(a) - V(b) counts roots in (a, b].
  int variations_at(const Rational& x) const {
    long double xd = 0;
    const bool ok = detail::to_exact_long_double(x, xd);
    int count = 0;
    Sign prev = Sign::zero;
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      const Sign s = sign_of_member(i, x, xd, ok);
      if (s == Sign::zero) continue;
      if (prev != Sign::zero && s != prev) ++count;
      prev = s;
    }
    return count;
  }

  int variations_at(Infinity direction) const {
    int count = 0;
    Sign prev = Sign::zero;
    for (const auto& s : chain_) {
      const Sign v = sign_at_infinity(s, direction);
      if (prev != Sign::zero && v != prev) ++count;
      prev = v;
    }
    return count;
  }

  int count_real_roots() const { return variations_at(Infinity::minus) - variations_at(Infinity::plus); }

  // Distinct roots in (lo, hi]; no restriction on the endpoints.
  int count_in_half_open(const Rational& lo, const Rational& hi) const {
    return variations_at(lo) - variations_at(hi);
  }

 private:
  static std::vector<IntPoly> build(const IntPoly& f) {
    if (f.degree() == 0) return {f};
    return detail::signed_prs(f, derivative(f));
  }

  IntPoly input_;
  std::vector<IntPoly> chain_;
  std::vector<detail::FloatFilter> filters_;
  bool input_squarefree_ = true;
};

inline std::vector<IntPoly> sturm_sequence(const IntPoly& f) {
  SturmSequence s(f);
  return {s.members().begin(), s.members().end()};
}

inline int count_real_roots(const IntPoly& f) { return SturmSequence(f).count_real_roots(); }

inline int count_roots_in(const SturmSequence& s, const Interval& I) {
  if (I.lo > I.hi) throw std::invalid_argument("interval with lo > hi");
  if (s.sign_at(I.lo) == Sign::zero || s.sign_at(I.hi) == Sign::zero)
    throw std::domain_error("interval endpoint is a root; perturb the interval");
  return s.count_in_half_open(I.lo, I.hi);
}

inline int count_roots_in(const IntPoly& f, const Interval& I) { return count_roots_in(SturmSequence(f), I); }

namespace detail {

struct Pending {
  Rational lo, hi;
  int v_lo, v_hi;
  bool lo_root, hi_root;
};

}  // namespace detail

// Disjoint isolating intervals, ascending, each holding exactly one root.
// Interval endpoints are never roots, except for degenerate [m, m] intervals
// that carry an exactly known rational root.
inline std::vector<Interval> isolate_real_roots(const SturmSequence& s) {
  const IntPoly& f = s.polynomial();
  std::vector<Interval> out;
  if (f.degree() < 1) return out;
  if (s.count_real_roots() == 0) return out;
  const Rational B = dyadic_root_bound(f);
  // Depth-first, left half first, so the output is sorted.
  std::vector<detail::Pending> stack;
  stack.push_back({-B, B, s.variations_at(-B), s.variations_at(B), false, false});
  while (!stack.empty()) {
    detail::Pending cur = std::move(stack.back());
    stack.pop_back();
    int inside = cur.v_lo - cur.v_hi;  // roots in (lo, hi]
    if (cur.hi_root) --inside;         // exclude hi itself
    if (inside <= 0) continue;
    if (inside == 1 && !cur.lo_root && !cur.hi_root) {
      out.push_back({cur.lo, cur.hi});
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    const bool mid_root = s.sign_at(mid) == Sign::zero;
    const int v_mid = s.variations_at(mid);
    detail::Pending right{mid, cur.hi, v_mid, cur.v_hi, mid_root, cur.hi_root};
    detail::Pending left{cur.lo, mid, cur.v_lo, v_mid, cur.lo_root, mid_root};
    stack.push_back(std::move(right));
    if (mid_root) {
      // Emitted between the two halves: the right half is processed after it.
      stack.push_back({mid, mid, 1, 0, false, false});
    }
    stack.push_back(std::move(left));
  }
  return out;
}

inline std::vector<Interval> isolate_real_roots(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  if (f.degree() < 1) return {};
  return isolate_real_roots(SturmSequence(f));
}

namespace detail {

// One bisection step keeping the unique root of s.polynomial() in I.
// Returns false if the midpoint is the root (I collapses to it).
inline bool bisect_toward_root(const SturmSequence& s, Interval& I) {
  Rational mid = I.midpoint();
  const Sign sm = s.sign_at(mid);
  if (sm == Sign::zero) {
    I = {mid, mid};
    return false;
  }
  const Sign slo = s.sign_at(I.lo);
  if (slo != Sign::zero && slo != sm) {
    I.hi = std::move(mid);
  } else if (s.sign_at(I.hi) != sm) {
    I.lo = std::move(mid);
  } else if (s.count_in_half_open(I.lo, mid) > 0) {
    // No sign change to follow (even multiplicity); fall back to counting.
    I.hi = std::move(mid);
  } else {
    I.lo = std::move(mid);
  }
  return true;
}

}  // namespace detail

// Shrinks an isolating interval to width <= `width` by bisection.
inline Interval refine(const SturmSequence& s, Interval I, const Rational& width) {
  if (I.is_point()) {
    if (s.sign_at(I.lo) != Sign::zero) throw std::domain_error("interval does not isolate a root");
    return I;
  }
  if (count_roots_in(s, I) != 1) throw std::domain_error("interval does not isolate a root");
  while (I.width() > width) {
    if (!detail::bisect_toward_root(s, I)) break;
  }
  return I;
}

inline Interval refine(const IntPoly& f, const Interval& I, const Rational& width) {
  return refine(SturmSequence(f), I, width);
}

// Sign of g at the root of f isolated by `root`. The interval is shrunk
// until g has constant sign on it, so the answer is exact even at
// irrational roots. Returns zero if g vanishes at the root.
inline Sign sign_at_isolated_root(const SturmSequence& f, Interval& root, const SturmSequence& g) {
  if (root.is_point()) return g.input_sign_at(root.lo);
  for (int iter = 0;; ++iter) {
    const Sign glo = g.sign_at(root.lo);
    const Sign ghi = g.sign_at(root.hi);
    if (glo != Sign::zero && glo == ghi && g.count_in_half_open(root.lo, root.hi) == 0)
      return g.input_sign_at(root.lo);
    if (iter > 0 && iter % 64 == 0) {
      // A common root never separates; detect it exactly.
      IntPoly h = gcd(f.polynomial(), g.polynomial());
      if (h.degree() > 0) {
        SturmSequence hs(h);
        if (hs.count_in_half_open(root.lo, root.hi) > 0) return Sign::zero;
      }
    }
    if (!detail::bisect_toward_root(f, root)) return g.input_sign_at(root.lo);
  }
}

// Signs of g at every root of f, given sorted isolating intervals for both.
// Intervals are shrunk until each root interval of f is disjoint from all of
// g's, so g has constant sign on it. Pairs that refuse to separate go through
// sign_at_isolated_root, which detects common roots.
inline std::vector<Sign> signs_at_isolated_roots(const SturmSequence& f, std::vector<Interval>& f_roots,
                                                 const SturmSequence& g, std::vector<Interval>& g_roots) {
  std::vector<Sign> out;
  out.reserve(f_roots.size());
  std::size_t j0 = 0;
  for (Interval& I : f_roots) {
    while (j0 < g_roots.size() && g_roots[j0].hi < I.lo) ++j0;
    bool separated = true;
    for (int iter = 0; !I.is_point(); ++iter) {
      Interval* J = nullptr;
      for (std::size_t j = j0; j < g_roots.size() && g_roots[j].lo <= I.hi; ++j)
        if (g_roots[j].hi >= I.lo) {
          J = &g_roots[j];
          break;
        }
      if (!J) break;
      if (iter == 64) {
        separated = false;
        break;
      }
      if (J->is_point() || I.width() >= J->width()) {
        detail::bisect_toward_root(f, I);
      } else {
        detail::bisect_toward_root(g, *J);
      }
      while (j0 < g_roots.size() && g_roots[j0].hi < I.lo) ++j0;
    }
    out.push_back(separated ? g.input_sign_at(I.lo) : sign_at_isolated_root(f, I, g));
  }
  return out;
}

}  // namespace riley
