// Exact univariate polynomials over the integers.
//
// Coefficients are GMP integers stored densely in ascending degree order.
// The zero polynomial is the empty coefficient vector; every other
// polynomial has a non-zero leading coefficient.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riley {

using BigInt = mpz_class;
using Rational = mpq_class;  // canonical: den > 0, gcd(|num|, den) = 1

enum class Sign : int { negative = -1, zero = 0, positive = 1 };
enum class Infinity { minus, plus };

inline Sign sign_of(const BigInt& v) { return Sign(mpz_sgn(v.get_mpz_t())); }
inline Sign sign_of(const Rational& v) { return Sign(mpq_sgn(v.get_mpq_t())); }
inline Sign sign_of(long v) { return Sign((v > 0) - (v < 0)); }
inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign operator*(Sign a, Sign b) { return Sign(to_int(a) * to_int(b)); }
inline Sign operator-(Sign a) { return Sign(-to_int(a)); }

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }
  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static IntPoly constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }
  static IntPoly monomial(const BigInt& c, std::size_t k) {
    std::vector<BigInt> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
  }
  static IntPoly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const BigInt& lead() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  Sign lead_sign() const { return is_zero() ? Sign::zero : sign_of(coeffs_.back()); }
  // Coefficient of x^k; zero past the degree.
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  const BigInt& operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const BigInt> coeffs() const { return coeffs_; }

  // Mutable access for in-place kernels; callers must call normalize() after.
  std::vector<BigInt>& raw() { return coeffs_; }
  void normalize() { trim(); }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigInt> coeffs_;
};

// ---------------------------------------------------------------------------
// Ring operations

inline IntPoly operator+(const IntPoly& f, const IntPoly& g) {
  std::vector<BigInt> r(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] += g[i];
  return IntPoly(std::move(r));
}

inline IntPoly operator-(const IntPoly& f) {
  std::vector<BigInt> r(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : r) mpz_neg(c.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(r));
}

inline IntPoly operator-(const IntPoly& f, const IntPoly& g) {
  std::vector<BigInt> r(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] -= g[i];
  return IntPoly(std::move(r));
}

inline IntPoly operator*(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<BigInt> r(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), f[i].get_mpz_t(), g[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

inline IntPoly operator*(const BigInt& c, const IntPoly& f) {
  std::vector<BigInt> r(f.coeffs().begin(), f.coeffs().end());
  for (auto& v : r) v *= c;
  return IntPoly(std::move(r));
}

inline IntPoly& operator+=(IntPoly& f, const IntPoly& g) { return f = f + g; }
inline IntPoly& operator-=(IntPoly& f, const IntPoly& g) { return f = f - g; }

// Multiplication by x^k.
inline IntPoly shift(const IntPoly& f, std::size_t k) {
  if (f.is_zero()) return {};
  std::vector<BigInt> r(f.size() + k);
  for (std::size_t i = 0; i < f.size(); ++i) r[i + k] = f[i];
  return IntPoly(std::move(r));
}

inline IntPoly derivative(const IntPoly& f) {
  if (f.degree() < 1) return {};
  std::vector<BigInt> r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

inline BigInt evaluate(const IntPoly& f, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) {
    acc *= x;
    acc += f[i];
  }
  return acc;
}

inline double evaluate(const IntPoly& f, double x) {
  double acc = 0.0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i].get_d();
  return acc;
}

// den^deg(f) * f(num/den), an integer with the sign of f(r).
inline BigInt homogeneous_value(const IntPoly& f, const Rational& r) {
  if (f.is_zero()) return 0;
  const BigInt& num = r.get_num();
  const BigInt& den = r.get_den();
  const std::size_t d = f.size() - 1;
  BigInt acc = f.lead();
  if (den == 1) {
    for (std::size_t i = d; i-- > 0;) {
      acc *= num;
      acc += f[i];
    }
    return acc;
  }
  const bool dyadic = mpz_popcount(den.get_mpz_t()) == 1;
  const mp_bitcnt_t shift_bits = dyadic ? mpz_scan1(den.get_mpz_t(), 0) : 0;
  BigInt den_pow = 1;
  BigInt term;
  for (std::size_t i = d; i-- > 0;) {
    acc *= num;
    if (!dyadic) den_pow *= den;
    if (f[i] == 0) continue;
    if (dyadic)
      mpz_mul_2exp(term.get_mpz_t(), f[i].get_mpz_t(), shift_bits * (d - i));
    else
      term = f[i] * den_pow;
    acc += term;
  }
  return acc;
}

inline Sign sign_at(const IntPoly& f, const Rational& r) { return sign_of(homogeneous_value(f, r)); }

inline Sign sign_at_infinity(const IntPoly& f, Infinity direction) {
  if (f.is_zero()) throw std::domain_error("sign at infinity of the zero polynomial");
  Sign s = f.lead_sign();
  if (direction == Infinity::minus && f.degree() % 2 == 1) s = -s;
  return s;
}

// 1 + max_i |a_i| / |a_lead|; every real root lies in (-B, B).
inline Rational cauchy_bound(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  BigInt m = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    BigInt a = abs(f[i]);
    if (a > m) m = a;
  }
  Rational b(m, abs(f.lead()));
  b.canonicalize();
  return b + 1;
}

// A power of two 2^e strictly exceeding every root modulus, from the
// Fujiwara bound 2 max_i |a_{d-i}/a_d|^{1/i} rounded up through bit lengths.
inline Rational dyadic_root_bound(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  const int d = f.degree();
  const long lead_bits = static_cast<long>(mpz_sizeinbase(f.lead().get_mpz_t(), 2));
  long k = 0;
  for (int i = 1; i <= d; ++i) {
    const BigInt& a = f[d - i];
    if (a == 0) continue;
    // |a / lead| < 2^(bits(a) - bits(lead) + 1)
    const long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) - lead_bits + 1;
    const long ki = e <= 0 ? 0 : (e + i - 1) / i;
    k = std::max(k, ki);
  }
  Rational b = 1;
  mpq_mul_2exp(b.get_mpq_t(), b.get_mpq_t(), static_cast<mp_bitcnt_t>(k + 2));
  return b;
}

inline BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Content-1 multiple of f with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return {};
  BigInt g = content(f);
  if (f.lead_sign() == Sign::negative) g = -g;
  std::vector<BigInt> r(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(r));
}

namespace detail {

// In place: r <- lc(b)^(deg r - deg b + 1) * r mod b.
inline void pseudo_remainder(std::vector<BigInt>& r, const IntPoly& b) {
  const std::size_t m = static_cast<std::size_t>(b.degree());
  const BigInt& lb = b.lead();
  BigInt q;
  for (std::size_t i = r.size(); i-- > m;) {
    q = r[i];
    for (std::size_t j = 0; j < i; ++j) r[j] *= lb;
    if (q != 0)
      for (std::size_t j = 0; j < m; ++j)
        mpz_submul(r[i - m + j].get_mpz_t(), q.get_mpz_t(), b[j].get_mpz_t());
  }
  r.resize(m);
  while (!r.empty() && r.back() == 0) r.pop_back();
}

// Subresultant polynomial remainder sequence starting from (a, b),
// deg a >= deg b, b non-zero. Every member after the first two equals
// -rem(previous two) times a positive rational, so sign patterns match the
// classical Euclidean (Sturm) remainder sequence. Ends at the last non-zero
// member, a scalar multiple of gcd(a, b).
inline std::vector<IntPoly> signed_prs(IntPoly a, IntPoly b) {
  std::vector<IntPoly> seq;
  seq.push_back(a);
  if (b.is_zero()) return seq;
  seq.push_back(b);
  BigInt g = 1, h = 1, beta, t;
  while (seq.back().degree() > 0) {
    const IntPoly& A = seq[seq.size() - 2];
    const IntPoly& B = seq.back();
    const unsigned long delta = static_cast<unsigned long>(A.degree() - B.degree());
    std::vector<BigInt> r(A.coeffs().begin(), A.coeffs().end());
    pseudo_remainder(r, B);
    if (r.empty()) break;
    // |beta| = |g| * |h|^delta
    mpz_pow_ui(beta.get_mpz_t(), h.get_mpz_t(), delta);
    beta *= g;
    // prem carries lc(B)^(delta+1); flip so the member is -rem up to a positive factor.
    const bool negate = !(B.lead_sign() == Sign::negative && (delta + 1) % 2 == 1);
    for (auto& c : r) {
      if (beta != 1) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), beta.get_mpz_t());
      if (negate) mpz_neg(c.get_mpz_t(), c.get_mpz_t());
    }
    g = abs(B.lead());
    if (delta != 1) {
      // h <- g^delta / h^(delta - 1)
      if (delta == 0) {
        // h unchanged
      } else {
        mpz_pow_ui(t.get_mpz_t(), g.get_mpz_t(), delta);
        mpz_pow_ui(beta.get_mpz_t(), h.get_mpz_t(), delta - 1);
        mpz_divexact(h.get_mpz_t(), t.get_mpz_t(), beta.get_mpz_t());
      }
    } else {
      h = g;
    }
    seq.emplace_back(std::move(r));
  }
  return seq;
}

}  // namespace detail

// Primitive gcd with positive leading coefficient.
inline IntPoly gcd(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  if (g.is_zero()) return primitive_part(f);
  if (f.is_zero()) return primitive_part(g);
  IntPoly a = primitive_part(f), b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() == 0) return IntPoly{1};
  auto prs = detail::signed_prs(std::move(a), std::move(b));
  const IntPoly& last = prs.back();
  if (last.degree() == 0) return IntPoly{1};
  return primitive_part(last);
}

inline bool is_squarefree(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree test of the zero polynomial");
  if (f.degree() < 2) return true;
  return gcd(f, derivative(f)).degree() == 0;
}

// Quotient q with f = g*q in Z[x], if one exists.
inline std::optional<IntPoly> divides(const IntPoly& g, const IntPoly& f) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.is_zero()) return IntPoly{};
  if (f.degree() < g.degree()) return std::nullopt;
  std::vector<BigInt> r(f.coeffs().begin(), f.coeffs().end());
  const std::size_t m = static_cast<std::size_t>(g.degree());
  std::vector<BigInt> q(r.size() - m);
  for (std::size_t i = r.size(); i-- > m;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), g.lead().get_mpz_t())) return std::nullopt;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), g.lead().get_mpz_t());
    for (std::size_t j = 0; j <= m; ++j)
      mpz_submul(r[i - m + j].get_mpz_t(), c.get_mpz_t(), g[j].get_mpz_t());
    q[i - m] = std::move(c);
  }
  for (std::size_t i = 0; i < m; ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

// "1 + 3*x + x^2" in ascending order.
inline std::string to_string(const IntPoly& f, const std::string& var = "x") {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const BigInt& c = f[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && i > 0;
    if (!unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

inline std::vector<std::string> coefficient_strings(const IntPoly& f) {
  std::vector<std::string> out;
  out.reserve(f.size());
  for (const auto& c : f.coeffs()) out.push_back(c.get_str());
  return out;
}

}  // namespace riley
