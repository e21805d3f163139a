// The parabolic word W_k = prod A^eps_i X^eta_i over Z[x], the Riley
// polynomial lambda = a_n, the signed sequence f_k used for the |sigma|/2
// lower bound, and exact checks of the identities around them.
//
//   A = [[1, 1], [0, 1]],  X = [[1, 0], [x, 1]],
//   A^eps X^eta = [[1 + delta x, eps], [eta x, 1]],
//   W_k = W_{k-1} A^eps_k X^eta_k = [[a_k, b_k], [c_k, d_k]].

#pragma once

#include <chrono>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "riley/error.hpp"
#include "riley/exactpoly.hpp"
#include "riley/sturm.hpp"
#include "riley/twobridge.hpp"

namespace riley {

struct RileySequence {
  std::vector<IntPoly> a, b, c, d;  // index k = 0..n
  int n() const { return static_cast<int>(a.size()) - 1; }
};

// `structural` checks degree, leading coefficient and constant term of every
// a_k (linear cost); `full` also verifies a_k d_k - b_k c_k = 1 for every k.
enum class Checks { structural, full };

namespace detail {

// Coefficients of p * (1 + delta x) + eta x * q.
inline IntPoly step_first(const IntPoly& p, const IntPoly& q, int delta, int eta) {
  std::vector<BigInt> r(std::max(p.size() + 1, q.size() + 1));
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i] += p[i];
    if (delta > 0) r[i + 1] += p[i]; else r[i + 1] -= p[i];
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (eta > 0) r[i + 1] += q[i]; else r[i + 1] -= q[i];
  }
  return IntPoly(std::move(r));
}

// Coefficients of eps * p + q.
inline IntPoly step_second(const IntPoly& p, const IntPoly& q, int eps) {
  std::vector<BigInt> r(std::max(p.size(), q.size()));
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = q[i];
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (eps > 0) r[i] += p[i]; else r[i] -= p[i];
  }
  return IntPoly(std::move(r));
}

}  // namespace detail

inline RileySequence riley_sequence(const SignData& sd, Checks checks = Checks::full) {
  RileySequence rs;
  const int n = sd.n;
  rs.a.reserve(n + 1);
  rs.b.reserve(n + 1);
  rs.c.reserve(n + 1);
  rs.d.reserve(n + 1);
  rs.a.push_back(IntPoly{1});
  rs.b.push_back(IntPoly{});
  rs.c.push_back(IntPoly{});
  rs.d.push_back(IntPoly{1});
  for (int k = 1; k <= n; ++k) {
    const int eps = sd.eps[k - 1], eta = sd.eta[k - 1], delta = sd.delta[k - 1];
    rs.a.push_back(detail::step_first(rs.a[k - 1], rs.b[k - 1], delta, eta));
    rs.b.push_back(detail::step_second(rs.a[k - 1], rs.b[k - 1], eps));
    rs.c.push_back(detail::step_first(rs.c[k - 1], rs.d[k - 1], delta, eta));
    rs.d.push_back(detail::step_second(rs.c[k - 1], rs.d[k - 1], eps));
  }

  int lead = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) lead *= sd.delta[k - 1];
    const IntPoly& ak = rs.a[k];
    if (ak.degree() != k) throw invariant_error("deg a_" + std::to_string(k) + " != " + std::to_string(k));
    if (ak.lead() != lead) throw invariant_error("lead(a_" + std::to_string(k) + ") != prod delta_i");
    if (ak[0] != 1) throw invariant_error("a_" + std::to_string(k) + "(0) != 1");
  }
  if (checks == Checks::full) {
    const IntPoly one{1};
    for (int k = 0; k <= n; ++k)
      if (rs.a[k] * rs.d[k] - rs.b[k] * rs.c[k] != one)
        throw invariant_error("det W_" + std::to_string(k) + " != 1");
  }
  return rs;
}

inline const IntPoly& riley_polynomial(const RileySequence& rs) { return rs.a.back(); }

inline IntPoly riley_polynomial(const Fraction& k) {
  return riley_sequence(sign_sequences(k), Checks::structural).a.back();
}

// f_k = (prod_{i<=k} eta_i) a_k.
inline std::vector<IntPoly> f_sequence(const SignData& sd, const RileySequence& rs) {
  std::vector<IntPoly> f;
  f.reserve(rs.a.size());
  int sign = 1;
  for (int k = 0; k <= sd.n; ++k) {
    if (k > 0) sign *= sd.eta[k - 1];
    f.push_back(sign > 0 ? rs.a[k] : -rs.a[k]);
    if (f.back().lead() != sd.mu[k]) throw invariant_error("lead(f_" + std::to_string(k) + ") != mu_k");
  }
  return f;
}

// The three routes to the lower bound: variation of (mu_k) and ((-1)^k mu_k),
// the counts of eps_k = -1 and eps_k = +1, and |sum eps| = |sigma|/2.
struct BoundIdentities {
  int var_plus_inf = 0;
  int var_minus_inf = 0;
  int negative_eps = 0;
  int positive_eps = 0;
  int bound = 0;
};

inline BoundIdentities bound_identities(const SignData& sd) {
  BoundIdentities id;
  for (int k = 1; k <= sd.n; ++k) {
    const int at_plus_prev = sd.mu[k - 1], at_plus = sd.mu[k];
    const int at_minus_prev = (k - 1) % 2 ? -sd.mu[k - 1] : sd.mu[k - 1];
    const int at_minus = k % 2 ? -sd.mu[k] : sd.mu[k];
    if (at_plus_prev != at_plus) ++id.var_plus_inf;
    if (at_minus_prev != at_minus) ++id.var_minus_inf;
    (sd.eps[k - 1] < 0 ? id.negative_eps : id.positive_eps) += 1;
  }
  int sum_eps = 0;
  for (int e : sd.eps) sum_eps += e;
  id.bound = std::abs(id.var_minus_inf - id.var_plus_inf);
  if (id.var_plus_inf != id.negative_eps) throw invariant_error("var(f(+inf)) != #{eps_k = -1}");
  if (id.var_minus_inf != id.positive_eps) throw invariant_error("var(f(-inf)) != #{eps_k = +1}");
  if (id.bound != std::abs(sum_eps)) throw invariant_error("|var(-inf) - var(+inf)| != |sum eps|");
  if (2 * id.bound != std::abs(signature(sd))) throw invariant_error("|sum eps| != |sigma|/2");
  return id;
}

inline int conjecture_bound(const SignData& sd) { return bound_identities(sd).bound; }

// Real-root data of a Riley polynomial.
struct LambdaAnalysis {
  int real_root_count = 0;
  bool squarefree = true;
  std::vector<Interval> roots;
};

inline LambdaAnalysis analyze_lambda(const IntPoly& lambda, bool isolate = true,
                                     const std::optional<Rational>& width = std::nullopt) {
  LambdaAnalysis out;
  SturmSequence s(lambda);
  out.real_root_count = s.count_real_roots();
  out.squarefree = s.input_squarefree();
  if (isolate) {
    out.roots = isolate_real_roots(s);
    if (width)
      for (auto& I : out.roots) I = refine(s, I, *width);
  }
  return out;
}

struct VerificationReport {
  Fraction fraction;
  int n = 0;
  int sigma = 0;
  std::int64_t determinant = 0;
  int bound = 0;
  int real_root_count = 0;
  bool satisfied = false;
  bool squarefree = true;
  bool congruence_ok = true;
  IntPoly lambda;
  std::vector<Interval> roots;
  double millis = 0.0;
};

// Assembles a report from a precomputed analysis of lambda.
inline VerificationReport make_report(const Fraction& k, const SignData& sd, IntPoly lambda,
                                      const LambdaAnalysis& analysis) {
  VerificationReport r;
  r.fraction = k;
  r.n = sd.n;
  r.sigma = signature(sd);
  r.determinant = determinant(k);
  r.bound = conjecture_bound(sd);
  r.real_root_count = analysis.real_root_count;
  r.satisfied = r.real_root_count >= r.bound;
  r.squarefree = analysis.squarefree;
  r.congruence_ok = congruence_holds(r.determinant, r.sigma);
  r.lambda = std::move(lambda);
  r.roots = analysis.roots;
  return r;
}

inline VerificationReport verify_conjecture(const Fraction& k, bool isolate = true,
                                            const std::optional<Rational>& width = std::nullopt) {
  const auto t0 = std::chrono::steady_clock::now();
  const SignData sd = sign_sequences(k);
  IntPoly lambda = riley_sequence(sd, Checks::structural).a.back();
  const LambdaAnalysis analysis = analyze_lambda(lambda, isolate, width);
  VerificationReport r = make_report(k, sd, std::move(lambda), analysis);
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

struct SignLawEntry {
  int k = 0;
  Interval root;
  Sign prev = Sign::zero;  // sign of a_{k-1} at the root
  Sign next = Sign::zero;  // sign of a_{k+1} at the root
  Sign b = Sign::zero;     // sign of b_k at the root
  int expected = 0;        // -eta_k eta_{k+1}
};

struct SignLawReport {
  std::vector<SignLawEntry> entries;
  int interior_indices = 0;
};

// At every real root x0 of every interior a_k (0 < k < n): a_{k-1}(x0) and
// a_{k+1}(x0) are non-zero with sign product -eta_k eta_{k+1}, and b_k(x0) != 0.
inline SignLawReport lemma31_check(const RileySequence& rs, const SignData& sd) {
  SignLawReport report;
  const int n = rs.n();
  if (n < 2) return report;
  report.interior_indices = n - 1;
  std::vector<SturmSequence> chains(n + 1);
  std::vector<std::vector<Interval>> roots(n + 1);
  for (int k = 0; k <= n; ++k) {
    chains[k] = SturmSequence(rs.a[k]);
    roots[k] = isolate_real_roots(chains[k]);
  }
  for (int k = 1; k < n; ++k) {
    if (rs.a[k][0] == 0) throw invariant_error("a_k(0) = 0");
    const SturmSequence bk(rs.b[k]);
    auto b_roots = isolate_real_roots(bk);
    const auto prev = signs_at_isolated_roots(chains[k], roots[k], chains[k - 1], roots[k - 1]);
    const auto next = signs_at_isolated_roots(chains[k], roots[k], chains[k + 1], roots[k + 1]);
    const auto b = signs_at_isolated_roots(chains[k], roots[k], bk, b_roots);
    for (std::size_t i = 0; i < roots[k].size(); ++i) {
      const Interval& I = roots[k][i];
      SignLawEntry e;
      e.k = k;
      e.expected = -sd.eta[k - 1] * sd.eta[k];
      e.prev = prev[i];
      e.next = next[i];
      e.b = b[i];
      e.root = I;
      const std::string where = " at root " + to_string(I) + " of a_" + std::to_string(k);
      if (e.prev == Sign::zero || e.next == Sign::zero)
        throw invariant_error("neighbour of a_k vanishes" + where);
      if (e.b == Sign::zero) throw invariant_error("b_k vanishes" + where);
      if (to_int(e.prev) * to_int(e.next) != e.expected)
        throw invariant_error("sign(a_{k-1}) sign(a_{k+1}) != -eta_k eta_{k+1}" + where);
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

// W_n A - X W_n computed entrywise; lambda must divide the (2,2) entry.
struct ParabolicCertificate {
  IntPoly e11, e12, e21, e22;
  IntPoly quotient;  // e22 / lambda
};

inline ParabolicCertificate certify_parabolic(const RileySequence& rs) {
  const int n = rs.n();
  const IntPoly& a = rs.a[n];
  const IntPoly& b = rs.b[n];
  const IntPoly& c = rs.c[n];
  const IntPoly& d = rs.d[n];
  const IntPoly x = IntPoly::x();
  // W A = [[a, a + b], [c, c + d]],  X W = [[a, b], [x a + c, x b + d]]
  ParabolicCertificate cert;
  cert.e11 = a - a;
  cert.e12 = (a + b) - b;
  cert.e21 = c - (x * a + c);
  cert.e22 = (c + d) - (x * b + d);
  if (!cert.e11.is_zero()) throw invariant_error("defect (1,1) is not zero");
  if (cert.e12 != a) throw invariant_error("defect (1,2) is not lambda");
  if (cert.e21 != -(x * a)) throw invariant_error("defect (2,1) is not -x lambda");
  auto q = divides(a, cert.e22);
  if (!q) throw invariant_error("lambda does not divide c_n - x b_n");
  cert.quotient = std::move(*q);
  return cert;
}

}  // namespace riley
