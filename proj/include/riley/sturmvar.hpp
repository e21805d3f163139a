// Generalized Sturm bound for sequences f_0, ..., f_n with weakened
// hypotheses on the last link:
//   (1) f_0 is a non-zero constant;
//   (2) f_k(x0) = 0 with 0 < k < n and x0 real  =>  f_{k-1}(x0) f_{k+1}(x0) < 0.
// Then f_n has at least |var(f(-inf)) - var(f(+inf))| distinct real roots.

#pragma once

#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "riley/exactpoly.hpp"
#include "riley/sturm.hpp"

namespace riley {

using PolySeq = std::vector<IntPoly>;

// Adjacent sign changes of a sequence of non-zero signs.
inline int variation(std::span<const Sign> signs) {
  int count = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == Sign::zero) throw std::invalid_argument("variation of a sequence with a zero entry");
    if (i > 0 && signs[i] != signs[i - 1]) ++count;
  }
  return count;
}

struct VariationCount {
  int at_minus_inf = 0;
  int at_plus_inf = 0;
  int bound = 0;
};

inline VariationCount variation_at_infinity(std::span<const IntPoly> seq) {
  std::vector<Sign> minus, plus;
  minus.reserve(seq.size());
  plus.reserve(seq.size());
  for (const auto& f : seq) {
    if (f.is_zero()) throw std::invalid_argument("sequence contains the zero polynomial");
    minus.push_back(sign_at_infinity(f, Infinity::minus));
    plus.push_back(sign_at_infinity(f, Infinity::plus));
  }
  VariationCount v;
  v.at_minus_inf = variation(minus);
  v.at_plus_inf = variation(plus);
  v.bound = std::abs(v.at_minus_inf - v.at_plus_inf);
  return v;
}

struct HypothesisViolation {
  int k = 0;             // index of the polynomial whose root breaks condition (2)
  Interval witness;      // isolates that root
  Sign prev = Sign::zero;
  Sign next = Sign::zero;
};

struct HypothesisReport {
  bool f0_constant_nonzero = false;
  std::vector<HypothesisViolation> violations;
  int roots_checked = 0;
  bool passed() const { return f0_constant_nonzero && violations.empty(); }
};

// `chains[k]` must be the Sturm sequence of seq[k] (unused when seq[k] is zero).
inline HypothesisReport check_hypotheses(std::span<const IntPoly> seq, std::span<const SturmSequence> chains) {
  HypothesisReport report;
  if (seq.empty()) throw std::invalid_argument("empty polynomial sequence");
  report.f0_constant_nonzero = seq[0].degree() == 0;
  for (std::size_t k = 1; k < seq.size(); ++k)
    if (seq[k].is_zero()) throw std::invalid_argument("f_" + std::to_string(k) + " is the zero polynomial");
  if (chains.size() != seq.size()) throw std::invalid_argument("one Sturm sequence per member expected");
  const std::size_t n = seq.size() - 1;
  std::vector<std::vector<Interval>> roots(seq.size());
  for (std::size_t k = 0; k <= n; ++k)
    if (!seq[k].is_zero()) roots[k] = isolate_real_roots(chains[k]);
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Sign> prev(roots[k].size(), Sign::zero);
    if (!seq[k - 1].is_zero()) prev = signs_at_isolated_roots(chains[k], roots[k], chains[k - 1], roots[k - 1]);
    const auto next = signs_at_isolated_roots(chains[k], roots[k], chains[k + 1], roots[k + 1]);
    report.roots_checked += static_cast<int>(roots[k].size());
    for (std::size_t i = 0; i < roots[k].size(); ++i)
      if (prev[i] * next[i] != Sign::negative)
        report.violations.push_back({static_cast<int>(k), roots[k][i], prev[i], next[i]});
  }
  return report;
}

inline std::vector<SturmSequence> sturm_chains(std::span<const IntPoly> seq) {
  std::vector<SturmSequence> chains(seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k)
    if (!seq[k].is_zero()) chains[k] = SturmSequence(seq[k]);
  return chains;
}

inline HypothesisReport check_hypotheses(std::span<const IntPoly> seq) {
  if (seq.empty()) throw std::invalid_argument("empty polynomial sequence");
  for (std::size_t k = 1; k < seq.size(); ++k)
    if (seq[k].is_zero()) throw std::invalid_argument("f_" + std::to_string(k) + " is the zero polynomial");
  const auto chains = sturm_chains(seq);
  return check_hypotheses(seq, chains);
}

// Refuses unless the hypotheses were verified; count_real_roots(f_n) >= result.
inline int lower_bound(std::span<const IntPoly> seq, const HypothesisReport& verified) {
  if (!verified.passed()) throw std::domain_error("hypotheses of the generalized Sturm bound do not hold");
  return variation_at_infinity(seq).bound;
}

inline int lower_bound(std::span<const IntPoly> seq) { return lower_bound(seq, check_hypotheses(seq)); }

}  // namespace riley
