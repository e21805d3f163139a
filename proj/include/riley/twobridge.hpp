// 2-bridge knot fractions p/q, the sign sequences of the standard
// two-generator presentation, signature and determinant.

#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "riley/error.hpp"

namespace riley {

// Canonical fraction: p odd > 1, q odd with -p < q < p, gcd(|q|, p) = 1.
struct Fraction {
  std::int64_t p = 3;
  std::int64_t q = 1;
  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend auto operator<=>(const Fraction&, const Fraction&) = default;
};

inline std::string to_string(const Fraction& k) { return std::to_string(k.p) + "/" + std::to_string(k.q); }

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m (gcd(a, m) = 1).
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, new_t = 1, r = m, new_r = mod(a, m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("not invertible");
  return mod(t, m);
}

}  // namespace detail

// Brings q into the odd range (-p, p). An even residue is moved by p, which
// gives the same knot.
inline Fraction normalize(std::int64_t p, std::int64_t q) {
  if (p <= 1) throw std::invalid_argument("p must be > 1");
  if (p % 2 == 0) throw std::invalid_argument("p must be odd");
  if (std::gcd(p, q < 0 ? -q : q) != 1) throw std::invalid_argument("p and q must be coprime");
  std::int64_t r = detail::mod(q, 2 * p);
  if (r > p) r -= 2 * p;
  if (r % 2 == 0) r += r > 0 ? -p : p;
  return {p, r};
}

inline bool is_canonical(const Fraction& k) {
  return k.p > 1 && k.p % 2 == 1 && k.q % 2 != 0 && -k.p < k.q && k.q < k.p &&
         std::gcd(k.p, k.q < 0 ? -k.q : k.q) == 1;
}

// Sign data of the presentation <a, b | wa = bw>, w = prod a^eps_i b^eta_i.
struct SignData {
  int n = 0;
  std::vector<int> eps;    // eps[i-1] = eps_i
  std::vector<int> eta;    // eta[i-1] = eta_i
  std::vector<int> delta;  // eps_i * eta_i
  std::vector<int> mu;     // mu[k] = prod_{i<=k} eps_i, mu[0] = 1
};

// (-1)^floor(m q / p): sign of the m-th letter of the word.
inline int letter_sign(const Fraction& k, std::int64_t m) {
  return detail::floor_div(m * k.q, k.p) % 2 == 0 ? 1 : -1;
}

inline SignData sign_sequences(const Fraction& k) {
  if (!is_canonical(k)) throw std::invalid_argument("fraction " + to_string(k) + " is not canonical");
  SignData sd;
  sd.n = static_cast<int>((k.p - 1) / 2);
  sd.eps.resize(sd.n);
  sd.eta.resize(sd.n);
  sd.delta.resize(sd.n);
  sd.mu.resize(sd.n + 1);
  sd.mu[0] = 1;
  for (int i = 1; i <= sd.n; ++i) {
    sd.eps[i - 1] = letter_sign(k, 2 * i - 1);
    sd.eta[i - 1] = letter_sign(k, 2 * i);
    sd.delta[i - 1] = sd.eps[i - 1] * sd.eta[i - 1];
    sd.mu[i] = sd.mu[i - 1] * sd.eps[i - 1];
  }
  for (int i = 0; i < sd.n; ++i)
    if (sd.eps[i] != sd.eta[sd.n - 1 - i])
      throw invariant_error("palindrome eps_i = eta_{n+1-i} fails for " + to_string(k));
  return sd;
}

inline int signature(const SignData& sd) {
  int s = 0;
  for (int i = 0; i < sd.n; ++i) s += sd.eps[i] + sd.eta[i];
  return s;
}

inline std::int64_t determinant(const Fraction& k) { return k.p; }

// det = p must be congruent to (-1)^(sigma/2) modulo 4.
inline bool congruence_holds(std::int64_t det, int sigma) {
  const std::int64_t rhs = (sigma / 2) % 2 == 0 ? 1 : 3;
  return detail::mod(det, 4) == rhs;
}

// All canonical fractions with 3 <= p <= pmax, ordered by p, then |q|, then
// positive q first. With `dedup`, q' ~ q when q' = q^{+-1} mod p; the first
// member of each class is kept.
inline std::vector<Fraction> enumerate(std::int64_t pmax, bool dedup = false) {
  if (pmax < 3) throw std::invalid_argument("pmax must be >= 3");
  std::vector<Fraction> out;
  for (std::int64_t p = 3; p <= pmax; p += 2) {
    std::set<std::int64_t> seen;
    for (std::int64_t a = 1; a < p; a += 2) {
      if (std::gcd(a, p) != 1) continue;
      for (std::int64_t q : {a, -a}) {
        if (dedup) {
          const std::int64_t r = detail::mod(q, p);
          if (seen.count(r)) continue;
          seen.insert(r);
          seen.insert(detail::mod_inverse(r, p));
        }
        out.push_back({p, q});
      }
    }
  }
  return out;
}

}  // namespace riley
