#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace groupmat {

using Poly = std::vector<std::int64_t>;  // coefficient of x^k at index k

/// The q-th cyclotomic polynomial, obtained by exact division of x^q - 1 by
/// every Phi_d with d | q, d < q.
Poly cyclotomic_polynomial(int q);

/// Remainder of `p` modulo the monic polynomial `divisor`, trailing zeros
/// trimmed (the zero polynomial is empty).
Poly poly_remainder(Poly p, std::span<const std::int64_t> divisor);

/// An element of Z[zeta_q] as sum_k coeffs[k] zeta^k, k in [0, q). The
/// representation is not unique; equality of values is decided by
/// is_zero() on the difference.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(int q);
  CyclotomicInt(int q, std::vector<std::int64_t> coeffs);

  static CyclotomicInt integer(int q, std::int64_t n);
  static CyclotomicInt root(int q, int k);  // zeta^k

  int q() const noexcept { return q_; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

  CyclotomicInt& operator+=(const CyclotomicInt& other);
  CyclotomicInt& operator-=(const CyclotomicInt& other);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);

  /// Complex conjugate: zeta^k -> zeta^-k.
  CyclotomicInt conj() const;

  /// Exact test against Phi_q. Recomputes Phi_q; prefer the overload taking
  /// a precomputed polynomial in loops.
  bool is_zero() const;
  bool is_zero(std::span<const std::int64_t> phi) const;

  /// Unique representative: the remainder modulo Phi_q.
  Poly reduced(std::span<const std::int64_t> phi) const;

  std::string to_string() const;

 private:
  int q_;
  std::vector<std::int64_t> coeffs_;
};

bool cyclo_zero_test(const CyclotomicInt& x);

}  // namespace groupmat
