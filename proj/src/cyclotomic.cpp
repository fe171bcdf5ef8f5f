#include "groupmat/cyclotomic.hpp"

#include <stdexcept>

namespace groupmat {

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of p by a monic divisor; throws if the division leaves a
// remainder, which would mean the cyclotomic recursion went wrong.
Poly exact_quotient(Poly p, const Poly& divisor) {
  trim(p);
  const std::size_t dd = divisor.size() - 1;
  if (p.size() <= dd) throw std::logic_error("exact_quotient: dividend degree too small");
  Poly quotient(p.size() - dd, 0);
  for (std::size_t i = p.size(); i-- > dd;) {
    const std::int64_t c = p[i];
    if (c == 0) continue;
    quotient[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) p[i - dd + j] -= c * divisor[j];
  }
  trim(p);
  if (!p.empty()) throw std::logic_error("exact_quotient: nonzero remainder");
  return quotient;
}

}  // namespace

Poly cyclotomic_polynomial(int q) {
  if (q < 1) throw std::invalid_argument("cyclotomic_polynomial: q must be positive");
  Poly p(static_cast<std::size_t>(q) + 1, 0);
  p[0] = -1;
  p[q] = 1;
  for (int d = 1; d < q; ++d)
    if (q % d == 0) p = exact_quotient(std::move(p), cyclotomic_polynomial(d));
  return p;
}

Poly poly_remainder(Poly p, std::span<const std::int64_t> divisor) {
  if (divisor.empty() || divisor.back() != 1) throw std::invalid_argument("poly_remainder: divisor must be monic");
  trim(p);
  const std::size_t dd = divisor.size() - 1;
  for (std::size_t i = p.size(); i-- > dd;) {
    const std::int64_t c = p[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) p[i - dd + j] -= c * divisor[j];
  }
  trim(p);
  return p;
}

CyclotomicInt::CyclotomicInt(int q) : q_(q), coeffs_(static_cast<std::size_t>(q), 0) {
  if (q < 1) throw std::invalid_argument("CyclotomicInt: q must be positive");
}

CyclotomicInt::CyclotomicInt(int q, std::vector<std::int64_t> coeffs) : q_(q), coeffs_(std::move(coeffs)) {
  if (q < 1) throw std::invalid_argument("CyclotomicInt: q must be positive");
  if (coeffs_.size() != static_cast<std::size_t>(q))
    throw std::invalid_argument("CyclotomicInt: expected " + std::to_string(q) + " coefficients");
}

CyclotomicInt CyclotomicInt::integer(int q, std::int64_t n) {
  CyclotomicInt x(q);
  x.coeffs_[0] = n;
  return x;
}

CyclotomicInt CyclotomicInt::root(int q, int k) {
  CyclotomicInt x(q);
  x.coeffs_[((k % q) + q) % q] = 1;
  return x;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
  if (other.q_ != q_) throw std::invalid_argument("CyclotomicInt: mismatched root orders");
  for (int k = 0; k < q_; ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& other) {
  if (other.q_ != q_) throw std::invalid_argument("CyclotomicInt: mismatched root orders");
  for (int k = 0; k < q_; ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.q_ != b.q_) throw std::invalid_argument("CyclotomicInt: mismatched root orders");
  const int q = a.q_;
  CyclotomicInt out(q);
  for (int i = 0; i < q; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < q; ++j) out.coeffs_[(i + j) % q] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

CyclotomicInt CyclotomicInt::conj() const {
  CyclotomicInt out(q_);
  for (int k = 0; k < q_; ++k) out.coeffs_[(q_ - k) % q_] = coeffs_[k];
  return out;
}

bool CyclotomicInt::is_zero() const { return is_zero(cyclotomic_polynomial(q_)); }

bool CyclotomicInt::is_zero(std::span<const std::int64_t> phi) const { return reduced(phi).empty(); }

Poly CyclotomicInt::reduced(std::span<const std::int64_t> phi) const { return poly_remainder(coeffs_, phi); }

std::string CyclotomicInt::to_string() const {
  std::string out;
  for (int k = 0; k < q_; ++k) {
    const auto c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    const auto mag = c < 0 ? -c : c;
    if (k == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += "z^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

bool cyclo_zero_test(const CyclotomicInt& x) { return x.is_zero(); }

}  // namespace groupmat
