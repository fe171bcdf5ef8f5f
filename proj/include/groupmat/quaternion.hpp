#pragma once

#include <cstdint>
#include <string>

namespace groupmat {

/// Integer quaternion re + i*x + j*y + k*z.
struct Quaternion {
  std::int64_t re = 0;
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t k = 0;

  constexpr Quaternion conj() const noexcept { return {re, -i, -j, -k}; }
  constexpr std::int64_t norm() const noexcept { return re * re + i * i + j * j + k * k; }
  constexpr bool is_real() const noexcept { return i == 0 && j == 0 && k == 0; }
  constexpr bool is_complex() const noexcept { return j == 0 && k == 0; }

  constexpr Quaternion& operator+=(const Quaternion& o) noexcept {
    re += o.re;
    i += o.i;
    j += o.j;
    k += o.k;
    return *this;
  }
  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) noexcept { return a += b; }
  friend constexpr Quaternion operator-(const Quaternion& a) noexcept { return {-a.re, -a.i, -a.j, -a.k}; }
  friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) noexcept { return a + -b; }

  // Hamilton product; i^2 = j^2 = k^2 = ijk = -1.
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) noexcept {
    return {a.re * b.re - a.i * b.i - a.j * b.j - a.k * b.k,
            a.re * b.i + a.i * b.re + a.j * b.k - a.k * b.j,
            a.re * b.j - a.i * b.k + a.j * b.re + a.k * b.i,
            a.re * b.k + a.i * b.j - a.j * b.i + a.k * b.re};
  }

  constexpr bool operator==(const Quaternion&) const noexcept = default;

  std::string to_string() const;
};

/// x * y, or x * conj(y) when conjugate_y is set.
constexpr Quaternion quat_mul(const Quaternion& x, const Quaternion& y, bool conjugate_y = false) noexcept {
  return x * (conjugate_y ? y.conj() : y);
}

}  // namespace groupmat
