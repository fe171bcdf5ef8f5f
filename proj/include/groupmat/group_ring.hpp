#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "groupmat/group.hpp"

namespace groupmat {

/// A formal integer combination sum_g counts[g] g over a finite group; the
/// multiset of quotients of two rows lives here.
class GroupRingVector {
 public:
  explicit GroupRingVector(GroupPtr group);
  GroupRingVector(GroupPtr group, std::vector<std::int64_t> counts);

  static GroupRingVector delta(GroupPtr group, int element);
  /// Sum of the listed elements (repeats add up).
  static GroupRingVector indicator(GroupPtr group, std::span<const int> elements);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<std::int64_t>& counts() const noexcept { return counts_; }
  std::int64_t operator[](int element) const { return counts_.at(static_cast<std::size_t>(element)); }
  std::int64_t total() const noexcept;

  void add(int element, std::int64_t times = 1) { counts_.at(static_cast<std::size_t>(element)) += times; }

  GroupRingVector& operator+=(const GroupRingVector& other);
  GroupRingVector& operator-=(const GroupRingVector& other);
  GroupRingVector& operator*=(std::int64_t scalar);
  friend GroupRingVector operator+(GroupRingVector a, const GroupRingVector& b) { return a += b; }
  friend GroupRingVector operator-(GroupRingVector a, const GroupRingVector& b) { return a -= b; }
  friend GroupRingVector operator*(std::int64_t s, GroupRingVector a) { return a *= s; }

  bool operator==(const GroupRingVector& other) const noexcept {
    return same_group(group_, other.group_) && counts_ == other.counts_;
  }

  /// Every element occurs the same number of times.
  bool is_uniform() const noexcept;

  /// "2*e + a + 3*ab" using group tokens; "0" when empty.
  std::string to_string() const;
  /// "{e:2,a:1,ab:3}", nonzero counts only.
  std::string to_multiset_string() const;

 private:
  GroupPtr group_;
  std::vector<std::int64_t> counts_;
};

/// sum over (g, h) of x[g] y[h] * (g h), with h replaced by h^-1 when
/// invert_y is set.
GroupRingVector ring_convolve(const GroupRingVector& x, const GroupRingVector& y, bool invert_y = false);

}  // namespace groupmat
