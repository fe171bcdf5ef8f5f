#include "groupmat/group_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace groupmat {

GroupRingVector::GroupRingVector(GroupPtr group)
    : group_(std::move(group)), counts_(static_cast<std::size_t>(group_->order()), 0) {}

GroupRingVector::GroupRingVector(GroupPtr group, std::vector<std::int64_t> counts)
    : group_(std::move(group)), counts_(std::move(counts)) {
  if (counts_.size() != static_cast<std::size_t>(group_->order()))
    throw std::invalid_argument("GroupRingVector: counts length does not match group order");
}

GroupRingVector GroupRingVector::delta(GroupPtr group, int element) {
  GroupRingVector v(std::move(group));
  v.add(element);
  return v;
}

GroupRingVector GroupRingVector::indicator(GroupPtr group, std::span<const int> elements) {
  GroupRingVector v(std::move(group));
  for (int e : elements) v.add(e);
  return v;
}

std::int64_t GroupRingVector::total() const noexcept {
  std::int64_t t = 0;
  for (auto c : counts_) t += c;
  return t;
}

GroupRingVector& GroupRingVector::operator+=(const GroupRingVector& other) {
  if (!same_group(group_, other.group_)) throw std::invalid_argument("GroupRingVector: mixed groups");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

GroupRingVector& GroupRingVector::operator-=(const GroupRingVector& other) {
  if (!same_group(group_, other.group_)) throw std::invalid_argument("GroupRingVector: mixed groups");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] -= other.counts_[i];
  return *this;
}

GroupRingVector& GroupRingVector::operator*=(std::int64_t scalar) {
  for (auto& c : counts_) c *= scalar;
  return *this;
}

bool GroupRingVector::is_uniform() const noexcept {
  return std::adjacent_find(counts_.begin(), counts_.end(), std::not_equal_to<>()) == counts_.end();
}

std::string GroupRingVector::to_string() const {
  std::string out;
  for (std::size_t g = 0; g < counts_.size(); ++g) {
    const auto c = counts_[g];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += group_->token(static_cast<int>(g));
  }
  return out.empty() ? "0" : out;
}

std::string GroupRingVector::to_multiset_string() const {
  std::string out = "{";
  for (std::size_t g = 0; g < counts_.size(); ++g) {
    if (counts_[g] == 0) continue;
    if (out.size() > 1) out += ",";
    out += group_->token(static_cast<int>(g)) + ":" + std::to_string(counts_[g]);
  }
  return out + "}";
}

GroupRingVector ring_convolve(const GroupRingVector& x, const GroupRingVector& y, bool invert_y) {
  if (!same_group(x.group(), y.group()))
    throw std::invalid_argument("ring_convolve: operands over different groups");
  const Group& g = *x.group();
  GroupRingVector out(x.group());
  for (int a = 0; a < g.order(); ++a) {
    const auto ca = x[a];
    if (ca == 0) continue;
    for (int b = 0; b < g.order(); ++b) {
      const auto cb = y[b];
      if (cb == 0) continue;
      out.add(g.mul(a, invert_y ? g.inv(b) : b), ca * cb);
    }
  }
  return out;
}

}  // namespace groupmat
