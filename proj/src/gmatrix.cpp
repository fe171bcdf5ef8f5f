#include "groupmat/gmatrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace groupmat {

GMatrix::GMatrix(GroupPtr group, std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : group_(std::move(group)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (!group_) throw std::invalid_argument("GMatrix: null group");
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("GMatrix: " + std::to_string(entries_.size()) + " entries for a " +
                                std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
  for (Entry e : entries_)
    if (e.is_element() && e.index() >= group_->order())
      throw std::invalid_argument("GMatrix: entry index " + std::to_string(e.index()) + " outside " +
                                  group_->descriptor());
}

GMatrix::GMatrix(GroupPtr group, std::size_t rows, std::size_t cols, Entry fill)
    : GMatrix(std::move(group), rows, cols, std::vector<Entry>(rows * cols, fill)) {}

Entry GMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("GMatrix::at out of range");
  return (*this)(r, c);
}

bool GMatrix::has_zeros() const noexcept {
  return std::any_of(entries_.begin(), entries_.end(), [](Entry e) { return e.is_zero(); });
}

bool GMatrix::has_wildcards() const noexcept {
  return std::any_of(entries_.begin(), entries_.end(), [](Entry e) { return e.is_wildcard(); });
}

GMatrix GMatrix::with(std::size_t r, std::size_t c, Entry e) const {
  auto entries = entries_;
  entries.at(r * cols_ + c) = e;
  return GMatrix(group_, rows_, cols_, std::move(entries));
}

namespace {

GMatrix shifted(GroupPtr group, std::span<const Entry> first_row, int direction) {
  const std::size_t n = first_row.size();
  if (n == 0) throw std::invalid_argument("circulant: empty first row");
  std::vector<Entry> entries(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      entries[i * n + j] = first_row[direction > 0 ? (j + n - i) % n : (j + i) % n];
  return GMatrix(std::move(group), n, n, std::move(entries));
}

bool is_cyclic_like(const Group& g) noexcept {
  return g.kind() == GroupKind::cyclic || g.kind() == GroupKind::roots;
}

}  // namespace

GMatrix circulant(GroupPtr group, std::span<const Entry> first_row) { return shifted(std::move(group), first_row, 1); }

GMatrix back_circulant(GroupPtr group, std::span<const Entry> first_row) {
  return shifted(std::move(group), first_row, -1);
}

GMatrix transpose(const GMatrix& m) {
  std::vector<Entry> entries(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) entries[c * m.rows() + r] = m(r, c);
  return GMatrix(m.group(), m.cols(), m.rows(), std::move(entries));
}

GMatrix block_grid(const std::vector<std::vector<GMatrix>>& blocks) {
  if (blocks.empty() || blocks.front().empty()) throw std::invalid_argument("block_grid: empty grid");
  const std::size_t grid_cols = blocks.front().size();
  const GroupPtr& group = blocks.front().front().group();
  std::vector<std::size_t> heights, widths;
  for (const auto& b : blocks.front()) widths.push_back(b.cols());
  for (std::size_t br = 0; br < blocks.size(); ++br) {
    if (blocks[br].size() != grid_cols) throw std::invalid_argument("block_grid: ragged grid row " + std::to_string(br));
    heights.push_back(blocks[br].front().rows());
    for (std::size_t bc = 0; bc < grid_cols; ++bc) {
      const auto& b = blocks[br][bc];
      if (!same_group(b.group(), group)) throw std::invalid_argument("block_grid: blocks over different groups");
      if (b.rows() != heights[br] || b.cols() != widths[bc])
        throw std::invalid_argument("block_grid: block (" + std::to_string(br) + "," + std::to_string(bc) +
                                    ") does not tile");
    }
  }
  std::size_t rows = 0, cols = 0;
  for (auto h : heights) rows += h;
  for (auto w : widths) cols += w;
  std::vector<Entry> entries;
  entries.reserve(rows * cols);
  for (std::size_t br = 0; br < blocks.size(); ++br)
    for (std::size_t r = 0; r < heights[br]; ++r)
      for (const auto& b : blocks[br]) {
        auto row = b.row(r);
        entries.insert(entries.end(), row.begin(), row.end());
      }
  return GMatrix(group, rows, cols, std::move(entries));
}

bool embeds_into(const Group& from, const Group& to) noexcept {
  if (from == to) return true;
  return is_cyclic_like(from) && is_cyclic_like(to) && to.order() % from.order() == 0;
}

GMatrix embed(const GMatrix& m, const GroupPtr& target) {
  if (same_group(m.group(), target)) return m;
  if (!embeds_into(*m.group(), *target))
    throw std::invalid_argument("cannot embed " + m.group()->descriptor() + " into " + target->descriptor());
  const int scale = target->order() / m.group()->order();
  std::vector<Entry> entries = m.entries();
  for (auto& e : entries)
    if (e.is_element()) e = Entry::element(e.index() * scale);
  return GMatrix(target, m.rows(), m.cols(), std::move(entries));
}

GMatrix kronecker_compose(const GMatrix& a_in, const GMatrix& b_in) {
  GroupPtr group;
  if (embeds_into(*b_in.group(), *a_in.group())) group = a_in.group();
  else if (embeds_into(*a_in.group(), *b_in.group())) group = b_in.group();
  else
    throw std::invalid_argument("kronecker_compose: incompatible groups " + a_in.group()->descriptor() + " and " +
                                b_in.group()->descriptor());
  if (a_in.has_zeros() || a_in.has_wildcards() || b_in.has_zeros() || b_in.has_wildcards())
    throw std::invalid_argument("kronecker_compose: zero or wildcard entries present");
  const GMatrix a = embed(a_in, group);
  const GMatrix b = embed(b_in, group);
  const Group& g = *group;
  const std::size_t rows = a.rows() * b.rows(), cols = a.cols() * b.cols();
  std::vector<Entry> entries(rows * cols);
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
      for (std::size_t j1 = 0; j1 < a.cols(); ++j1)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          entries[(i1 * b.rows() + i2) * cols + j1 * b.cols() + j2] =
              Entry::element(g.mul(a(i1, j1).index(), b(i2, j2).index()));
  return GMatrix(group, rows, cols, std::move(entries));
}

GMatrix adjoint(const GMatrix& m, AdjointKind kind) {
  const Group& g = *m.group();
  switch (kind) {
    case AdjointKind::plain:
    case AdjointKind::group_inverse:
      break;
    case AdjointKind::complex_conjugate:
      if (!is_cyclic_like(g))
        throw std::invalid_argument("complex-conjugate adjoint needs roots of unity, got " + g.descriptor());
      break;
    case AdjointKind::quaternion_conjugate:
      if (!(g.kind() == GroupKind::q8 || (is_cyclic_like(g) && 4 % g.order() == 0)))
        throw std::invalid_argument("quaternion-conjugate adjoint needs quaternion entries, got " + g.descriptor());
      break;
  }
  GMatrix t = transpose(m);
  if (kind == AdjointKind::plain) return t;
  // On every admissible domain the involution is the group inverse: the
  // entries are unit-modulus roots of unity or unit quaternions.
  std::vector<Entry> entries = t.entries();
  for (auto& e : entries)
    if (e.is_element()) e = Entry::element(g.inv(e.index()));
  return GMatrix(t.group(), t.rows(), t.cols(), std::move(entries));
}

std::array<std::vector<int>, 3> cubic_residue_classes(int p) {
  if (p < 2) throw std::invalid_argument("cubic_residue_classes: p must be prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("cubic_residue_classes: " + std::to_string(p) + " is not prime");
  if (p % 3 != 1)
    throw std::invalid_argument("cubic_residue_classes: need p = 1 mod 3, got " + std::to_string(p));
  auto is_primitive = [p](int g) {
    long long x = 1;
    for (int e = 1; e < p - 1; ++e) {
      x = x * g % p;
      if (x == 1) return false;
    }
    return true;
  };
  int g = 2;
  while (!is_primitive(g)) ++g;
  std::array<std::vector<int>, 3> classes;
  long long x = 1;
  for (int e = 0; e < p - 1; ++e) {
    classes[e % 3].push_back(static_cast<int>(x));
    x = x * g % p;
  }
  for (auto& c : classes) std::sort(c.begin(), c.end());
  return classes;
}

GMatrix residue_class_matrix(GroupPtr group, int p, const ResidueCoefficients& coeffs) {
  const auto classes = cubic_residue_classes(p);
  std::vector<Entry> by_difference(static_cast<std::size_t>(p));
  by_difference[0] = coeffs.identity;
  const std::array<Entry, 3> class_coeff = {coeffs.c0, coeffs.c1, coeffs.c2};
  for (int c = 0; c < 3; ++c)
    for (int d : classes[c]) by_difference[d] = class_coeff[c];
  return circulant(std::move(group), by_difference);
}

}  // namespace groupmat
