#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "groupmat/group.hpp"

namespace groupmat {

/// A rows x cols matrix over a group extended by the design-zero and the
/// wildcard. Immutable once built; entries are stored row-major.
class GMatrix {
 public:
  GMatrix(GroupPtr group, std::size_t rows, std::size_t cols, std::vector<Entry> entries);
  /// rows x cols filled with `fill` (identity by default).
  GMatrix(GroupPtr group, std::size_t rows, std::size_t cols, Entry fill = Entry::element(0));

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Entry operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
  Entry at(std::size_t r, std::size_t c) const;
  std::span<const Entry> row(std::size_t r) const noexcept { return {entries_.data() + r * cols_, cols_}; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  bool has_zeros() const noexcept;
  bool has_wildcards() const noexcept;

  /// Copy with the cell replaced.
  GMatrix with(std::size_t r, std::size_t c, Entry e) const;

  bool operator==(const GMatrix& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_ && same_group(group_, other.group_) &&
           entries_ == other.entries_;
  }

 private:
  GroupPtr group_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Entry> entries_;
};

/// Row i is the first row shifted right by i: M[i][j] = row[(j - i) mod n].
GMatrix circulant(GroupPtr group, std::span<const Entry> first_row);
/// M[i][j] = row[(j + i) mod n].
GMatrix back_circulant(GroupPtr group, std::span<const Entry> first_row);

GMatrix transpose(const GMatrix& m);

/// Concatenates a rectangular grid of blocks. Blocks in one grid row share
/// a height, blocks in one grid column share a width.
GMatrix block_grid(const std::vector<std::vector<GMatrix>>& blocks);

/// Re-expresses `m` over `target`. Cyclic and roots-of-unity groups of order
/// p embed into those of order q when p | q via k -> k*q/p (so a +-1 matrix
/// lands on 1 -> zeta^0, -1 -> zeta^(q/2)). Identical groups pass through.
GMatrix embed(const GMatrix& m, const GroupPtr& target);
bool embeds_into(const Group& from, const Group& to) noexcept;

/// Entry [(i1,i2),(j1,j2)] = A[i1,j1] * B[i2,j2], with row index i1*rows(B)+i2.
/// When the groups differ, the smaller cyclic/roots group is embedded into
/// the larger one first.
GMatrix kronecker_compose(const GMatrix& a, const GMatrix& b);

enum class AdjointKind { plain, group_inverse, complex_conjugate, quaternion_conjugate };

/// Transpose with the kind's involution applied to each element. The complex
/// conjugate needs a cyclic/roots group; the quaternion conjugate needs q8 or
/// roots of order 1, 2 or 4.
GMatrix adjoint(const GMatrix& m, AdjointKind kind);

/// Cubic residue classes of a prime p = 1 mod 3: C0 holds the cubes,
/// C1 = g*C0 and C2 = g^2*C0 for the least primitive root g.
std::array<std::vector<int>, 3> cubic_residue_classes(int p);

struct ResidueCoefficients {
  Entry identity;  // diagonal
  Entry c0;
  Entry c1;
  Entry c2;
};

/// p x p matrix whose (i, j) entry is the coefficient of the class holding
/// (j - i) mod p.
GMatrix residue_class_matrix(GroupPtr group, int p, const ResidueCoefficients& coeffs);

}  // namespace groupmat
