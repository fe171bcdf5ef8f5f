#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace groupmat {

/// Raised for malformed input text: unknown tokens, bad headers, bad
/// descriptors. Carries a 1-based position when one is known (0 = unknown).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class GroupKind { cyclic, product, s3, q8, roots };

// The two readings of S3 as <a, b>: a^2 = b^3 = e with ba = ab^2, or
// a^3 = b^2 = e with ba = a^2 b.
enum class S3Presentation { a2b3, a3b2 };

/// A finite group with a fixed element enumeration. The identity is always
/// index 0. Elements are plain indices in [0, order()); the enumeration
/// order per kind is:
///
///   cyclic n      0, 1, ..., n-1 (additive)
///   product n..   mixed radix, first factor fastest: e, a, a2, .., b, ab, ..
///   s3 a2b3       a^i b^j at index i + 2j: e, a, b, ab, b2, ab2
///   s3 a3b2       a^i b^j at index i + 3j: e, a, a2, b, ab, a2b
///   q8            1, -1, i, -i, j, -j, k, -k
///   roots q       zeta^k at index k, zeta = exp(2 pi i / q)
///
/// Groups are immutable and shared through GroupPtr.
class Group {
 public:
  static std::shared_ptr<const Group> cyclic(int n);
  static std::shared_ptr<const Group> product(std::vector<int> factors);
  static std::shared_ptr<const Group> s3(S3Presentation presentation = S3Presentation::a2b3);
  static std::shared_ptr<const Group> q8();
  static std::shared_ptr<const Group> roots(int q);

  GroupKind kind() const noexcept { return kind_; }
  int order() const noexcept { return order_; }
  const std::vector<int>& factors() const noexcept { return factors_; }
  S3Presentation presentation() const noexcept { return presentation_; }
  bool is_abelian() const noexcept { return kind_ != GroupKind::s3 && kind_ != GroupKind::q8; }

  /// Canonical descriptor, e.g. "cyclic 6", "product 2 2", "s3 a2b3".
  std::string descriptor() const;

  int identity() const noexcept { return 0; }
  int mul(int x, int y) const;
  int inv(int x) const;

  /// x * y^-1
  int right_quotient(int x, int y) const { return mul(x, inv(y)); }

  /// Canonical token for element x.
  std::string token(int x) const;

  /// Parses an element token of this group (not "." or "*"). Throws
  /// ParseError on anything outside the grammar.
  int parse_token(std::string_view token) const;

  bool operator==(const Group& other) const noexcept {
    return kind_ == other.kind_ && factors_ == other.factors_ &&
           (kind_ != GroupKind::s3 || presentation_ == other.presentation_);
  }

 private:
  Group(GroupKind kind, std::vector<int> factors, S3Presentation presentation);

  int parse_word(std::string_view token) const;
  int parse_root(std::string_view token) const;

  GroupKind kind_;
  std::vector<int> factors_;
  S3Presentation presentation_;
  int order_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Builds a group from a descriptor. Accepted forms:
///   "cyclic N" | "zN"              additive cyclic group
///   "product N M .." | "zNxzM.."   direct product of cyclic groups
///   "klein"                        product 2 2
///   "s3" | "s3 a2b3" | "s3 a3b2"   symmetric group on three letters
///   "q8"                           quaternion group
///   "roots Q"                      Q-th roots of unity
GroupPtr make_group(std::string_view descriptor);

bool same_group(const GroupPtr& a, const GroupPtr& b) noexcept;

struct GroupElement {
  GroupPtr group;
  int index = 0;

  std::string token() const { return group->token(index); }
  bool operator==(const GroupElement& other) const noexcept {
    return index == other.index && same_group(group, other.group);
  }
};

enum class GroupOp { multiply, inverse };

/// Product g*h, or g^-1 when mode is inverse (h is then ignored, but must
/// still come from the same group).
GroupElement group_op(const GroupElement& g, const GroupElement& h, GroupOp mode = GroupOp::multiply);

/// A matrix cell: a group element index, the design-zero, or the wildcard.
class Entry {
 public:
  constexpr Entry() noexcept = default;
  constexpr static Entry element(int index) noexcept { return Entry(index); }
  constexpr static Entry zero() noexcept { return Entry(kZero); }
  constexpr static Entry wildcard() noexcept { return Entry(kWildcard); }

  constexpr bool is_element() const noexcept { return raw_ >= 0; }
  constexpr bool is_zero() const noexcept { return raw_ == kZero; }
  constexpr bool is_wildcard() const noexcept { return raw_ == kWildcard; }
  constexpr int index() const noexcept { return raw_; }

  // zero < wildcard < elements by index; matches the token sort order of
  // "." and "*" against element tokens.
  constexpr auto operator<=>(const Entry&) const noexcept = default;

 private:
  constexpr explicit Entry(std::int32_t raw) noexcept : raw_(raw) {}
  static constexpr std::int32_t kZero = -2;
  static constexpr std::int32_t kWildcard = -1;
  std::int32_t raw_ = 0;
};

/// Token grammar for matrix cells: "." is the design-zero, "*" the
/// wildcard, anything else is an element token of `group`.
Entry parse_element(std::string_view token, const Group& group);
std::string entry_token(Entry entry, const Group& group);

}  // namespace groupmat
