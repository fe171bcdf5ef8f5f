#include "groupmat/group.hpp"

#include <array>
#include <charconv>
#include <optional>
#include <sstream>

namespace groupmat {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

constexpr std::string_view kFactorLetters = "abcd";

int mod(long long x, int n) {
  long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Q8 units: 0 = 1, 1 = i, 2 = j, 3 = k. kUnitProduct[u][v] = {sign, unit}.
constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kUnitProduct = {{
    {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
    {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
    {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
    {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
}};

constexpr std::array<std::string_view, 8> kQ8Tokens = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};

std::optional<long long> parse_uint(std::string_view s) {
  if (s.empty()) return std::nullopt;
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0) return std::nullopt;
  return v;
}

std::vector<std::string> split_words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

Group::Group(GroupKind kind, std::vector<int> factors, S3Presentation presentation)
    : kind_(kind), factors_(std::move(factors)), presentation_(presentation), order_(1) {
  switch (kind_) {
    case GroupKind::s3:
      order_ = 6;
      break;
    case GroupKind::q8:
      order_ = 8;
      break;
    default:
      for (int f : factors_) order_ *= f;
  }
}

GroupPtr Group::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive, got " + std::to_string(n));
  return GroupPtr(new Group(GroupKind::cyclic, {n}, S3Presentation::a2b3));
}

GroupPtr Group::product(std::vector<int> factors) {
  if (factors.empty()) throw std::invalid_argument("product group needs at least one factor");
  if (factors.size() > kFactorLetters.size())
    throw std::invalid_argument("product group supports at most 4 factors");
  long long order = 1;
  for (int f : factors) {
    if (f < 1) throw std::invalid_argument("product factor order must be positive, got " + std::to_string(f));
    order *= f;
    if (order > (1 << 24)) throw std::invalid_argument("product group too large");
  }
  return GroupPtr(new Group(GroupKind::product, std::move(factors), S3Presentation::a2b3));
}

GroupPtr Group::s3(S3Presentation presentation) {
  return GroupPtr(new Group(GroupKind::s3, {}, presentation));
}

GroupPtr Group::q8() { return GroupPtr(new Group(GroupKind::q8, {}, S3Presentation::a2b3)); }

GroupPtr Group::roots(int q) {
  if (q < 1) throw std::invalid_argument("root order must be positive, got " + std::to_string(q));
  return GroupPtr(new Group(GroupKind::roots, {q}, S3Presentation::a2b3));
}

std::string Group::descriptor() const {
  switch (kind_) {
    case GroupKind::cyclic:
      return "cyclic " + std::to_string(order_);
    case GroupKind::roots:
      return "roots " + std::to_string(order_);
    case GroupKind::product: {
      std::string out = "product";
      for (int f : factors_) out += " " + std::to_string(f);
      return out;
    }
    case GroupKind::s3:
      return presentation_ == S3Presentation::a2b3 ? "s3 a2b3" : "s3 a3b2";
    case GroupKind::q8:
      return "q8";
  }
  return {};
}

int Group::mul(int x, int y) const {
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::roots:
      return (x + y) % order_;
    case GroupKind::product: {
      int out = 0;
      int place = 1;
      for (int f : factors_) {
        out += ((x % f + y % f) % f) * place;
        x /= f;
        y /= f;
        place *= f;
      }
      return out;
    }
    case GroupKind::s3:
      if (presentation_ == S3Presentation::a2b3) {
        // (a^i b^j)(a^k b^l) = a^(i+k) b^((-1)^k j + l)
        int i = x % 2, j = x / 2, k = y % 2, l = y / 2;
        return (i + k) % 2 + 2 * mod((k ? -j : j) + l, 3);
      } else {
        // (a^i b^j)(a^k b^l) = a^(i + (-1)^j k) b^(j+l)
        int i = x % 3, j = x / 3, k = y % 3, l = y / 3;
        return mod(i + (j ? -k : k), 3) + 3 * ((j + l) % 2);
      }
    case GroupKind::q8: {
      auto [sign, unit] = kUnitProduct[x / 2][y / 2];
      return 2 * unit + ((x % 2) ^ (y % 2) ^ sign);
    }
  }
  return 0;
}

int Group::inv(int x) const {
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::roots:
      return (order_ - x) % order_;
    case GroupKind::product: {
      int out = 0;
      int place = 1;
      for (int f : factors_) {
        out += ((f - x % f) % f) * place;
        x /= f;
        place *= f;
      }
      return out;
    }
    case GroupKind::s3:
      for (int y = 0; y < 6; ++y)
        if (mul(x, y) == 0) return y;
      return 0;
    case GroupKind::q8:
      return x < 2 ? x : (x ^ 1);
  }
  return 0;
}

std::string Group::token(int x) const {
  if (x < 0 || x >= order_) throw std::out_of_range("element index " + std::to_string(x) + " outside group");
  auto letter_word = [](const std::vector<std::pair<char, int>>& parts) {
    std::string out;
    for (auto [letter, exp] : parts) {
      if (exp == 0) continue;
      out += letter;
      if (exp > 1) out += std::to_string(exp);
    }
    return out.empty() ? std::string("e") : out;
  };
  switch (kind_) {
    case GroupKind::cyclic:
      return std::to_string(x);
    case GroupKind::product: {
      std::vector<std::pair<char, int>> parts;
      for (std::size_t f = 0; f < factors_.size(); ++f) {
        parts.emplace_back(kFactorLetters[f], x % factors_[f]);
        x /= factors_[f];
      }
      return letter_word(parts);
    }
    case GroupKind::s3:
      if (presentation_ == S3Presentation::a2b3) return letter_word({{'a', x % 2}, {'b', x / 2}});
      return letter_word({{'a', x % 3}, {'b', x / 3}});
    case GroupKind::q8:
      return std::string(kQ8Tokens[x]);
    case GroupKind::roots: {
      const int q = order_;
      auto power = [](const char* base, int k) {
        if (k == 0) return std::string("1");
        if (k == 1) return std::string(base);
        return std::string(base) + "^" + std::to_string(k);
      };
      if (q % 3 == 0) {
        const int w = q / 3;
        for (int j = 0; j < 3; ++j) {
          if (x == (j * w) % q) return power("w", j);
          if (q % 2 == 0 && x == (j * w + q / 2) % q) return "-" + power("w", j);
        }
        return "z^" + std::to_string(x);
      }
      if (q % 2 == 0 && x >= q / 2) return "-" + power("w", x - q / 2);
      return power("w", x);
    }
  }
  return {};
}

int Group::parse_token(std::string_view token) const {
  if (token.empty()) throw ParseError("empty element token");
  switch (kind_) {
    case GroupKind::cyclic: {
      auto v = parse_uint(token);
      if (!v || *v >= order_)
        throw ParseError("unknown token '" + std::string(token) + "' for " + descriptor());
      return static_cast<int>(*v);
    }
    case GroupKind::product:
    case GroupKind::s3:
      return parse_word(token);
    case GroupKind::q8:
      for (int i = 0; i < 8; ++i)
        if (kQ8Tokens[i] == token) return i;
      throw ParseError("unknown token '" + std::string(token) + "' for q8");
    case GroupKind::roots:
      return parse_root(token);
  }
  return 0;
}

int Group::parse_word(std::string_view token) const {
  const std::string_view letters = kind_ == GroupKind::s3 ? std::string_view("ab")
                                                          : kFactorLetters.substr(0, factors_.size());
  int acc = identity();
  std::size_t pos = 0;
  while (pos < token.size()) {
    const char c = token[pos++];
    std::size_t digits_end = pos;
    while (digits_end < token.size() && token[digits_end] >= '0' && token[digits_end] <= '9') ++digits_end;
    long long exp = 1;
    if (digits_end > pos) exp = *parse_uint(token.substr(pos, digits_end - pos));
    pos = digits_end;
    if (c == 'e') continue;
    const auto letter = letters.find(c);
    if (letter == std::string_view::npos)
      throw ParseError("unknown token '" + std::string(token) + "' for " + descriptor());
    int gen = 0;
    if (kind_ == GroupKind::s3) {
      gen = letter == 0 ? 1 : (presentation_ == S3Presentation::a2b3 ? 2 : 3);
    } else {
      gen = 1;
      for (std::size_t f = 0; f < letter; ++f) gen *= factors_[f];
    }
    // Generator orders are at most 6 here or the factor order for products.
    const long long gen_order = kind_ == GroupKind::s3 ? 6 : factors_[letter];
    for (long long e = 0; e < exp % gen_order; ++e) acc = mul(acc, gen);
  }
  return acc;
}

int Group::parse_root(std::string_view token) const {
  const int q = order_;
  const std::string original(token);
  bool negative = false;
  if (token.front() == '-') {
    negative = true;
    token.remove_prefix(1);
  }
  long long exponent = -1;
  if (token == "1") {
    exponent = 0;
  } else if (!token.empty() && (token.front() == 'w' || token.front() == 'z')) {
    const long long base = token.front() == 'z' ? 1 : (q % 3 == 0 ? q / 3 : 1);
    std::string_view rest = token.substr(1);
    long long k = 1;
    if (!rest.empty()) {
      if (rest.front() != '^') throw ParseError("unknown token '" + original + "' for " + descriptor());
      auto v = parse_uint(rest.substr(1));
      if (!v) throw ParseError("unknown token '" + original + "' for " + descriptor());
      k = *v;
    }
    exponent = (base * (k % q)) % q;
  }
  if (exponent < 0) throw ParseError("unknown token '" + original + "' for " + descriptor());
  if (negative) {
    if (q % 2 != 0)
      throw ParseError("token '" + original + "' needs -1, which is not in " + descriptor());
    exponent = (exponent + q / 2) % q;
  }
  return static_cast<int>(exponent);
}

GroupPtr make_group(std::string_view descriptor) {
  const auto words = split_words(descriptor);
  const std::string text(descriptor);
  if (words.empty()) throw ParseError("empty group descriptor");
  auto number = [&](const std::string& w) {
    auto v = parse_uint(w);
    if (!v || *v > (1 << 24)) throw ParseError("bad group parameter '" + w + "' in '" + text + "'");
    return static_cast<int>(*v);
  };
  const std::string& head = words[0];
  if (head == "cyclic" && words.size() == 2) return Group::cyclic(number(words[1]));
  if (head == "roots" && words.size() == 2) return Group::roots(number(words[1]));
  if (head == "product" && words.size() >= 2) {
    std::vector<int> f;
    for (std::size_t i = 1; i < words.size(); ++i) f.push_back(number(words[i]));
    return Group::product(f);
  }
  if (head == "klein" && words.size() == 1) return Group::product({2, 2});
  if (head == "q8" && words.size() == 1) return Group::q8();
  if (head == "s3" && words.size() <= 2) {
    if (words.size() == 1 || words[1] == "a2b3") return Group::s3(S3Presentation::a2b3);
    if (words[1] == "a3b2") return Group::s3(S3Presentation::a3b2);
    throw ParseError("unknown S3 presentation '" + words[1] + "' (expected a2b3 or a3b2)");
  }
  if (words.size() == 1 && head.size() >= 2 && head[0] == 'z') {
    // zN or zNxzM..
    std::vector<int> f;
    std::string_view rest = head;
    while (!rest.empty()) {
      if (rest.front() != 'z') throw ParseError("unsupported group '" + text + "'");
      rest.remove_prefix(1);
      const auto x = rest.find('x');
      f.push_back(number(std::string(rest.substr(0, x))));
      if (x == std::string_view::npos) break;
      rest.remove_prefix(x + 1);
    }
    return f.size() == 1 ? Group::cyclic(f[0]) : Group::product(f);
  }
  throw ParseError("unsupported group '" + text + "'");
}

bool same_group(const GroupPtr& a, const GroupPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

GroupElement group_op(const GroupElement& g, const GroupElement& h, GroupOp mode) {
  if (!same_group(g.group, h.group))
    throw std::invalid_argument("group_op operands come from different groups: " + g.group->descriptor() +
                                " and " + h.group->descriptor());
  if (mode == GroupOp::inverse) return {g.group, g.group->inv(g.index)};
  return {g.group, g.group->mul(g.index, h.index)};
}

Entry parse_element(std::string_view token, const Group& group) {
  if (token == ".") return Entry::zero();
  if (token == "*") return Entry::wildcard();
  return Entry::element(group.parse_token(token));
}

std::string entry_token(Entry entry, const Group& group) {
  if (entry.is_zero()) return ".";
  if (entry.is_wildcard()) return "*";
  return group.token(entry.index());
}

}  // namespace groupmat
