#include "groupmat/quaternion.hpp"

namespace groupmat {

std::string Quaternion::to_string() const {
  std::string out;
  auto term = [&](std::int64_t c, const char* unit) {
    if (c == 0) return;
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    const auto mag = c < 0 ? -c : c;
    if (*unit == '\0' || mag != 1) out += std::to_string(mag);
    out += unit;
  };
  term(re, "");
  term(i, "i");
  term(j, "j");
  term(k, "k");
  return out.empty() ? "0" : out;
}

}  // namespace groupmat
