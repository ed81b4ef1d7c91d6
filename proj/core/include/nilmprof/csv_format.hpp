#pragma once

#include <charconv>
#include <string>

namespace nilmprof {

// CSV/report formatting for reals: 6 significant digits, '.' decimal point,
// locale-independent. NaN renders as "nan" (used for undefined C).
inline std::string format_real(double value) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

}  // namespace nilmprof
