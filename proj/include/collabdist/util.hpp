#pragma once

#include <string_view>

namespace collabdist {

// Strips ASCII whitespace from both ends. Author labels are compared
// byte-exact after this; no Unicode normalization is attempted.
constexpr std::string_view trim(std::string_view s) noexcept {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

}  // namespace collabdist
