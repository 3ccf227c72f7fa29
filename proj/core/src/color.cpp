#include "colorloss/color.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace colorloss {

std::string_view to_string(Color c) noexcept {
  switch (c) {
    case Color::Red: return "red";
    case Color::Blue: return "blue";
    case Color::Green: return "green";
  }
  return "?";
}

Color parse_color(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "red" || lower == "r") return Color::Red;
  if (lower == "blue" || lower == "b") return Color::Blue;
  if (lower == "green" || lower == "g") return Color::Green;
  throw std::invalid_argument("unknown color '" + std::string(text) + "'");
}

}  // namespace colorloss
