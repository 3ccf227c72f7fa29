#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace colorloss {

/// Face and edge colors of a color-code lattice. The declaration order
/// (Red < Blue < Green) is the iteration order everywhere in the library.
enum class Color : std::uint8_t { Red = 0, Blue = 1, Green = 2 };

inline constexpr std::array<Color, 3> kColors{Color::Red, Color::Blue, Color::Green};

constexpr std::size_t index(Color c) noexcept { return static_cast<std::size_t>(c); }

constexpr Color color_from_index(std::size_t i) noexcept { return static_cast<Color>(i); }

/// The color distinct from both arguments. Requires a != b.
constexpr Color third_color(Color a, Color b) noexcept {
  return color_from_index(3 - index(a) - index(b));
}

std::string_view to_string(Color c) noexcept;

/// Accepts "red", "blue", "green" (case-insensitive) and the initials r/b/g.
/// Throws std::invalid_argument otherwise.
Color parse_color(std::string_view text);

}  // namespace colorloss
