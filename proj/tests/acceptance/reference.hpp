#pragma once

// Published reference values the acceptance suite compares against.

#include <array>
#include <string_view>

#include "colorloss/lattice.hpp"

namespace reference {

using colorloss::Color;
using colorloss::Geometry;

struct CoefficientRow {
  long count;
  std::string_view mean_R;
  std::string_view mean_E;
  std::string_view alpha;
};

struct Entry {
  Geometry geometry;
  Color color;
  std::array<CoefficientRow, 3> rows;  // ell = 1, 2, 3
  double r_c;
  double p_c_analytic;
  double p_c_numeric;
  double p_f;
};

inline constexpr CoefficientRow kSingle{1, "5/3", "5/3", "10/3"};
inline constexpr CoefficientRow kPairA{11, "295/99", "-35/99", "-35/9"};
inline constexpr CoefficientRow kPairB{9, "233/81", "-37/81", "-37/9"};

inline constexpr std::array<Entry, 9> kTable{{
    {Geometry::G488, Color::Red, {kSingle, kPairA, {72, "3995/972", "35/972", "140/81"}},
     0.5, 0.1877, 0.2028, 0.46},
    {Geometry::G488, Color::Blue, {kSingle, kPairB, {102, "5749/1377", "95/2754", "190/81"}},
     0.7071, 0.3093, 0.292, 0.48},
    {Geometry::G488, Color::Green, {kSingle, kPairB, {102, "5749/1377", "95/2754", "190/81"}},
     0.7071, 0.3093, 0.292, 0.48},
    {Geometry::G666, Color::Red, {kSingle, kPairA, {122, "14161/3294", "29/1647", "116/81"}},
     0.6527, 0.2752, 0.290, 0.33},
    {Geometry::G666, Color::Blue, {kSingle, kPairA, {122, "14161/3294", "29/1647", "116/81"}},
     0.6527, 0.2752, 0.290, 0.33},
    {Geometry::G666, Color::Green, {kSingle, kPairA, {122, "14161/3294", "29/1647", "116/81"}},
     0.6527, 0.2752, 0.290, 0.33},
    {Geometry::G4612, Color::Red, {kSingle, kPairA, {64, "7057/1728", "1/27", "128/81"}},
     0.4756, 0.1764, 0.165, 0.198},
    {Geometry::G4612, Color::Blue, {kSingle, kPairB, {91, "10214/2457", "89/2457", "178/81"}},
     0.8079, 0.3925, 0.390, 0.438},
    {Geometry::G4612, Color::Green, {kSingle, kPairB, {102, "5749/1377", "95/2754", "190/81"}},
     0.5893, 0.2364, 0.2012, 0.202},
}};

inline const Entry& lookup(Geometry g, Color c) {
  for (const Entry& e : kTable) {
    if (e.geometry == g && e.color == c) return e;
  }
  return kTable[0];
}

}  // namespace reference
