#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

namespace z4z2 {

/// An element of Z4 x Z2.
struct GroupElement {
  std::uint8_t x = 0;  // mod 4
  std::uint8_t y = 0;  // mod 2

  constexpr GroupElement() = default;
  constexpr GroupElement(int x_, int y_)
      : x(static_cast<std::uint8_t>(((x_ % 4) + 4) % 4)), y(static_cast<std::uint8_t>(((y_ % 2) + 2) % 2)) {}

  constexpr bool is_zero() const { return x == 0 && y == 0; }
  /// Dense index in [0, 8): 2x + y.
  constexpr int index() const { return 2 * x + y; }
  static constexpr GroupElement from_index(int i) { return GroupElement(i / 2, i % 2); }

  friend constexpr GroupElement operator+(GroupElement a, GroupElement b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr GroupElement operator-(GroupElement a) { return {-a.x, -a.y}; }
  friend constexpr GroupElement operator-(GroupElement a, GroupElement b) { return a + (-b); }
  friend constexpr bool operator==(GroupElement, GroupElement) = default;
  friend constexpr auto operator<=>(GroupElement a, GroupElement b) { return a.index() <=> b.index(); }
};

inline std::ostream& operator<<(std::ostream& os, GroupElement g) {
  return os << '(' << int(g.x) << ',' << int(g.y) << ')';
}

inline constexpr std::array<GroupElement, 8> all_elements() {
  std::array<GroupElement, 8> out{};
  for (int i = 0; i < 8; ++i) out[static_cast<std::size_t>(i)] = GroupElement::from_index(i);
  return out;
}

inline constexpr std::array<GroupElement, 7> nonzero_elements() {
  std::array<GroupElement, 7> out{};
  for (int i = 1; i < 8; ++i) out[static_cast<std::size_t>(i - 1)] = GroupElement::from_index(i);
  return out;
}

using Block = std::array<GroupElement, 3>;

/// All 3-sets of distinct non-zero elements summing to zero, each sorted.
inline std::vector<Block> zero_sum_blocks() {
  std::vector<Block> out;
  auto nz = nonzero_elements();
  for (std::size_t i = 0; i < nz.size(); ++i)
    for (std::size_t j = i + 1; j < nz.size(); ++j)
      for (std::size_t k = j + 1; k < nz.size(); ++k)
        if ((nz[i] + nz[j] + nz[k]).is_zero()) out.push_back({nz[i], nz[j], nz[k]});
  return out;
}

/// Automorphisms of Z4 x Z2 as lookup tables on element indices.
using Automorphism = std::array<GroupElement, 8>;

inline std::vector<Automorphism> automorphisms() {
  std::vector<Automorphism> out;
  for (GroupElement a : all_elements()) {
    for (GroupElement b : all_elements()) {
      if (!(b + b).is_zero()) continue;  // image of (0,1) must have order dividing 2
      Automorphism phi{};
      std::array<bool, 8> hit{};
      bool bijective = true;
      for (GroupElement g : all_elements()) {
        GroupElement img{};
        for (int t = 0; t < g.x; ++t) img = img + a;
        if (g.y) img = img + b;
        phi[static_cast<std::size_t>(g.index())] = img;
        if (hit[static_cast<std::size_t>(img.index())]) bijective = false;
        hit[static_cast<std::size_t>(img.index())] = true;
      }
      if (bijective) out.push_back(phi);
    }
  }
  return out;
}

}  // namespace z4z2
