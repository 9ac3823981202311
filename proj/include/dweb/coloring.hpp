#pragma once

#include "dweb/web.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace dweb {

/// Pigment bitset: bit a-1 stands for pigment a in {1..N}.
using Color = std::uint32_t;

inline bool has_pigment(Color c, int a) { return (c >> (a - 1)) & 1U; }
inline Color pigment_bit(int a) { return Color{1} << (a - 1); }
/// The single pigment of a one-element color.
int single_pigment(Color c);

/// so(2N)-coloring of a generalized web.
struct Coloring {
  std::vector<Color> color;        // per edge
  std::vector<std::int8_t> orient; // per edge: vectorial +1 along tail->head (poly order for loops), -1 against; spin 0
  std::vector<std::int8_t> sign;   // per vertex: +1/-1 at mono-colored singular vertices, else 0
};

/// Visitor returning false stops the enumeration.
using ColoringVisitor = std::function<bool(const Coloring &)>;

/// Backtracking enumeration of all colorings in a fixed deterministic order.
class ColoringSearch {
public:
  ColoringSearch(const Web &web, int N);

  /// Number of candidate values of the first branching edge (0 for an edgeless web).
  int root_choices() const;
  /// Enumerates the subtree below the given root choices (all when empty).
  void run(const ColoringVisitor &visit, const std::vector<int> &roots = {}) const;

private:
  const Web &web_;
  int N_;
  std::vector<int> order_;
  std::vector<std::vector<int>> incident_;  // per edge: distinct endpoint vertices
  std::vector<std::pair<Color, std::int8_t>> candidates(int e) const;
  friend struct SearchState;
};

void enumerate(const Web &web, int N, const ColoringVisitor &visit);
std::vector<Coloring> enumerate_all(const Web &web, int N);
bool check(const Web &web, int N, const Coloring &c);
std::uint64_t count(const Web &web, int N);

}  // namespace dweb
