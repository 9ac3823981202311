#pragma once

#include "dweb/coloring.hpp"
#include "dweb/web.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace dweb {

/// A singular-vertex configuration with no table entry.
struct TableMiss : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A curve component whose turning is not a whole number of turns.
struct NonClosedTurning : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CycleVariant { natural, prime, star };
enum class BicolorType { first, second };

struct OrientedTraversal {
  int edge = -1;
  bool along = true;  // along the stored tail->head order
  friend bool operator==(const OrientedTraversal &, const OrientedTraversal &) = default;
};

/// Coloring class of a singular vertex, up to rotation.
enum class SingularClass { mono, adjacent_ll, adjacent_rr, adjacent_lr, opposite };

/// Connections at singular vertices where the traversed legs alternate in and out.
/// Each entry is +1 when the two arcs turn left (total +4 eighth-turns), -1 for right.
struct SingularTables {
  // [sign + / -][first / second][vertex pigment is the low / high member of the pair]
  std::array<std::array<std::array<int, 2>, 2>, 2> mono{};
  // second type at LL / RR vertices
  std::array<int, 2> adjacent_second{};
  // first type at LR vertices, [low pigment turns left / high pigment turns left]
  std::array<int, 2> adjacent_lr_first{};
};

/// Tables shipped with the library.
const SingularTables &default_tables();
/// Parses the JSON table format.
SingularTables parse_tables(const std::string &json_text);
std::string tables_to_json(const SingularTables &t);

/// One closed component: its traversals and its total turning in eighth-turns.
struct CurveComponent {
  std::vector<OrientedTraversal> steps;
  int turning = 0;
};

struct CurveSet {
  std::vector<CurveComponent> components;
};

std::vector<OrientedTraversal> colored_cycle(const Web &web, const Coloring &c, int a, CycleVariant variant);

/// Signed traversal direction (+1 along, -1 against, 0 absent) of an edge in a bicolored cycle.
int bicolored_direction(const Web &web, const Coloring &c, int e, int lo, int hi, BicolorType type);

SingularClass singular_class(const Web &web, const Coloring &c, int v);

CurveSet bicolored_cycle(const Web &web, const Coloring &c, int a, int b, BicolorType type,
                         const SingularTables &tables = default_tables());

/// Sum of component turnings over 8; each component must close up.
int rotational(const CurveSet &curves);

/// Degree through explicit curve assembly.
int degree_reference(const Web &web, const Coloring &c, int N, const SingularTables &tables = default_tables());

/// Degree through summed turning contributions of edges and vertex passages.
int degree(const Web &web, const Coloring &c, int N, const SingularTables &tables = default_tables());

/// Precomputed geometry for repeated degree evaluation on one web.
class DegreeContext {
public:
  DegreeContext(const Web &web, int N, const SingularTables &tables = default_tables());
  int degree(const Coloring &c) const;

private:
  const Web &web_;
  int N_;
  const SingularTables &tables_;
  std::vector<int> kappa_;
};

}  // namespace dweb
