#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dweb {

/// Lattice point; all geometry lives on the integer octant grid.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point &, const Point &) = default;
  friend auto operator<=>(const Point &, const Point &) = default;
};

/// Octant index 0..7 counterclockwise from east, or -1 if the vector is not octant-aligned.
int octant_of(Point from, Point to);
/// Unit step of an octant.
Point octant_step(int d);
/// Signed turn from direction d1 to d2 in eighth-turns, in [-4, 3]; -4 means a reversal.
int turn_between(int d1, int d2);
inline int opposite_octant(int d) { return (d + 4) % 8; }

enum class EdgeKind : std::uint8_t { vectorial, spin_even, spin_odd };
enum class VertexKind : std::uint8_t { trivalent, singular, crossing };
enum class Side : std::uint8_t { left, right };

inline bool is_spin(EdgeKind k) { return k != EdgeKind::vectorial; }
const char *to_string(EdgeKind k);
const char *to_string(VertexKind k);

/// Half-edge id: 2*edge + end, end 0 = tail, 1 = head.
inline int half_edge(int edge, int end) { return 2 * edge + end; }
inline int he_edge(int he) { return he / 2; }
inline int he_end(int he) { return he % 2; }

struct Vertex {
  VertexKind kind = VertexKind::trivalent;
  Point pos;
  /// Incident half-edges in counterclockwise order of departure direction.
  std::vector<int> half_edges;
  /// Crossings only: strands are slot pairs (0,2) and (1,3); over_pair names the upper one.
  int over_pair = 0;
};

struct Edge {
  EdgeKind kind = EdgeKind::vectorial;
  /// Endpoint vertices, or -1 for both on a vertex-less loop.
  int tail = -1;
  int head = -1;
  /// Polyline from tail to head; loops repeat the first point at the end.
  std::vector<Point> poly;
  bool is_loop() const { return tail < 0; }
};

/// Planar embedded (generalized) web, possibly with crossing nodes when used as a diagram.
class Web {
public:
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  int add_vertex(VertexKind kind, Point pos);
  /// Appends an edge; the caller attaches half-edges with attach().
  int add_edge(EdgeKind kind, int tail, int head, std::vector<Point> poly);
  /// Recomputes every vertex's counterclockwise half-edge order from geometry.
  void sort_half_edges();

  /// Departure direction of a half-edge at its vertex.
  int departure(int he) const;
  /// Vertex at which a half-edge sits.
  int he_vertex(int he) const;
  /// Signed internal turning of an edge in eighth-turns along tail->head; loops include the closing corner.
  int edge_turning(int e) const;

  bool has_crossings() const;
  int count_vertices(VertexKind k) const;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
};

/// Structural and geometric validation (local models, spin flow, octant segments, disjointness).
ValidationReport validate(const Web &web);

struct InvalidVertex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Side of the oriented spin through-strand on which the vectorial half-edge lies.
Side which_side(const Web &web, int vertex);
/// The incoming and outgoing spin half-edges and the vectorial half-edge of a trivalent vertex.
struct TrivalentSlots {
  int spin_in = -1;
  int spin_out = -1;
  int vect = -1;
};
TrivalentSlots trivalent_slots(const Web &web, int vertex);

/// Versioned text serialization.
std::string serialize(const Web &web);
Web deserialize(const std::string &text);
/// Serialization translated so the minimum coordinate is the origin.
std::string canonical_key(const Web &web);

/// Disjoint union placed side by side.
Web disjoint_union(const Web &a, const Web &b);

/// Web transforms. Opposite reverses spin orientations; bar swaps spin parities;
/// dual reverses orientations and also swaps parities when N is odd.
Web opposite_web(const Web &web);
Web bar_web(const Web &web);
Web dual_web(const Web &web, int N);

}  // namespace dweb
