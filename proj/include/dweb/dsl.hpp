#pragma once

#include "dweb/web.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dweb {

/// Typed strand end on a row boundary: vectorial, or spin with parity and vertical direction.
enum class Strand : std::uint8_t { v, e_up, e_down, o_up, o_down };

const char *to_string(Strand s);
inline bool strand_is_spin(Strand s) { return s != Strand::v; }
inline bool strand_up(Strand s) { return s == Strand::e_up || s == Strand::o_up; }
EdgeKind strand_kind(Strand s);
/// Same parity, opposite vertical direction.
Strand strand_flip(Strand s);

enum class TileKind : std::uint8_t {
  identity,
  cup,
  cap,
  vertex,       // trivalent vertex, 1->2 or 2->1 strands
  singular,     // 4-valent vectorial vertex
  over,         // regular crossing, SW-NE strand on top
  under,        // regular crossing, SW-NE strand below
  mixed_over,   // spin strand over a vectorial strand
  mixed_under,  // spin strand under a vectorial strand
  smooth_v,     // two vertical vectorial arcs
  smooth_h,     // cap below a cup
  res_h,        // mixed-crossing resolution, vertices left and right
  res_i,        // mixed-crossing resolution, vertices top and bottom
  square,       // four trivalent vertices around a spin square
};

struct Tile {
  TileKind kind = TileKind::identity;
  std::vector<Strand> bottom;
  std::vector<Strand> top;
  /// Square tiles: 1..4 (orientation x parity of the NW/SE sides).
  int variant = 0;
  int line = 0;
  int column = 0;
};

struct Row {
  std::vector<Tile> tiles;
  int line = 0;
  std::vector<Strand> bottom() const;
  std::vector<Strand> top() const;
};

struct SliceProgram {
  std::vector<Row> rows;
};

/// DSL failure with a source location.
struct DslError : std::runtime_error {
  enum class Kind { syntax, type_mismatch, open_boundary, unknown_name };
  Kind kind;
  int line;
  int column;
  DslError(Kind k, int l, int c, const std::string &msg);
};

/// Parses DSL text. Rows are separated by newlines or ';'; '#' starts a comment;
/// a leading "row" keyword is optional.
SliceProgram parse(const std::string &text);
/// Parses without requiring an empty boundary (used for tangles).
SliceProgram parse_tangle(const std::string &text);
/// Canonical DSL text; parse(render(p)) == p up to source positions.
std::string render(const SliceProgram &p);
std::string render_tile(const Tile &t);
/// Builds a tile from its token text; throws DslError.
Tile make_tile(const std::string &token, int line = 0, int column = 0);
bool same_program(const SliceProgram &a, const SliceProgram &b);

/// Crossing node of a diagram and the tile it came from.
struct CrossingRef {
  int vertex = -1;
  int row = -1;
  int index = -1;
};

/// Knotted diagram: laid-out web with crossing vertices plus its source program.
struct Diagram {
  Web web;
  SliceProgram program;
  std::vector<CrossingRef> crossings;
};

/// Lays out a closed, well-typed program on the octant grid and validates the result.
Diagram layout(const SliceProgram &program);
/// Shortcut: layout of a program without crossings.
Web layout_web(const SliceProgram &program);

/// Built-in catalog.
std::vector<std::string> builtin_names();
std::string builtin(const std::string &name);
/// Resolves "builtin:<name>" or returns the text unchanged.
std::string resolve_source(const std::string &uri_or_text);

}  // namespace dweb
