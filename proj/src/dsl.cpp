#include "dweb/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace dweb {

const char *to_string(Strand s) {
  switch (s) {
    case Strand::v: return "v";
    case Strand::e_up: return "e+";
    case Strand::e_down: return "e-";
    case Strand::o_up: return "o+";
    case Strand::o_down: return "o-";
  }
  return "?";
}

EdgeKind strand_kind(Strand s) {
  switch (s) {
    case Strand::v: return EdgeKind::vectorial;
    case Strand::e_up:
    case Strand::e_down: return EdgeKind::spin_even;
    default: return EdgeKind::spin_odd;
  }
}

Strand strand_flip(Strand s) {
  switch (s) {
    case Strand::e_up: return Strand::e_down;
    case Strand::e_down: return Strand::e_up;
    case Strand::o_up: return Strand::o_down;
    case Strand::o_down: return Strand::o_up;
    default: return s;
  }
}

static const char *kind_name(DslError::Kind k) {
  switch (k) {
    case DslError::Kind::syntax: return "SyntaxError";
    case DslError::Kind::type_mismatch: return "TypeMismatch";
    case DslError::Kind::open_boundary: return "OpenBoundary";
    case DslError::Kind::unknown_name: return "UnknownName";
  }
  return "Error";
}

DslError::DslError(Kind k, int l, int c, const std::string &msg)
    : std::runtime_error(std::string(kind_name(k)) + " at " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
      kind(k), line(l), column(c) {}

std::vector<Strand> Row::bottom() const {
  std::vector<Strand> r;
  for (const auto &t : tiles) r.insert(r.end(), t.bottom.begin(), t.bottom.end());
  return r;
}

std::vector<Strand> Row::top() const {
  std::vector<Strand> r;
  for (const auto &t : tiles) r.insert(r.end(), t.top.begin(), t.top.end());
  return r;
}

// ---------------------------------------------------------------------------
// Tile construction and typing

namespace {

bool parse_strand(const std::string &s, Strand &out) {
  static const std::map<std::string, Strand> names = {
      {"v", Strand::v},      {"e+", Strand::e_up},   {"e-", Strand::e_down}, {"o+", Strand::o_up},
      {"o-", Strand::o_down}, {"e↑", Strand::e_up},  {"e↓", Strand::e_down}, {"o↑", Strand::o_up},
      {"o↓", Strand::o_down}};
  auto it = names.find(s);
  if (it == names.end()) return false;
  out = it->second;
  return true;
}

[[noreturn]] void syntax(int line, int col, const std::string &msg) { throw DslError(DslError::Kind::syntax, line, col, msg); }
[[noreturn]] void mistyped(int line, int col, const std::string &msg) {
  throw DslError(DslError::Kind::type_mismatch, line, col, msg);
}

std::vector<Strand> parse_strand_list(const std::string &text, int line, int col) {
  std::vector<Strand> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    Strand s;
    if (!parse_strand(cur, s)) syntax(line, col, "unknown strand type '" + cur + "'");
    out.push_back(s);
    cur.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') flush();
    else cur += ch;
  }
  flush();
  return out;
}

// Flow into the tile interior through a port.
bool flows_in(Strand s, bool at_bottom) { return at_bottom ? strand_up(s) : !strand_up(s); }

void check_vertex(const Tile &t) {
  const auto nb = t.bottom.size(), nt = t.top.size();
  if (nb + nt != 3 || nb == 0 || nt == 0) mistyped(t.line, t.column, "trivalent tile needs 1->2 or 2->1 strands");
  int nv = 0, ne = 0, no = 0, nin = 0;
  auto take = [&](Strand s, bool bottom) {
    switch (strand_kind(s)) {
      case EdgeKind::vectorial: ++nv; return;
      case EdgeKind::spin_even: ++ne; break;
      case EdgeKind::spin_odd: ++no; break;
    }
    if (flows_in(s, bottom)) ++nin;
  };
  for (auto s : t.bottom) take(s, true);
  for (auto s : t.top) take(s, false);
  if (nv != 1 || ne != 1 || no != 1) mistyped(t.line, t.column, "trivalent tile needs one strand of each kind");
  if (nin != 1) mistyped(t.line, t.column, "trivalent tile needs one spin strand in and one out");
}

void check_mixed(const Tile &t) {
  if (t.bottom.size() != 2 || t.top.size() != 2) mistyped(t.line, t.column, "mixed tile needs 2->2 strands");
  if (t.bottom[0] != t.top[1] || t.bottom[1] != t.top[0])
    mistyped(t.line, t.column, "mixed tile strands must keep their type across the crossing");
  const bool s0 = strand_is_spin(t.bottom[0]), s1 = strand_is_spin(t.bottom[1]);
  if (s0 == s1) mistyped(t.line, t.column, "mixed tile needs one vectorial and one spin strand");
}

bool cup_pair_ok(Strand a, Strand b) {
  if (a == Strand::v || b == Strand::v) return a == b;
  return strand_flip(a) == b;
}

}  // namespace

Tile make_tile(const std::string &token, int line, int column) {
  Tile t;
  t.line = line;
  t.column = column;
  std::string name = token, args;
  bool has_args = false;
  if (auto p = token.find('('); p != std::string::npos) {
    if (token.back() != ')') syntax(line, column, "unterminated argument list in '" + token + "'");
    name = token.substr(0, p);
    args = token.substr(p + 1, token.size() - p - 2);
    has_args = true;
  }
  std::vector<Strand> bot, top;
  if (has_args) {
    auto bar_pos = args.find('|');
    if (bar_pos == std::string::npos) {
      bot = parse_strand_list(args, line, column);
    } else {
      bot = parse_strand_list(args.substr(0, bar_pos), line, column);
      top = parse_strand_list(args.substr(bar_pos + 1), line, column);
    }
  }
  auto no_args = [&] {
    if (has_args) syntax(line, column, "tile '" + name + "' takes no arguments");
  };
  auto vv = std::vector<Strand>{Strand::v, Strand::v};

  Strand s;
  std::string ident = name.rfind("id_", 0) == 0 ? name.substr(3) : name;
  if (!has_args && parse_strand(ident, s)) {
    t.kind = TileKind::identity;
    t.bottom = t.top = {s};
    return t;
  }
  if (name == "cup_v" || name == "cap_v") {
    no_args();
    t.kind = name == "cup_v" ? TileKind::cup : TileKind::cap;
    (t.kind == TileKind::cup ? t.top : t.bottom) = vv;
    return t;
  }
  if (name == "cup" || name == "cap") {
    if (!has_args || bot.size() != 2 || !top.empty()) syntax(line, column, name + " expects two strand types");
    if (!cup_pair_ok(bot[0], bot[1])) mistyped(line, column, name + " joins incompatible strands");
    t.kind = name == "cup" ? TileKind::cup : TileKind::cap;
    (t.kind == TileKind::cup ? t.top : t.bottom) = bot;
    return t;
  }
  if (name == "Y" || name == "mover" || name == "munder" || name == "H" || name == "I") {
    if (!has_args) syntax(line, column, name + " expects '(bottom | top)'");
    t.bottom = bot;
    t.top = top;
    if (name == "Y") {
      t.kind = TileKind::vertex;
      check_vertex(t);
    } else {
      t.kind = name == "mover" ? TileKind::mixed_over : name == "munder" ? TileKind::mixed_under
               : name == "H"   ? TileKind::res_h
                               : TileKind::res_i;
      check_mixed(t);
    }
    return t;
  }
  static const std::map<std::string, TileKind> plain = {{"sing", TileKind::singular},  {"over", TileKind::over},
                                                        {"under", TileKind::under},    {"smooth_v", TileKind::smooth_v},
                                                        {"smooth_h", TileKind::smooth_h}};
  if (auto it = plain.find(name); it != plain.end()) {
    no_args();
    t.kind = it->second;
    t.bottom = t.top = vv;
    return t;
  }
  if (name.size() == 7 && name.rfind("square", 0) == 0 && name[6] >= '1' && name[6] <= '4') {
    no_args();
    t.kind = TileKind::square;
    t.variant = name[6] - '0';
    t.bottom = t.top = vv;
    return t;
  }
  syntax(line, column, "unknown tile '" + token + "'");
}

static std::string strand_list(const std::vector<Strand> &v) {
  std::string r;
  for (std::size_t i = 0; i < v.size(); ++i) r += (i ? " " : "") + std::string(to_string(v[i]));
  return r;
}

std::string render_tile(const Tile &t) {
  auto sig = [&] { return "(" + strand_list(t.bottom) + " | " + strand_list(t.top) + ")"; };
  switch (t.kind) {
    case TileKind::identity: return to_string(t.bottom[0]);
    case TileKind::cup: return t.top[0] == Strand::v ? "cup_v" : "cup(" + strand_list(t.top) + ")";
    case TileKind::cap: return t.bottom[0] == Strand::v ? "cap_v" : "cap(" + strand_list(t.bottom) + ")";
    case TileKind::vertex: return "Y" + sig();
    case TileKind::singular: return "sing";
    case TileKind::over: return "over";
    case TileKind::under: return "under";
    case TileKind::mixed_over: return "mover" + sig();
    case TileKind::mixed_under: return "munder" + sig();
    case TileKind::smooth_v: return "smooth_v";
    case TileKind::smooth_h: return "smooth_h";
    case TileKind::res_h: return "H" + sig();
    case TileKind::res_i: return "I" + sig();
    case TileKind::square: return "square" + std::to_string(t.variant);
  }
  return "?";
}

std::string render(const SliceProgram &p) {
  std::string out;
  for (const auto &r : p.rows) {
    out += "row";
    for (const auto &t : r.tiles) out += " " + render_tile(t);
    out += "\n";
  }
  return out;
}

bool same_program(const SliceProgram &a, const SliceProgram &b) { return render(a) == render(b); }

// ---------------------------------------------------------------------------
// Parsing

static SliceProgram parse_impl(const std::string &text, bool closed) {
  SliceProgram prog;
  int line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i <= n) {
    // Collect one row: up to newline or ';'.
    std::size_t j = i;
    while (j < n && text[j] != '\n' && text[j] != ';' && text[j] != '#') ++j;
    std::size_t row_end = j;
    bool comment = j < n && text[j] == '#';
    std::size_t next = j;
    if (comment)
      while (next < n && text[next] != '\n') ++next;
    // Tokenize [i, row_end).
    Row row;
    row.line = line;
    std::size_t k = i;
    bool first = true;
    int line_start_col_base = 0;
    {
      std::size_t ls = i;
      while (ls > 0 && text[ls - 1] != '\n') --ls;
      line_start_col_base = static_cast<int>(ls);
    }
    while (k < row_end) {
      while (k < row_end && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      if (k >= row_end) break;
      std::size_t start = k;
      int depth = 0;
      while (k < row_end) {
        char ch = text[k];
        if (ch == '(') ++depth;
        else if (ch == ')') --depth;
        else if (depth == 0 && std::isspace(static_cast<unsigned char>(ch))) break;
        ++k;
      }
      std::string tok = text.substr(start, k - start);
      const int col = static_cast<int>(start) - line_start_col_base + 1;
      if (depth != 0) syntax(line, col, "unbalanced parentheses in '" + tok + "'");
      if (first && tok == "row") {
        first = false;
        continue;
      }
      first = false;
      row.tiles.push_back(make_tile(tok, line, col));
    }
    if (!row.tiles.empty()) prog.rows.push_back(std::move(row));
    if (next >= n) break;
    if (text[next] == '\n') ++line;
    i = next + 1;
  }
  for (std::size_t r = 1; r < prog.rows.size(); ++r) {
    const auto below = prog.rows[r - 1].top(), above = prog.rows[r].bottom();
    if (below != above)
      mistyped(prog.rows[r].line, 1,
               "row expects [" + strand_list(above) + "] but the row below provides [" + strand_list(below) + "]");
  }
  if (closed && !prog.rows.empty()) {
    if (!prog.rows.front().bottom().empty())
      throw DslError(DslError::Kind::open_boundary, prog.rows.front().line, 1, "bottom boundary is not empty");
    if (!prog.rows.back().top().empty())
      throw DslError(DslError::Kind::open_boundary, prog.rows.back().line, 1, "top boundary is not empty");
  }
  return prog;
}

SliceProgram parse(const std::string &text) { return parse_impl(text, true); }
SliceProgram parse_tangle(const std::string &text) { return parse_impl(text, false); }

// ---------------------------------------------------------------------------
// Tile geometry

namespace {

enum class AnchorType { bottom, top, vertex };
struct Anchor {
  AnchorType type;
  int index;
};

struct LocalPiece {
  EdgeKind kind;
  std::vector<Point> pts;
  Anchor a, b;     // anchors of pts.front() and pts.back()
  int orient = 0;  // spin flow: +1 front->back, -1 back->front
};

struct LocalGeom {
  std::int64_t width = 0, height = 0;
  std::vector<std::int64_t> bottom_x, top_x;
  std::vector<std::pair<VertexKind, Point>> verts;
  std::vector<LocalPiece> pieces;
  std::vector<int> over_pieces;  // crossings: the two pieces of the upper strand
};

Anchor B(int i) { return {AnchorType::bottom, i}; }
Anchor T(int i) { return {AnchorType::top, i}; }
Anchor V(int i) { return {AnchorType::vertex, i}; }

void flip_y(LocalGeom &g) {
  for (auto &[k, p] : g.verts) p.y = g.height - p.y;
  for (auto &pc : g.pieces) {
    for (auto &p : pc.pts) p.y = g.height - p.y;
    for (Anchor *a : {&pc.a, &pc.b}) {
      if (a->type == AnchorType::bottom) a->type = AnchorType::top;
      else if (a->type == AnchorType::top) a->type = AnchorType::bottom;
    }
  }
  std::swap(g.bottom_x, g.top_x);
}

// Orientation of a spin piece from one of its port anchors.
void orient_from_ports(LocalPiece &pc, const Tile &t) {
  if (!is_spin(pc.kind) || pc.orient != 0) return;
  auto port_flow = [&](const Anchor &a, bool is_front) -> int {
    if (a.type == AnchorType::vertex) return 0;
    const bool bottom = a.type == AnchorType::bottom;
    const Strand s = bottom ? t.bottom[a.index] : t.top[a.index];
    const bool in = flows_in(s, bottom);
    // Flow enters at this end: it moves away from it.
    return (in == is_front) ? +1 : -1;
  };
  int o = port_flow(pc.a, true);
  if (o == 0) o = port_flow(pc.b, false);
  pc.orient = o;
}

LocalGeom geom_identity(const Tile &t) {
  LocalGeom g;
  g.width = 0;
  g.height = 8;
  g.bottom_x = {0};
  g.top_x = {0};
  g.pieces.push_back({strand_kind(t.bottom[0]), {{0, 0}, {0, 8}}, B(0), T(0)});
  return g;
}

LocalGeom geom_cup(const Tile &t) {
  LocalGeom g;
  g.width = 8;
  g.height = 8;
  g.top_x = {0, 8};
  g.pieces.push_back({strand_kind(t.top[0]), {{0, 8}, {0, 3}, {2, 1}, {6, 1}, {8, 3}, {8, 8}}, T(0), T(1)});
  return g;
}

LocalGeom geom_cap(const Tile &t) {
  LocalGeom g;
  g.width = 8;
  g.height = 8;
  g.bottom_x = {0, 8};
  g.pieces.push_back({strand_kind(t.bottom[0]), {{0, 0}, {0, 5}, {2, 7}, {6, 7}, {8, 5}, {8, 0}}, B(0), B(1)});
  return g;
}

// Trivalent vertex drawn as a 1->2 split; 2->1 tiles are its vertical mirror.
LocalGeom geom_vertex(const Tile &t) {
  const bool merge = t.bottom.size() == 2;
  const auto &single = merge ? t.top : t.bottom;
  const auto &pair = merge ? t.bottom : t.top;
  LocalGeom g;
  g.width = 8;
  g.height = 8;
  g.verts.push_back({VertexKind::trivalent, {4, 4}});
  // Anchors as seen in the 1->2 picture; remapped by flip_y for merges.
  const Anchor one = B(0), left = T(0), right = T(1);
  auto kind_one = strand_kind(single[0]), kind_l = strand_kind(pair[0]), kind_r = strand_kind(pair[1]);
  if (kind_one == EdgeKind::vectorial) {
    g.bottom_x = {4};
    g.top_x = {0, 8};
    g.pieces.push_back({kind_l, {{0, 8}, {0, 6}, {2, 4}, {4, 4}}, left, V(0)});
    g.pieces.push_back({kind_r, {{4, 4}, {6, 4}, {8, 6}, {8, 8}}, V(0), right});
    g.pieces.push_back({kind_one, {{4, 4}, {4, 0}}, V(0), one});
  } else if (kind_l == EdgeKind::vectorial) {
    g.bottom_x = {4};
    g.top_x = {0, 6};
    g.pieces.push_back({kind_one, {{4, 0}, {4, 4}}, one, V(0)});
    g.pieces.push_back({kind_r, {{4, 4}, {4, 6}, {6, 8}}, V(0), right});
    g.pieces.push_back({kind_l, {{4, 4}, {2, 4}, {0, 6}, {0, 8}}, V(0), left});
  } else {
    g.bottom_x = {4};
    g.top_x = {2, 8};
    g.pieces.push_back({kind_one, {{4, 0}, {4, 4}}, one, V(0)});
    g.pieces.push_back({kind_l, {{4, 4}, {4, 6}, {2, 8}}, V(0), left});
    g.pieces.push_back({kind_r, {{4, 4}, {6, 4}, {8, 6}, {8, 8}}, V(0), right});
  }
  if (merge) flip_y(g);
  return g;
}

LocalGeom geom_singular() {
  LocalGeom g;
  g.width = 8;
  g.height = 8;
  g.bottom_x = {0, 6};
  g.top_x = {2, 8};
  g.verts.push_back({VertexKind::singular, {4, 4}});
  const auto v = EdgeKind::vectorial;
  g.pieces.push_back({v, {{4, 4}, {6, 4}, {8, 6}, {8, 8}}, V(0), T(1)});
  g.pieces.push_back({v, {{4, 4}, {4, 6}, {2, 8}}, V(0), T(0)});
  g.pieces.push_back({v, {{4, 4}, {2, 4}, {0, 2}, {0, 0}}, V(0), B(0)});
  g.pieces.push_back({v, {{4, 4}, {4, 2}, {6, 0}}, V(0), B(1)});
  return g;
}

// Straight diagonal crossing; pieces 0,2 form the SW-NE strand and 1,3 the SE-NW strand.
LocalGeom geom_crossing(const Tile &t, bool sw_ne_over) {
  LocalGeom g;
  g.width = 8;
  g.height = 8;
  g.bottom_x = {0, 8};
  g.top_x = {0, 8};
  g.verts.push_back({VertexKind::crossing, {4, 4}});
  g.pieces.push_back({strand_kind(t.bottom[0]), {{4, 4}, {0, 0}}, V(0), B(0)});
  g.pieces.push_back({strand_kind(t.bottom[1]), {{4, 4}, {8, 0}}, V(0), B(1)});
  g.pieces.push_back({strand_kind(t.top[1]), {{4, 4}, {8, 8}}, V(0), T(1)});
  g.pieces.push_back({strand_kind(t.top[0]), {{4, 4}, {0, 8}}, V(0), T(0)});
  g.over_pieces = sw_ne_over ? std::vector<int>{0, 2} : std::vector<int>{1, 3};
  return g;
}

LocalGeom geom_smooth(bool vertical) {
  LocalGeom g;
  g.width = 8;
  g.height = 8;
  g.bottom_x = {0, 8};
  g.top_x = {0, 8};
  const auto v = EdgeKind::vectorial;
  if (vertical) {
    g.pieces.push_back({v, {{0, 0}, {0, 8}}, B(0), T(0)});
    g.pieces.push_back({v, {{8, 0}, {8, 8}}, B(1), T(1)});
  } else {
    g.pieces.push_back({v, {{0, 0}, {0, 1}, {1, 2}, {7, 2}, {8, 1}, {8, 0}}, B(0), B(1)});
    g.pieces.push_back({v, {{0, 8}, {0, 7}, {1, 6}, {7, 6}, {8, 7}, {8, 8}}, T(0), T(1)});
  }
  return g;
}

EdgeKind other_parity(EdgeKind k) { return k == EdgeKind::spin_even ? EdgeKind::spin_odd : EdgeKind::spin_even; }

// Resolutions of a mixed crossing. Strands run BL-TR and BR-TL.
LocalGeom geom_resolution(const Tile &t, bool h_shape) {
  LocalGeom g;
  g.width = 8;
  g.height = 8;
  const bool spin_bl_tr = strand_is_spin(t.bottom[0]);
  const EdgeKind sk = strand_kind(spin_bl_tr ? t.bottom[0] : t.bottom[1]);
  const EdgeKind vk = EdgeKind::vectorial;
  // Spin flows in at the bottom end iff it points up.
  const Strand spin_strand = spin_bl_tr ? t.bottom[0] : t.bottom[1];
  const bool flows_up = strand_up(spin_strand);
  if (h_shape) {
    g.bottom_x = {0, 8};
    g.top_x = {0, 8};
    g.verts.push_back({VertexKind::trivalent, {2, 4}});  // l: BL and TL
    g.verts.push_back({VertexKind::trivalent, {6, 4}});  // r: BR and TR
    if (spin_bl_tr) {
      g.pieces.push_back({sk, {{2, 4}, {1, 4}, {0, 3}, {0, 0}}, V(0), B(0)});
      g.pieces.push_back({vk, {{2, 4}, {2, 6}, {0, 8}}, V(0), T(0)});
      g.pieces.push_back({sk, {{6, 4}, {7, 4}, {8, 5}, {8, 8}}, V(1), T(1)});
      g.pieces.push_back({vk, {{6, 4}, {6, 2}, {8, 0}}, V(1), B(1)});
    } else {
      g.pieces.push_back({sk, {{2, 4}, {1, 4}, {0, 5}, {0, 8}}, V(0), T(0)});
      g.pieces.push_back({vk, {{2, 4}, {2, 2}, {0, 0}}, V(0), B(0)});
      g.pieces.push_back({sk, {{6, 4}, {7, 4}, {8, 3}, {8, 0}}, V(1), B(1)});
      g.pieces.push_back({vk, {{6, 4}, {6, 6}, {8, 8}}, V(1), T(1)});
    }
    // Middle edge flows from the vertex holding the incoming spin end.
    const bool l_upstream = spin_bl_tr ? flows_up : !flows_up;
    LocalPiece mid{other_parity(sk), {{2, 4}, {6, 4}}, V(0), V(1), l_upstream ? +1 : -1};
    g.pieces.push_back(mid);
  } else {
    g.verts.push_back({VertexKind::trivalent, {4, 6}});  // t: TL and TR
    g.verts.push_back({VertexKind::trivalent, {4, 2}});  // b: BL and BR
    if (!spin_bl_tr) {
      // Spin on BR-TL.
      g.top_x = {3, 8};
      g.bottom_x = {0, 5};
      g.pieces.push_back({sk, {{4, 6}, {4, 7}, {3, 8}}, V(0), T(0)});
      g.pieces.push_back({vk, {{4, 6}, {6, 6}, {8, 8}}, V(0), T(1)});
      g.pieces.push_back({sk, {{4, 2}, {4, 1}, {5, 0}}, V(1), B(1)});
      g.pieces.push_back({vk, {{4, 2}, {2, 2}, {0, 0}}, V(1), B(0)});
    } else {
      g.top_x = {0, 5};
      g.bottom_x = {3, 8};
      g.pieces.push_back({sk, {{4, 6}, {4, 7}, {5, 8}}, V(0), T(1)});
      g.pieces.push_back({vk, {{4, 6}, {2, 6}, {0, 8}}, V(0), T(0)});
      g.pieces.push_back({sk, {{4, 2}, {4, 1}, {3, 0}}, V(1), B(0)});
      g.pieces.push_back({vk, {{4, 2}, {6, 2}, {8, 0}}, V(1), B(1)});
    }
    // Upstream is the bottom vertex when the spin points up.
    LocalPiece mid{other_parity(sk), {{4, 2}, {4, 6}}, V(1), V(0), flows_up ? +1 : -1};
    g.pieces.push_back(mid);
  }
  return g;
}

LocalGeom geom_square(int variant) {
  LocalGeom g;
  g.width = 16;
  g.height = 16;
  g.bottom_x = {0, 11};
  g.top_x = {5, 16};
  // Vertices: top, right, bottom, left.
  g.verts.push_back({VertexKind::trivalent, {8, 12}});
  g.verts.push_back({VertexKind::trivalent, {12, 8}});
  g.verts.push_back({VertexKind::trivalent, {8, 4}});
  g.verts.push_back({VertexKind::trivalent, {4, 8}});
  const bool ccw = variant <= 2;
  const bool nw_even = variant % 2 == 1;
  const EdgeKind a = nw_even ? EdgeKind::spin_even : EdgeKind::spin_odd;
  const EdgeKind b = other_parity(a);
  const int o = ccw ? +1 : -1;
  // Ring pieces drawn counterclockwise: top->left->bottom->right->top.
  g.pieces.push_back({a, {{8, 12}, {6, 12}, {4, 10}, {4, 8}}, V(0), V(3), o});
  g.pieces.push_back({b, {{4, 8}, {4, 6}, {6, 4}, {8, 4}}, V(3), V(2), o});
  g.pieces.push_back({a, {{8, 4}, {10, 4}, {12, 6}, {12, 8}}, V(2), V(1), o});
  g.pieces.push_back({b, {{12, 8}, {12, 10}, {10, 12}, {8, 12}}, V(1), V(0), o});
  const auto v = EdgeKind::vectorial;
  g.pieces.push_back({v, {{8, 12}, {8, 13}, {5, 16}}, V(0), T(0)});
  g.pieces.push_back({v, {{12, 8}, {13, 8}, {16, 11}, {16, 16}}, V(1), T(1)});
  g.pieces.push_back({v, {{8, 4}, {8, 3}, {11, 0}}, V(2), B(1)});
  g.pieces.push_back({v, {{4, 8}, {3, 8}, {0, 5}, {0, 0}}, V(3), B(0)});
  return g;
}

LocalGeom tile_geometry(const Tile &t) {
  LocalGeom g;
  switch (t.kind) {
    case TileKind::identity: g = geom_identity(t); break;
    case TileKind::cup: g = geom_cup(t); break;
    case TileKind::cap: g = geom_cap(t); break;
    case TileKind::vertex: g = geom_vertex(t); break;
    case TileKind::singular: g = geom_singular(); break;
    case TileKind::over: g = geom_crossing(t, true); break;
    case TileKind::under: g = geom_crossing(t, false); break;
    case TileKind::mixed_over:
    case TileKind::mixed_under: {
      const bool spin_sw_ne = strand_is_spin(t.bottom[0]);
      const bool spin_over = t.kind == TileKind::mixed_over;
      g = geom_crossing(t, spin_sw_ne == spin_over);
      break;
    }
    case TileKind::smooth_v: g = geom_smooth(true); break;
    case TileKind::smooth_h: g = geom_smooth(false); break;
    case TileKind::res_h: g = geom_resolution(t, true); break;
    case TileKind::res_i: g = geom_resolution(t, false); break;
    case TileKind::square: g = geom_square(t.variant); break;
  }
  for (auto &pc : g.pieces) orient_from_ports(pc, t);
  return g;
}

// ---------------------------------------------------------------------------
// Global assembly

struct GPiece {
  EdgeKind kind;
  std::vector<Point> pts;
  long long ka, kb;  // node keys of the two ends
  int orient;
};

// Node keys: vertices are >= 0; joints are negative.
long long joint_key(int boundary, int strand, int side) { return -1 - (static_cast<long long>(boundary) * 4096 + strand) * 2 - side; }

std::vector<Point> simplify(std::vector<Point> pts, bool closed) {
  // Drops repeated points and interior points on straight runs.
  std::vector<Point> out;
  for (const auto &p : pts)
    if (out.empty() || out.back() != p) out.push_back(p);
  bool changed = true;
  while (changed && out.size() >= 3) {
    changed = false;
    std::vector<Point> r{out[0]};
    for (std::size_t i = 1; i + 1 < out.size(); ++i) {
      if (octant_of(r.back(), out[i]) == octant_of(out[i], out[i + 1])) {
        changed = true;
        continue;
      }
      r.push_back(out[i]);
    }
    r.push_back(out.back());
    out = std::move(r);
  }
  if (closed && out.size() >= 4) {
    // Rotate the start to a corner so the closing joint is not a straight run.
    const std::size_t m = out.size() - 1;  // distinct points
    std::vector<Point> ring(out.begin(), out.begin() + static_cast<long>(m));
    std::vector<Point> corners;
    for (std::size_t i = 0; i < m; ++i) {
      const Point prev = ring[(i + m - 1) % m], cur = ring[i], nxt = ring[(i + 1) % m];
      if (octant_of(prev, cur) != octant_of(cur, nxt)) corners.push_back(cur);
    }
    out = corners;
    out.push_back(corners.front());
  }
  return out;
}

}  // namespace

Diagram layout(const SliceProgram &program) {
  Diagram d;
  d.program = program;
  Web &w = d.web;
  const int R = static_cast<int>(program.rows.size());
  std::vector<GPiece> pieces;
  struct OverInfo {
    int vertex;
    std::vector<int> gpieces;
  };
  std::vector<OverInfo> overs;

  std::vector<std::vector<std::int64_t>> top_x(R), bot_x(R);
  std::vector<std::int64_t> base(R), height(R);
  std::int64_t y = 0;
  for (int r = 0; r < R; ++r) {
    const auto &row = program.rows[r];
    std::vector<LocalGeom> geoms;
    std::int64_t h = 0;
    for (const auto &t : row.tiles) {
      geoms.push_back(tile_geometry(t));
      h = std::max(h, geoms.back().height);
    }
    height[r] = h;
    if (r > 0) {
      std::int64_t shift = 0;
      // Bottom ports of this row are only known after placement; compute placement first.
      (void)shift;
    }
    // Horizontal placement.
    std::vector<std::int64_t> xoff;
    std::int64_t x = 0;
    for (const auto &g : geoms) {
      xoff.push_back(x);
      x += g.width + 4;
    }
    for (std::size_t i = 0; i < geoms.size(); ++i) {
      for (auto bx : geoms[i].bottom_x) bot_x[r].push_back(xoff[i] + bx);
      for (auto tx : geoms[i].top_x) top_x[r].push_back(xoff[i] + tx);
    }
    if (r > 0) {
      std::int64_t band = 2;
      for (std::size_t k = 0; k < bot_x[r].size(); ++k) band = std::max(band, std::abs(bot_x[r][k] - top_x[r - 1][k]));
      y = base[r - 1] + height[r - 1] + band;
    }
    base[r] = y;
    // Instantiate tiles.
    int bottom_counter = 0, top_counter = 0;
    for (std::size_t i = 0; i < geoms.size(); ++i) {
      const auto &g = geoms[i];
      const auto &tile = row.tiles[i];
      std::vector<int> vid;
      for (const auto &[kind, p] : g.verts) {
        vid.push_back(w.add_vertex(kind, {xoff[i] + p.x, y + p.y}));
        if (kind == VertexKind::crossing) d.crossings.push_back({vid.back(), r, static_cast<int>(i)});
      }
      std::vector<int> local_to_global;
      for (const auto &pc : g.pieces) {
        GPiece gp;
        gp.kind = pc.kind;
        gp.orient = pc.orient;
        for (const auto &p : pc.pts) gp.pts.push_back({xoff[i] + p.x, y + p.y});
        auto key = [&](const Anchor &a, bool front) -> long long {
          switch (a.type) {
            case AnchorType::vertex: return vid[a.index];
            case AnchorType::bottom: return joint_key(r, bottom_counter + a.index, 1);
            case AnchorType::top: {
              // Extend short tiles to the row height.
              if (g.height < h) {
                Point ext{xoff[i] + g.top_x[a.index], y + h};
                if (front) gp.pts.insert(gp.pts.begin(), ext);
                else gp.pts.push_back(ext);
              }
              return joint_key(r + 1, top_counter + a.index, 0);
            }
          }
          return 0;
        };
        gp.ka = key(pc.a, true);
        gp.kb = key(pc.b, false);
        local_to_global.push_back(static_cast<int>(pieces.size()));
        pieces.push_back(std::move(gp));
      }
      if (!g.over_pieces.empty()) {
        std::vector<int> gps;
        for (int lp : g.over_pieces) gps.push_back(local_to_global[lp]);
        overs.push_back({vid[0], gps});
      }
      bottom_counter += static_cast<int>(tile.bottom.size());
      top_counter += static_cast<int>(tile.top.size());
    }
  }
  // Transition pieces between consecutive rows.
  for (int r = 1; r < R; ++r) {
    const std::int64_t y0 = base[r - 1] + height[r - 1], y1 = base[r];
    for (std::size_t k = 0; k < bot_x[r].size(); ++k) {
      const std::int64_t x0 = top_x[r - 1][k], x1 = bot_x[r][k];
      const std::int64_t dx = x1 - x0;
      GPiece gp;
      gp.pts.push_back({x0, y0});
      if (dx != 0) gp.pts.push_back({x1, y0 + std::abs(dx)});
      if (gp.pts.back().y != y1) gp.pts.push_back({x1, y1});
      gp.ka = joint_key(r, static_cast<int>(k), 0);
      gp.kb = joint_key(r, static_cast<int>(k), 1);
      const Strand s = program.rows[r].bottom()[k];
      gp.kind = strand_kind(s);
      gp.orient = strand_is_spin(s) ? (strand_up(s) ? +1 : -1) : 0;
      pieces.push_back(std::move(gp));
    }
  }
  // Tile pieces anchored at top ports use joint key side 0 of boundary r+1; transition pieces
  // start there. Bottom anchors use side 1 of boundary r; transitions end there.

  // Chain tracing.
  std::map<long long, std::vector<std::pair<int, int>>> at;  // key -> (piece, end)
  for (int p = 0; p < static_cast<int>(pieces.size()); ++p) {
    at[pieces[p].ka].push_back({p, 0});
    at[pieces[p].kb].push_back({p, 1});
  }
  std::vector<bool> used(pieces.size(), false);
  std::map<int, int> piece_edge;  // piece -> edge id
  auto trace = [&](int p0, int end0, std::vector<int> &chain_pieces, long long &end_key, int &flow) {
    std::vector<Point> pts;
    int p = p0, from_end = end0;
    flow = 0;
    bool first = true;
    while (true) {
      used[p] = true;
      chain_pieces.push_back(p);
      const auto &pc = pieces[p];
      std::vector<Point> seg = pc.pts;
      int o = pc.orient;
      if (from_end == 1) {
        std::reverse(seg.begin(), seg.end());
        o = -o;
      }
      if (o != 0) {
        if (flow != 0 && flow != o) throw std::logic_error("layout: inconsistent spin orientation along a strand");
        flow = o;
      }
      if (!first) seg.erase(seg.begin());
      first = false;
      pts.insert(pts.end(), seg.begin(), seg.end());
      const long long k = from_end == 0 ? pc.kb : pc.ka;
      if (k >= 0) {
        end_key = k;
        break;
      }
      // Joint: continue with the other piece there.
      const auto &lst = at[k];
      int np = -1, nend = -1;
      for (auto [q, qe] : lst)
        if (!(q == p && qe == (from_end == 0 ? 1 : 0))) {
          np = q;
          nend = qe;
        }
      if (np < 0) throw std::logic_error("layout: dangling joint");
      if (np == p0 && used[np]) {
        end_key = k;
        break;
      }
      p = np;
      from_end = nend;
    }
    return pts;
  };
  std::map<std::pair<int, int>, int> piece_end_to_he;
  for (int v = 0; v < static_cast<int>(w.vertices.size()); ++v) {
    for (auto [p, pe] : at[v]) {
      if (used[p]) continue;
      std::vector<int> chain;
      long long end_key = 0;
      int flow = 0;
      auto pts = trace(p, pe, chain, end_key, flow);
      const int last = chain.back();
      // End of the last piece that touches end_key.
      int last_end = (pieces[last].kb == end_key) ? 1 : 0;
      if (pieces[last].ka == end_key && pieces[last].kb == end_key) last_end = (chain.size() == 1 && pe == 0) ? 1 : 0;
      int tail = v, head = static_cast<int>(end_key);
      const EdgeKind kind = pieces[p].kind;
      bool reversed = false;
      if (is_spin(kind) && flow < 0) {
        std::reverse(pts.begin(), pts.end());
        std::swap(tail, head);
        reversed = true;
      }
      const int e = static_cast<int>(w.edges.size());
      w.edges.push_back(Edge{kind, tail, head, simplify(pts, false)});
      w.vertices[tail].half_edges.push_back(half_edge(e, 0));
      w.vertices[head].half_edges.push_back(half_edge(e, 1));
      piece_end_to_he[{p, pe}] = half_edge(e, reversed ? 1 : 0);
      piece_end_to_he[{last, last_end}] = half_edge(e, reversed ? 0 : 1);
      for (int c : chain) piece_edge[c] = e;
    }
  }
  for (int p = 0; p < static_cast<int>(pieces.size()); ++p) {
    if (used[p]) continue;
    std::vector<int> chain;
    long long end_key = 0;
    int flow = 0;
    auto pts = trace(p, 0, chain, end_key, flow);
    if (is_spin(pieces[p].kind) && flow < 0) std::reverse(pts.begin(), pts.end());
    w.edges.push_back(Edge{pieces[p].kind, -1, -1, simplify(pts, true)});
  }
  w.sort_half_edges();
  for (const auto &ov : overs) {
    const auto &hs = w.vertices[ov.vertex].half_edges;
    int slot = -1;
    for (int k = 0; k < 4; ++k) {
      const int e = he_edge(hs[k]);
      if (piece_edge.count(ov.gpieces[0]) && piece_edge[ov.gpieces[0]] == e) {
        // An edge may meet the crossing twice (a kink); match the geometric end instead.
        const auto &pc = pieces[ov.gpieces[0]];
        const Point dir_pt = pc.pts.size() > 1 ? pc.pts[1] : pc.pts[0];
        if (w.departure(hs[k]) == octant_of(w.vertices[ov.vertex].pos, dir_pt)) slot = k;
      }
    }
    if (slot < 0) throw std::logic_error("layout: cannot locate the over strand");
    w.vertices[ov.vertex].over_pair = slot % 2;
  }
  auto report = validate(w);
  if (!report.ok) {
    std::string msg = "layout produced an invalid web:";
    for (const auto &v : report.violations) msg += " [" + v + "]";
    throw std::logic_error(msg);
  }
  return d;
}

Web layout_web(const SliceProgram &program) {
  Diagram d = layout(program);
  if (d.web.has_crossings()) throw std::invalid_argument("layout_web: program contains crossings");
  return d.web;
}

std::string resolve_source(const std::string &uri_or_text) {
  const std::string prefix = "builtin:";
  if (uri_or_text.rfind(prefix, 0) == 0) return builtin(uri_or_text.substr(prefix.size()));
  return uri_or_text;
}

}  // namespace dweb
