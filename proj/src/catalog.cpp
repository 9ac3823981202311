#include "dweb/dsl.hpp"

#include <algorithm>
#include <map>
#include <regex>

namespace dweb {

namespace {

// Text transforms used to derive relation variants.

// Swaps even and odd spin strands.
std::string swap_parity(const std::string &s) {
  static const std::regex re("([eo])([+-])");
  std::string out;
  auto it = std::sregex_iterator(s.begin(), s.end(), re);
  std::size_t last = 0;
  for (; it != std::sregex_iterator(); ++it) {
    out += s.substr(last, it->position() - last);
    out += (*it)[1] == "e" ? "o" : "e";
    out += (*it)[2].str();
    last = it->position() + it->length();
  }
  return out + s.substr(last);
}

// Reverses every spin orientation.
std::string reverse_spins(const std::string &s) {
  static const std::regex re("([eo])([+-])");
  std::string out;
  auto it = std::sregex_iterator(s.begin(), s.end(), re);
  std::size_t last = 0;
  for (; it != std::sregex_iterator(); ++it) {
    out += s.substr(last, it->position() - last);
    out += (*it)[1].str();
    out += (*it)[2] == "+" ? "-" : "+";
    last = it->position() + it->length();
  }
  return out + s.substr(last);
}

// Left-right reflection of the whole program.
std::string reflect(const std::string &s) {
  SliceProgram p = parse_tangle(s);
  for (auto &row : p.rows) {
    std::reverse(row.tiles.begin(), row.tiles.end());
    for (auto &t : row.tiles) {
      std::reverse(t.bottom.begin(), t.bottom.end());
      std::reverse(t.top.begin(), t.top.end());
      if (t.kind == TileKind::over) t.kind = TileKind::under;
      else if (t.kind == TileKind::under) t.kind = TileKind::over;
      else if (t.kind == TileKind::square) t.variant = 5 - t.variant;
    }
  }
  return render(p);
}

// Prefixes and suffixes each row of a local piece with passive strands.
std::string frame(const std::string &body, const std::string &left, const std::string &right) {
  std::string out, line;
  for (char ch : body + "\n") {
    if (ch != '\n') {
      line += ch;
      continue;
    }
    if (!line.empty()) out += left + (left.empty() ? "" : " ") + line + (right.empty() ? "" : " ") + right + "\n";
    line.clear();
  }
  return out;
}

// Closures of local pieces. Each takes the piece as rows and returns a closed program.

// Piece with bottom (v e+) and top (v e+).
std::string close_v_spin(const std::string &body, const std::string &spin_cup) {
  return "cup_v cup(" + spin_cup + ")\n" + frame(body, "v", spin_cup.substr(spin_cup.find(' ') + 1)) + "cap_v cap(" +
         spin_cup + ")\n";
}

// Piece with bottom (v) and top (v) on a circle.
std::string close_on_circle(const std::string &body) { return "cup_v\n" + frame(body, "v", "") + "cap_v\n"; }

struct Entry {
  std::string name;
  std::string text;
};

void add(std::vector<Entry> &c, std::string name, std::string text) { c.push_back({std::move(name), std::move(text)}); }

// Transforms applied to a piece together with its closure.
std::string variant(const std::string &s, int k) {
  switch (k) {
    case 1: return s;
    case 2: return swap_parity(s);
    case 3: return reverse_spins(s);
    case 4: return reflect(s);
  }
  return s;
}

std::vector<Entry> build() {
  std::vector<Entry> c;

  // Circles and theta.
  add(c, "empty", "");
  add(c, "circle_v", "cup_v\ncap_v\n");
  add(c, "unknot", "cup_v\ncap_v\n");
  add(c, "circle_e", "cup(e- e+)\ncap(e- e+)\n");
  add(c, "circle_e_rev", "cup(e+ e-)\ncap(e+ e-)\n");
  add(c, "circle_o", "cup(o- o+)\ncap(o- o+)\n");
  add(c, "circle_o_rev", "cup(o+ o-)\ncap(o+ o-)\n");
  const std::string theta = "cup(o- o+)\nY(o- | e- v) Y(o+ | v e+)\ne- cap_v e+\ncap(e- e+)\n";
  add(c, "theta", theta);
  add(c, "theta_bar", swap_parity(theta));
  add(c, "theta_rev", reverse_spins(theta));

  // Bigons.
  add(c, "digon_lhs", close_on_circle("Y(v | e+ o-)\nY(e+ o- | v)"));
  add(c, "digon_flip_lhs", close_on_circle("Y(v | o+ e-)\nY(o+ e- | v)"));
  add(c, "digon_theta_lhs",
      "cup(o- o+)\nY(o- | e- v) Y(o+ | v e+)\ne- v Y(v | e+ o-) e+\ne- v Y(e+ o- | v) e+\ne- cap_v e+\ncap(e- e+)\n");
  const std::string bad_r = "cup(e- e+)\ne- Y(e+ | o+ v)\ne- Y(o+ v | e+)\ncap(e- e+)\n";
  const std::string bad_l = "cup(e- e+)\ne- Y(e+ | v o+)\ne- Y(v o+ | e+)\ncap(e- e+)\n";
  add(c, "bad_digon_e_r_lhs", bad_r);
  add(c, "bad_digon_e_l_lhs", bad_l);
  add(c, "bad_digon_o_r_lhs", swap_parity(bad_r));
  add(c, "bad_digon_o_l_lhs", swap_parity(bad_l));

  // Singular curl and singular square.
  add(c, "curl_lhs", "cup_v\nsing\ncap_v\n");
  add(c, "curl_theta_lhs",
      "cup(o- o+)\nY(o- | e- v) Y(o+ | v e+)\ne- v v cup_v e+\ne- v sing v e+\ne- v v cap_v e+\ne- cap_v e+\ncap(e- e+)\n");
  for (int k = 1; k <= 4; ++k)
    add(c, "singular_square_" + std::to_string(k) + "_lhs",
        "cup_v cup_v\nv square" + std::to_string(k) + " v\ncap_v cap_v\n");
  add(c, "singular_square_rhs", "cup_v cup_v\nv sing v\ncap_v cap_v\n");

  // Triangles: piece with bottom (e+ o-) and top (v), closed through a vertex.
  {
    const std::string lhs = "cup_v\nY(v | e+ o-) v\nY(e+ | o+ v) Y(o- | v e-) v\no+ cap_v e- v\nY(o+ e- | v) v\ncap_v\n";
    const std::string rhs = "cup_v\nY(v | e+ o-) v\nY(e+ o- | v) v\ncap_v\n";
    for (int k = 1; k <= 4; ++k) {
      add(c, "triangle_" + std::to_string(k) + "_lhs", variant(lhs, k));
      add(c, "triangle_" + std::to_string(k) + "_rhs", variant(rhs, k));
    }
  }

  // Pieces with bottom (v e+) and top (v e+).
  {
    const std::string x = close_v_spin("v Y(e+ | v o+)\nsing o+\nv Y(v o+ | e+)", "e+ e-");
    const std::string h = close_v_spin("Y(v e+ | o+)\nY(o+ | v e+)", "e+ e-");
    const std::string ii = close_v_spin("v e+", "e+ e-");
    const std::string sq = close_v_spin("v Y(e+ | o+ v)\nY(v o+ | e+) v\nY(e+ | v o+) v\nv Y(o+ v | e+)", "e+ e-");
    for (int k = 1; k <= 4; ++k) {
      const std::string n = std::to_string(k);
      add(c, "xihii_" + n + "_lhs", variant(x, k));
      add(c, "xihii_" + n + "_h", variant(h, k));
      add(c, "xihii_" + n + "_ii", variant(ii, k));
      add(c, "square31_" + n + "_lhs", variant(sq, k));
      add(c, "square31_" + n + "_i", variant(h, k));
      add(c, "square31_" + n + "_smooth", variant(ii, k));
    }
  }
  add(c, "two_sing_lhs", "cup_v cup_v\nv sing v\nv sing v\ncap_v cap_v\n");
  add(c, "two_sing_sing", "cup_v cup_v\nv sing v\ncap_v cap_v\n");
  add(c, "two_sing_hor", "cup_v cup_v\nv smooth_h v\ncap_v cap_v\n");

  // Pentagon: piece with bottom (v v e+) and top (v o+).
  {
    auto close = [](const std::string &body) {
      return "cup_v cup_v\nv v v Y(v | e+ o-)\n" + frame(body, "v", "o-") + "v v cap(o+ o-)\ncap_v\n";
    };
    const std::string p = close("v v Y(e+ | o+ v)\nv Y(v o+ | e+) v\nY(v e+ | o+) v\nY(o+ | v e+) v\nv Y(e+ v | o+)");
    const std::string x = close("sing e+\nv Y(v e+ | o+)");
    const std::string t = close("v Y(v e+ | o+)\nY(v o+ | e+)\nY(e+ | v o+)");
    for (int k = 1; k <= 4; ++k) {
      const std::string n = std::to_string(k);
      add(c, "pentagon_" + n + "_lhs", variant(p, k));
      add(c, "pentagon_" + n + "_x", variant(x, k));
      add(c, "pentagon_" + n + "_t", variant(t, k));
    }
    add(c, "pentagon_lhs", p);
  }

  // Link diagrams.
  add(c, "unknot_kink_pos", "cup_v\nunder\ncap_v\n");
  add(c, "unknot_kink_neg", "cup_v\nover\ncap_v\n");
  add(c, "unlink2", "cup_v cup_v\ncap_v cap_v\n");
  add(c, "hopf", "cup_v cup_v\nv over v\nv over v\ncap_v cap_v\n");
  add(c, "hopf_kink_pos", "cup_v cup_v\nv cup_v v v v\nover v v v v\nv cap_v v v v\nv over v\nv over v\ncap_v cap_v\n");
  const std::string trefoil = "cup_v cup_v\nv over v\nv over v\nv over v\ncap_v cap_v\n";
  add(c, "trefoil", trefoil);
  add(c, "figure8", "cup_v cup_v\nv over v\nv over v\nunder v v\nunder v v\ncap_v cap_v\n");
  add(c, "r2_lhs", "cup_v cup_v\nv over v\nv under v\ncap_v cap_v\n");
  add(c, "r2_rev_lhs", "cup_v cup_v\nv under v\nv over v\ncap_v cap_v\n");
  add(c, "r2_rhs", "cup_v cup_v\ncap_v cap_v\n");
  add(c, "r3_lhs", "cup_v cup_v\nover v v\nv over v\nover v v\ncap_v cap_v\n");
  add(c, "r3_rhs", "cup_v cup_v\nv over v\nover v v\nv over v\ncap_v cap_v\n");
  add(c, "r3_mixed_lhs", "cup_v cup_v\nover v v\nv over v\nunder v v\ncap_v cap_v\n");
  add(c, "r3_mixed_rhs", "cup_v cup_v\nv under v\nover v v\nv over v\ncap_v cap_v\n");
  add(c, "skein_over", trefoil);
  add(c, "skein_under", "cup_v cup_v\nv under v\nv over v\nv over v\ncap_v cap_v\n");
  add(c, "skein_smooth_h", "cup_v cup_v\nv smooth_h v\nv over v\nv over v\ncap_v cap_v\n");
  add(c, "skein_smooth_v", "cup_v cup_v\nv smooth_v v\nv over v\nv over v\ncap_v cap_v\n");

  // Strand passing a singular vertex: pieces on (X a b), closed with an extra strand.
  for (const char *kind : {"over", "under"}) {
    const std::string k = kind;
    auto close = [](const std::string &body) { return "cup_v cup_v\n" + frame(body, "", "v") + "cap_v cap_v\n"; };
    add(c, "r3_sing_" + k + "_lhs", close(k + " v\nv " + k + "\nsing v"));
    add(c, "r3_sing_" + k + "_rhs", close("v sing\n" + k + " v\nv " + k));
  }

  // Pitchforks and mixed second moves, for both crossing kinds and parities.
  for (const char *kind : {"over", "under"}) {
    const std::string k = kind;
    const std::string reg = k;                                 // regular crossing with the vectorial strand on top
    const std::string mix = k == "over" ? "munder" : "mover";  // the same strand over a spin strand
    const std::string spin_over = k == "over" ? "mover" : "munder";
    // Vectorial strand crossing a vertex with a vectorial stem.
    const std::string pf_l = "cup_v\n" + reg + "\nY(v | o- e+) v\nY(o- e+ | v) v\ncap_v\n";
    const std::string pf_r = "cup_v\nv Y(v | o- e+)\n" + mix + "(v o- | o- v) e+\no- " + mix +
                             "(v e+ | e+ v)\nY(o- e+ | v) v\ncap_v\n";
    add(c, "pf_" + k + "_e_lhs", pf_l);
    add(c, "pf_" + k + "_e_rhs", pf_r);
    add(c, "pf_" + k + "_o_lhs", swap_parity(pf_l));
    add(c, "pf_" + k + "_o_rhs", swap_parity(pf_r));
    // The same move at the vertices with reversed spin orientation.
    add(c, "pf2_" + k + "_e_lhs", reverse_spins(pf_l));
    add(c, "pf2_" + k + "_e_rhs", reverse_spins(pf_r));
    add(c, "pf2_" + k + "_o_lhs", reverse_spins(swap_parity(pf_l)));
    add(c, "pf2_" + k + "_o_rhs", reverse_spins(swap_parity(pf_r)));
    // Spin strand crossing a vectorial strand twice.
    auto close3 = [](const std::string &body) {
      return "cup(o- o+)\no- Y(o+ | e+ v)\n" + frame(body, "o-", "") + "o- Y(e+ v | o+)\ncap(o- o+)\n";
    };
    const std::string r2m = close3(spin_over + "(e+ v | v e+)\n" + spin_over + "(v e+ | e+ v)");
    const std::string r2m_rhs = close3("e+ v");
    add(c, "r2_mixed_" + k + "_e_lhs", r2m);
    add(c, "r2_mixed_" + k + "_e_rhs", r2m_rhs);
    add(c, "r2_mixed_" + k + "_o_lhs", swap_parity(r2m));
    add(c, "r2_mixed_" + k + "_o_rhs", swap_parity(r2m_rhs));
  }

  // Further generalized webs.
  add(c, "gweb_sing_chain3", "cup_v cup_v\nv sing v\nv sing v\nv sing v\ncap_v cap_v\n");
  add(c, "gweb_sing_zigzag", "cup_v cup_v cup_v\nv sing v v v\nv v v sing v\nv v sing v v\nv sing v v v\ncap_v cap_v cap_v\n");
  add(c, "gweb_sing_ladder", "cup_v cup_v\nsing sing\nv sing v\nsing sing\ncap_v cap_v\n");
  add(c, "gweb_theta_sing", "cup(o- o+)\nY(o- | e- v) Y(o+ | v e+)\ne- sing e+\ne- cap_v e+\ncap(e- e+)\n");
  add(c, "gweb_theta_sing2", "cup(o- o+)\nY(o- | e- v) Y(o+ | v e+)\ne- sing e+\ne- sing e+\ne- cap_v e+\ncap(e- e+)\n");
  add(c, "gweb_theta_digon_sing",
      "cup(o- o+)\nY(o- | e- v) Y(o+ | v e+)\ne- v Y(v | e+ o-) e+\ne- v Y(e+ o- | v) e+\ne- sing e+\ne- cap_v e+\n"
      "cap(e- e+)\n");
  add(c, "gweb_digon_sing", "cup_v cup_v\nv v v Y(v | e+ o-)\nv v v Y(e+ o- | v)\nv sing v\ncap_v cap_v\n");
  add(c, "gweb_triangle_sing",
      "cup_v cup_v\nY(v | e+ o-) v v v\nY(e+ | o+ v) Y(o- | v e-) v v v\no+ cap_v e- v v v\nY(o+ e- | v) v v v\n"
      "v sing v\ncap_v cap_v\n");
  add(c, "gweb_curl_pair", "cup_v cup_v\nsing sing\ncap_v cap_v\n");
  return c;
}

const std::map<std::string, std::string> &catalog() {
  static const std::map<std::string, std::string> c = [] {
    std::map<std::string, std::string> m;
    for (auto &e : build()) m.emplace(e.name, e.text);
    return m;
  }();
  return c;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> r;
  for (const auto &[k, v] : catalog()) r.push_back(k);
  return r;
}

std::string builtin(const std::string &name) {
  auto it = catalog().find(name);
  if (it == catalog().end()) throw DslError(DslError::Kind::unknown_name, 0, 0, "no builtin named '" + name + "'");
  return it->second;
}

}  // namespace dweb
