#pragma once

#include "dweb/dsl.hpp"
#include "dweb/poly.hpp"

#include <string>
#include <vector>

namespace dweb::test {

inline Web web_of(const std::string &name) { return layout_web(parse(builtin(name))); }
inline Diagram diagram_of(const std::string &name) { return layout(parse(builtin(name))); }

/// Builtins without crossings.
inline std::vector<std::string> crossing_free_builtins() {
  std::vector<std::string> r;
  for (const auto &n : builtin_names())
    if (diagram_of(n).crossings.empty()) r.push_back(n);
  return r;
}

/// Builtins whose webs have only trivalent vertices.
inline std::vector<std::string> trivalent_builtins() {
  std::vector<std::string> r;
  for (const auto &n : crossing_free_builtins())
    if (web_of(n).count_vertices(VertexKind::singular) == 0) r.push_back(n);
  return r;
}

/// Builtins with at least one singular vertex.
inline std::vector<std::string> singular_builtins() {
  std::vector<std::string> r;
  for (const auto &n : crossing_free_builtins())
    if (web_of(n).count_vertices(VertexKind::singular) > 0) r.push_back(n);
  return r;
}

inline LaurentPoly circle_v_value(int N) { return qint(2 * N - 1) + LaurentPoly(1); }
inline LaurentPoly circle_spin_value(int N) { return qtwo_bracket(N - 1); }
inline LaurentPoly theta_value(int N) { return qint(N) * qtwo_bracket(N - 1); }

}  // namespace dweb::test
