#pragma once

#include "dweb/dsl.hpp"
#include "dweb/evaluate.hpp"
#include "dweb/poly.hpp"
#include "dweb/web.hpp"

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dweb {

/// A link diagram was required but spin edges or web vertices are present.
struct NonLinkDiagram : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownRelation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Linear combination of webs.
struct WeightedSum {
  std::vector<std::pair<LaurentPoly, Web>> terms;
};

/// Expansion of one mixed-crossing kind, read in the frame where the spin strand runs SW-NE:
/// sign * (q^{1/2} A - q^{-1/2} B), where A is the H resolution iff first_is_h.
struct MixedRule {
  bool first_is_h = true;
  int sign = 1;
};

/// Rules indexed by mixed_index(parity, spin_over).
struct MixedConventions {
  std::array<MixedRule, 4> rule{};
  /// Extra sign when the spin strand runs SE-NW.
  int turned_sign = 1;
};
inline int mixed_index(EdgeKind parity, bool spin_over) {
  return (parity == EdgeKind::spin_odd ? 2 : 0) + (spin_over ? 0 : 1);
}
const MixedConventions &default_mixed_conventions();

/// Replaces each crossing tile by its resolutions and lays out every term; equal webs are merged.
WeightedSum expand(const Diagram &d, const MixedConventions &conv = default_mixed_conventions());

/// Sum of coefficient times evaluation over the expansion.
LaurentPoly evaluate_diagram(const Diagram &d, int N, const EvalOptions &opts = {},
                             const MixedConventions &conv = default_mixed_conventions());

/// Lays out a source (DSL text or builtin URI) and evaluates it, expanding crossings if present.
LaurentPoly evaluate_source(const std::string &source, int N, const EvalOptions &opts = {});

/// Framed unoriented link invariant of a vectorial link diagram.
LaurentPoly link_invariant(const std::string &source, int N, const EvalOptions &opts = {});
void require_link_diagram(const Diagram &d);

/// Swaps over and under at every crossing tile.
SliceProgram mirror(const SliceProgram &p);

/// One side of a relation: coefficient(N) times a builtin diagram.
struct RelationTerm {
  std::function<LaurentPoly(int)> coefficient;
  std::string builtin;
};

struct Relation {
  std::string id;
  std::string description;
  std::vector<RelationTerm> lhs;
  std::vector<RelationTerm> rhs;
};

struct RelationReport {
  std::string id;
  int N = 0;
  bool equal = false;
  LaurentPoly lhs;
  LaurentPoly rhs;
};

const std::vector<Relation> &relation_catalog();
std::vector<std::string> relation_ids();
const Relation &find_relation(const std::string &id);
RelationReport verify_relation(const std::string &id, int N, const EvalOptions &opts = {});

}  // namespace dweb
