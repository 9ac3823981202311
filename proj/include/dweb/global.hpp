#pragma once

#include "dweb/evaluate.hpp"
#include "dweb/poly.hpp"
#include "dweb/web.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dweb {

using Rational = boost::rational<std::int64_t>;

/// Raised when an operation defined for webs meets a singular or crossing vertex.
struct SingularUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Edge-disjoint union of oriented simple cycles.
struct OrientedCycleZ {
  /// Per edge: 0 absent, +1 traversed tail->head (poly order for loops), -1 against.
  std::vector<std::int8_t> dir;
  bool empty() const;
  int edge_count() const;
};

/// All cycles compatible with spin orientations, the empty one first, in a fixed order.
std::vector<OrientedCycleZ> enumerate_Z(const Web &web);

/// +1 when the vectorial edge lies right of the spin through-strand, -1 when left.
int side_sign(const Web &web, int vertex);

/// Rotation number of the spin part.
Rational spin_rotational(const Web &web);
/// Rotation number of an oriented cycle, vertex corners included.
Rational cycle_rotational(const Web &web, const OrientedCycleZ &z);

/// Global N-shift of a web.
Rational gsh(const Web &web, int N);
/// N-shift of an oriented cycle.
Rational zsh(const Web &web, const OrientedCycleZ &z, int N);

/// Deletes the vectorial edges of Z, swaps the parity of its spin edges and
/// fuses the spin edges meeting at the now bivalent vertices.
Web web_minus(const Web &web, const OrientedCycleZ &z);

struct IdentityReport {
  int N = 0;
  bool equal = false;
  LaurentPoly lhs;
  LaurentPoly rhs;
  std::size_t terms = 0;  // cycles or labelings summed
};

/// evaluate(web, N) against q^gsh * sum_Z q^zsh(Z) * evaluate(web_minus(web, Z), N - 1).
IdentityReport branching_check(const Web &web, int N, const EvalOptions &opts = {});

/// A-labeling: orientation of vectorial edges and thickness of spin edges.
struct ALabeling {
  /// Per edge: +1 along the stored direction, -1 against; spin edges always +1.
  std::vector<std::int8_t> dir;
  /// Per edge: vectorial edges 1, spin edges 0..N with the parity of the edge.
  std::vector<int> thickness;
};

/// Oriented web with thicknesses; thickness-0 edges are absent.
struct AWeb {
  Web web;
  ALabeling label;
};

/// All A-labelings with spin thicknesses at most N, in a fixed order.
std::vector<ALabeling> enumerate_labelings(const Web &web, int N);

/// Sum of the vertex A-shifts.
Rational ashift(const Web &web, const ALabeling &l);
/// Rotation number with each edge counted by its thickness.
Rational aweb_rotational(const AWeb &a);
/// gl(N) state sum of an A-web.
LaurentPoly moy_evaluate(const AWeb &a, int N);

/// Sum over vertices of the sign of the vectorial arc's quarter turn in the labeled web.
Rational vertex_sign_sum(const Web &web, const ALabeling &l);
/// Exponent of q attached to a labeling: spin prefactor, A-shift and (N-1) times the
/// labeled rotation number, with each vertex quarter turn counted at -(N-1)/4.
Rational typeA_exponent(const Web &web, const ALabeling &l, int N);

/// evaluate(web, N) against the sum over A-labelings of shifted MOY evaluations.
IdentityReport typeA_check(const Web &web, int N, const EvalOptions &opts = {});

}  // namespace dweb
