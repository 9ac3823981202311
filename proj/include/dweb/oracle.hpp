#pragma once

#include "dweb/dsl.hpp"
#include "dweb/poly.hpp"
#include "dweb/web.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace dweb {

/// Recursion cap hit by kauffman_specialized.
struct DepthExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Replaces every singular vertex by a square web. variants[k] in 1..4 selects the square at the
/// k-th singular vertex (orientation x parity); missing entries default to 1.
Web square_replace(const Web &gweb, const std::vector<int> &variants = {});

/// Evaluation through square replacement, divided by ([2]^{[N-3]})^{#singular}.
LaurentPoly square_replacement_eval(const Web &gweb, int N, const std::vector<int> &variants = {});

/// Planar-diagram code of a link diagram: each crossing lists four strand labels counterclockwise,
/// starting with the incoming under-strand.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  int free_loops = 0;  // crossingless components
};

/// Extracts the PD code of a vectorial link diagram.
PDCode pd_code(const Diagram &d);

/// Descending-diagram skein recursion for the specialized Kauffman invariant.
LaurentPoly kauffman_specialized(const PDCode &pd, int N, int max_depth = 64);
LaurentPoly kauffman_specialized(const Diagram &d, int N, int max_depth = 64);

}  // namespace dweb
