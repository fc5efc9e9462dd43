#pragma once

#include <array>
#include <optional>
#include <vector>

#include "vlines/poly.hpp"
#include "vlines/random.hpp"
#include "vlines/unipoly.hpp"

namespace vlines {

/// Common zeros of a set of ternary quadrics over F_p, counted through a
/// univariate eliminant instead of enumerating points of the plane.
struct PlanarCount {
  bool finite = true;                 // false: the forms share a curve
  int closure = 0;                    // distinct zeros over the algebraic closure
  std::array<int, 3> over_extension{};  // zeros defined over F_p, F_p^2, F_p^3
  std::optional<UniPoly> eliminant;   // roots <-> zeros, after the coordinate change
  int attempts = 0;

  /// Zeros defined over F_p^2 or F_p^3.
  int up_to_cubic() const { return over_extension[1] + over_extension[2] - over_extension[0]; }
};

/// `forms` are degree-2 forms in three variables over a prime field. The
/// random linear change of coordinates is redrawn until the projection to
/// the x-axis separates the zeros (at most `max_attempts` times).
PlanarCount count_planar_points(const std::vector<HomForm>& forms, Rng& rng, int max_attempts = 20);

}  // namespace vlines
