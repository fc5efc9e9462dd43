#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vlines/family.hpp"

namespace vlines {

/// The five model families.
enum class Example {
  Split,        // lines joining corresponding points of two disjoint P^n
  Cone,         // cone over the quadratic Veronese variety
  Chordal,      // chords of a twisted cubic, n = 2
  Quadric,      // lines on a smooth quadric of P^4, n = 3
  QuadricLine,  // lines on that quadric meeting a fixed line, n = 2
};

/// Accepts "split", "cone", "chordal", "quadric", "quadric-line" and the
/// numeric ids 2.1 .. 2.5 in the same order.
std::optional<Example> parse_example(std::string_view id);
std::string example_name(Example e);
std::string example_id(Example e);
/// n used when the caller does not choose one.
int default_source_dim(Example e);

/// Builds the family over `field`. Split and Cone accept any n >= 1; the
/// others throw WrongDimension unless n is their fixed value. Random
/// choices (the section for Quadric, the plane for QuadricLine) come
/// from `rng` and are redrawn until the result checks out.
LineFamily atlas(Example e, int n, Field field, Rng& rng);

}  // namespace vlines
