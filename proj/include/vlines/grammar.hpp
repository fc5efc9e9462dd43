#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vlines/poly.hpp"

namespace vlines {

// Text form of a homogeneous polynomial:
//
//   poly   := ["+" | "-"] term { ("+" | "-") term }
//   term   := factor { "*" factor }
//   factor := integer ["/" integer] | var ["^" integer]
//   var    := ("t" | "s") digits
//
// Whitespace is ignored between tokens. A polynomial uses one variable
// letter throughout. Coefficients are reduced into the target field.

struct PolyParseOptions {
  std::optional<int> nvars;   // default: one more than the largest index
  std::optional<int> degree;  // default: the largest term degree
};

HomForm parse_poly(std::string_view text, Field field, const PolyParseOptions& options = {});

/// Canonical text: lex-descending terms, symmetric residues over F_p.
std::string format_poly(const HomForm& f, char letter = 't');

}  // namespace vlines
