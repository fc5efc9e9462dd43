#pragma once

// JSON for families and reports. Private to the library; the C API hands
// out the dumped strings.

#include <json.hpp>
#include <string>

#include "vlines/atlas.hpp"
#include "vlines/classify.hpp"
#include "vlines/normal_form.hpp"

namespace vlines::io {

using ojson = nlohmann::ordered_json;

ojson field_json(Field f);
Field field_from_json(const ojson& j);

ojson scalar_json(const Scalar& s);
Scalar scalar_from_json(const ojson& j, Field f);
ojson vector_json(const Vector& v);
Vector vector_from_json(const ojson& j, Field f);
ojson matrix_json(const Matrix& m);
Matrix matrix_from_json(const ojson& j, Field f);

/// {"label","field","n","N","entries":[{"i","j","poly"}]}, zero entries
/// left out, sorted by (i, j).
ojson family_json(const LineFamily& f);
/// Accepts entries with i > j as the negated (j, i) entry; both orders
/// given inconsistently, or a nonzero diagonal, throw Antisymmetry with the
/// indices as witness.
LineFamily family_from_json(const ojson& j);
LineFamily family_from_text(const std::string& text);

/// FNV-1a 64 over the compact canonical JSON, as 16 hex digits.
std::string family_hash(const LineFamily& f);
std::string text_hash(const std::string& text);
std::string dump(const ojson& j);  // indent 2, trailing newline

/// version, field, prime, seed and hash of the input family.
ojson header(const LineFamily& f, std::uint32_t prime, std::uint64_t seed);
ojson header(Field field, std::uint32_t prime, std::uint64_t seed, const std::string& input_hash);

ojson to_json(const ValidationReport& r);
ojson to_json(const GenericSplitting& g);
ojson to_json(const SplittingResult& r);
ojson to_json(const JumpingReport& r);
ojson to_json(const FundamentalCurve& c);
ojson to_json(const BidegreeReport& r);
ojson to_json(const SweptReport& r);
ojson to_json(const Classification& c);
ojson to_json(const ProjectionResult& r);
ojson to_json(const NormalForm& r);

ojson coord_json(const CoordMatrix& m);
CoordMatrix coord_from_json(const ojson& j);

}  // namespace vlines::io
