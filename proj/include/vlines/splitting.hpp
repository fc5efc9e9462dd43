#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vlines/family.hpp"

namespace vlines {

/// (a1, a2) with a1 >= a2 >= 0 and a1 + a2 = 2; ordered lexicographically.
struct SplittingType {
  int a1 = 1;
  int a2 = 1;

  static constexpr SplittingType balanced() { return {1, 1}; }
  static constexpr SplittingType unbalanced() { return {2, 0}; }
  bool is_balanced() const { return a1 == 1; }
  std::string to_string() const { return "(" + std::to_string(a1) + "," + std::to_string(a2) + ")"; }
  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;
};

/// Vertex of the cone swept by the lines over the source line through p, q.
struct ConeCertificate {
  Vector vertex;
  Vector p;
  Vector q;
  int kernel_dim = 1;  // dimension of the space of common points
};

struct SplittingResult {
  SplittingType type;
  std::optional<ConeCertificate> cone;
};

/// Splitting type on the source line through p and q, decided by the
/// linear system x ^ W(s p + u q) = 0 in x. Throws DegenerateLine for
/// proportional p, q, BasePoint if W vanishes on the line, ContractedLine if
/// the whole line maps to one line.
SplittingResult splitting_type(const LineFamily& f, std::span<const Scalar> p, std::span<const Scalar> q);

struct GenericSplitting {
  SplittingType type;
  int trials = 0;
  int unbalanced = 0;  // sampled lines of type (2,0)
};

/// Minimum type over `trials` random source lines (one line when n = 1).
GenericSplitting generic_splitting_type(const LineFamily& f, Rng& rng, int trials = 50);

/// Lowest-degree forms vanishing on the coordinates of the jumping lines.
struct FittedLocus {
  int degree = 0;
  int monomials = 0;
  int rank = 0;     // rank of the evaluation matrix
  int nullity = 0;  // number of independent fitted forms
  std::vector<HomForm> forms;
};

struct JumpingReport {
  std::string mode;  // "exhaustive" or "sampled"
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  bool reduced = false;  // a family over Q analysed modulo `prime`
  int n = 0;
  std::string coordinates;  // "dual" (n = 2) or "pluecker"
  SplittingType generic;
  std::uint64_t total = 0;
  std::uint64_t jumping = 0;
  std::vector<Vector> lines;     // exhaustive mode only
  std::vector<Vector> vertices;  // cone vertex of each listed line
  std::optional<FittedLocus> fit;
  double threshold = 0;  // counts at or above it mean codimension one
  int codim = 2;         // 1, or 2 standing for "at least two"
};

struct JumpingOptions {
  std::optional<bool> exhaustive;  // default: exhaustive when feasible
  std::uint64_t trials = 0;        // sampled lines; 0 means 100 * p
  std::uint32_t prime = 101;       // for families over Q
};

/// Exhaustive by default for n = 2 with p <= 211 and n = 3 with p <= 7.
bool exhaustive_feasible(int n, std::uint32_t p);
JumpingReport enumerate_jumping(const LineFamily& f, Rng& rng, const JumpingOptions& options = {});

enum class CurveVerdict { Line, RationalNormalCubic, Other };
const char* curve_verdict_name(CurveVerdict v);

struct FundamentalCurve {
  CurveVerdict verdict = CurveVerdict::Other;
  std::vector<Vector> vertices;  // distinct, normalized
  int span_rank = 0;             // vector-space rank of the vertices
  int quadrics = 0;              // independent quadrics through them (rank 4)
  std::vector<HomForm> fitted;   // in coordinates on their span
  std::uint64_t common_zeros = 0;  // F_p-points of the fitted quadrics
};

/// Pure vertex-set test: Line if collinear, RationalNormalCubic if the
/// vertices span P^3 and are exactly the F_p-points of >= 3 quadrics.
FundamentalCurve classify_vertex_set(Field field, const std::vector<Vector>& vertices);
/// Throws EmptyJumpingSet unless the report is exhaustive with jumping
/// lines, and WrongDimension unless n = 2.
FundamentalCurve fundamental_curve(const LineFamily& f, const JumpingReport& report);

/// Source lines over F_p as (p, q) residue pairs in a fixed order.
std::uint64_t count_source_lines(int n, std::uint32_t p);

}  // namespace vlines
