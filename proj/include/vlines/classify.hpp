#pragma once

#include <optional>
#include <string>

#include "vlines/invariants.hpp"
#include "vlines/splitting.hpp"

namespace vlines {

enum class Verdict {
  BalancedSplit,
  ConeOverVeronese,
  ChordalCubic,
  QuadricLines,
  QuadricLinesMeetingLine,
  NoMatch,
};

const char* verdict_name(Verdict v);

struct Classification {
  Verdict verdict = Verdict::NoMatch;
  bool contradiction = false;  // evidence no valid embedding can produce
  std::string reason;          // which branch decided, in words
  std::uint32_t prime = 0;
  bool reduced = false;  // input over Q, analysed mod `prime`
  std::uint64_t seed = 0;

  GenericSplitting generic;
  int span_dim = 0;   // of the Pluecker quadrics
  int full_span = 0;  // (n+2)(n+1)/2
  std::optional<Vector> vertex;
  std::optional<JumpingReport> jumping;
  std::optional<FundamentalCurve> curve;
  std::optional<BidegreeReport> bidegree;
  std::optional<SweptReport> swept;
};

/// Decision tree over the generic splitting type, the jumping locus and
/// the structure it points to. Families over Q are reduced mod `prime` (or
/// the next prime without bad denominators). Expects a validated family.
Classification classify(const LineFamily& f, Rng& rng, std::uint32_t prime = 101);

}  // namespace vlines
