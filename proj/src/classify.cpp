#include "vlines/classify.hpp"

namespace vlines {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::BalancedSplit: return "BalancedSplit";
    case Verdict::ConeOverVeronese: return "ConeOverVeronese";
    case Verdict::ChordalCubic: return "ChordalCubic";
    case Verdict::QuadricLines: return "QuadricLines";
    case Verdict::QuadricLinesMeetingLine: return "QuadricLinesMeetingLine";
    case Verdict::NoMatch: return "NoMatch";
  }
  return "?";
}

namespace {

Classification decide(Classification c, Verdict v, std::string reason) {
  c.verdict = v;
  c.reason = std::move(reason);
  return c;
}

}  // namespace

Classification classify(const LineFamily& input, Rng& rng, std::uint32_t prime) {
  const LineFamily f = over_prime_field(input, prime);
  const int n = f.n();
  Classification c;
  c.prime = f.field().characteristic();
  c.reduced = input.field().is_rational();
  c.seed = rng.seed();
  c.span_dim = plucker_span_dim(f);
  c.full_span = (n + 2) * (n + 1) / 2;
  c.generic = generic_splitting_type(f, rng);

  if (!c.generic.type.is_balanced()) {
    c.vertex = global_vertex(f);
    if (!c.vertex) return decide(std::move(c), Verdict::NoMatch, "generic type (2,0) but no point lies on every line");
    if (c.span_dim < c.full_span)
      return decide(std::move(c), Verdict::ConeOverVeronese, "generic type (2,0) with a global vertex; quadric span is not full, so the cone is a projection");
    return decide(std::move(c), Verdict::ConeOverVeronese, "generic type (2,0) with a global vertex");
  }
  if (n == 1) return decide(std::move(c), Verdict::BalancedSplit, "n = 1 and the unique line class has type (1,1)");

  JumpingOptions opts;
  opts.prime = c.prime;
  c.jumping = enumerate_jumping(f, rng, opts);
  if (c.jumping->codim >= 2) return decide(std::move(c), Verdict::BalancedSplit, "type (1,1) with jumping locus of codimension at least 2");

  if (n >= 4) {
    c.contradiction = true;
    return decide(std::move(c), Verdict::NoMatch, "codimension-one jumping locus with n >= 4 cannot come from an embedding");
  }
  if (n == 2) {
    if (c.jumping->mode != "exhaustive")
      return decide(std::move(c), Verdict::NoMatch, "codimension one, but the fundamental curve needs an exhaustive enumeration");
    c.curve = fundamental_curve(f, *c.jumping);
    if (c.curve->verdict == CurveVerdict::RationalNormalCubic)
      return decide(std::move(c), Verdict::ChordalCubic, "codimension one with a rational normal cubic as fundamental curve");
    if (c.curve->verdict == CurveVerdict::Line) {
      c.bidegree = bidegree(f, rng);
      if (c.bidegree->value == Bidegree{2, 2})
        return decide(std::move(c), Verdict::QuadricLinesMeetingLine, "codimension one, fundamental line, bidegree (2,2)");
      return decide(std::move(c), Verdict::NoMatch, "fundamental line but bidegree is not (2,2)");
    }
    return decide(std::move(c), Verdict::NoMatch, "codimension one, but the vertices form neither a line nor a cubic");
  }
  // n = 3
  c.swept = swept_variety(f, rng);
  const SweptReport& s = *c.swept;
  if (f.N() == 4 && s.dimension == 3 && s.verified && s.quadrics.size() == 1 && s.ranks.front() == 5)
    return decide(std::move(c), Verdict::QuadricLines, "codimension one and the lines sweep a smooth quadric of P^4");
  return decide(std::move(c), Verdict::NoMatch, "codimension one, but the swept variety is not a smooth quadric threefold");
}

}  // namespace vlines
