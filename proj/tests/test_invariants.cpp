#include <doctest.h>

#include "oracles.hpp"
#include "vlines/atlas.hpp"
#include "vlines/grammar.hpp"
#include "vlines/invariants.hpp"
#include "vlines/splitting.hpp"

using namespace vlines;

namespace {

const Field Q = Field::rationals();
const Field F101 = Field::prime(101);

LineFamily make(Example e, Field k, int n = 0, std::uint64_t seed = 7) {
  Rng rng(seed);
  return atlas(e, n ? n : default_source_dim(e), k, rng);
}

// F_p points of P^2 whose line satisfies the flag, by enumeration with ranks.
std::uint64_t brute_force_count(const LineFamily& f, const Flag& flag) {
  const oracle::u64 p = f.field().characteristic();
  std::vector<oracle::Row> a, b;
  for (const auto& v : flag.a) a.push_back(oracle::residues(v));
  for (const auto& v : flag.b) b.push_back(oracle::residues(v));
  const int ra = oracle::rank_mod(a, p), rb = b.empty() ? 0 : oracle::rank_mod(b, p);
  std::uint64_t count = 0;
  auto test = [&](const oracle::Row& t) {
    const auto w = oracle::eval_w(f, t);
    auto with_a = a;
    with_a.insert(with_a.end(), w.begin(), w.end());
    if (oracle::rank_mod(with_a, p) > ra + 1) return;
    if (!b.empty()) {
      auto with_b = b;
      with_b.insert(with_b.end(), w.begin(), w.end());
      if (oracle::rank_mod(with_b, p) > rb) return;
    }
    ++count;
  };
  for (oracle::u64 x = 0; x < p; ++x)
    for (oracle::u64 y = 0; y < p; ++y) test({1, x, y});
  for (oracle::u64 y = 0; y < p; ++y) test({0, 1, y});
  test({0, 0, 1});
  return count;
}

}  // namespace

TEST_CASE("quadric ranks") {
  PolyParseOptions o;
  o.nvars = 4;
  CHECK(quadric_rank(parse_poly("t0^2 + t1^2", F101, o)) == 2);
  CHECK(quadric_rank(parse_poly("t0*t1 - t2*t3", F101, o)) == 4);
  CHECK(quadric_rank(parse_poly("t0*t1 + t2^2", F101, o)) == 3);
  CHECK(quadric_rank(parse_poly("t0^2 + 2*t0*t1 + t1^2", F101, o)) == 1);
}

TEST_CASE("bidegrees of the surface families") {
  Rng rng(1);
  const BidegreeReport chordal = bidegree(make(Example::Chordal, F101), rng);
  CHECK(chordal.value == Bidegree{1, 3});
  const BidegreeReport ql = bidegree(make(Example::QuadricLine, F101), rng);
  CHECK(ql.value == Bidegree{2, 2});
  const BidegreeReport split = bidegree(make(Example::Split, F101, 2), rng);
  CHECK(split.value == Bidegree{3, 1});
  // the cone over the Veronese surface is a threefold of degree 4: a general
  // 3-space meets it in 4 points, and no ruling lies in a general hyperplane
  const BidegreeReport cone = bidegree(make(Example::Cone, F101, 2), rng);
  CHECK(cone.value == Bidegree{4, 0});

  for (const auto* r : {&chordal, &ql, &split, &cone}) {
    CHECK(r->value.order + r->value.klass == 4);
    CHECK(r->order.unanimous);
    CHECK(r->klass.unanimous);
    CHECK(r->order.flags.size() == 5);
    for (const auto& c : r->order.flags) {
      // orbits of degree 4 are invisible over F_p^3, so only a count of at
      // most 3 must be fully seen there
      CHECK(c.over_extension[1] + c.over_extension[2] - c.over_extension[0] <= c.closure);
      if (c.closure <= 3) CHECK(c.stabilized());
    }
  }
  // a family over Q is reduced first
  CHECK(bidegree(make(Example::Chordal, Q), rng).value == Bidegree{1, 3});
}

TEST_CASE("F_p part of each Schubert count matches enumeration") {
  Rng rng(2);
  for (Example e : {Example::Chordal, Example::QuadricLine}) {
    CAPTURE(example_name(e));
    const LineFamily f = make(e, F101);
    for (Flag::Kind kind : {Flag::Kind::Order, Flag::Kind::Class}) {
      for (int rep = 0; rep < 2; ++rep) {
        const Flag flag = random_flag(F101, f.N(), kind, rng);
        const FlagCount c = schubert_count(f, flag, rng);
        REQUIRE(c.finite);
        CHECK(static_cast<std::uint64_t>(c.over_extension[0]) == brute_force_count(f, flag));
      }
    }
  }
}

TEST_CASE("bidegree is invariant under coordinate changes") {
  Rng rng(3);
  const LineFamily f = make(Example::Chordal, F101);
  for (int i = 0; i < 2; ++i) {
    const LineFamily moved = transform_ambient(transform_source(f, rng.invertible_matrix(F101, 3)), rng.invertible_matrix(F101, 4));
    CHECK(bidegree(moved, rng).value == Bidegree{1, 3});
  }
}

TEST_CASE("bidegree needs a surface") {
  Rng rng(4);
  CHECK_THROWS_AS(bidegree(make(Example::Quadric, F101), rng), Error);
}

TEST_CASE("swept varieties") {
  Rng rng(5);
  const SweptReport q = swept_variety(make(Example::Quadric, F101), rng);
  CHECK(q.dimension == 3);
  CHECK(q.fitted);
  CHECK(q.monomials == 15);
  REQUIRE(q.quadrics.size() == 1);
  CHECK(q.ranks.at(0) == 5);
  CHECK(q.fresh_points >= 100);
  CHECK(q.verified);

  const SweptReport s = swept_variety(make(Example::Split, F101, 2), rng);
  CHECK(s.dimension == 3);

  const SweptReport c = swept_variety(make(Example::Cone, F101, 1), rng);
  CHECK(c.dimension == 2);
  REQUIRE(c.quadrics.size() == 1);
  CHECK(c.ranks.at(0) == 3);
  CHECK(c.verified);

  // the chordal lines fill P^3
  const SweptReport ch = swept_variety(make(Example::Chordal, F101), rng);
  CHECK(ch.dimension == 3);
  CHECK(ch.quadrics.empty());
}

TEST_CASE("global vertices") {
  const auto v = global_vertex(make(Example::Cone, Q, 2));
  REQUIRE(v.has_value());
  CHECK(proportional(*v, Vector{Q.one(), Q.zero(), Q.zero(), Q.zero(), Q.zero(), Q.zero(), Q.zero()}));
  CHECK_FALSE(global_vertex(make(Example::Split, Q, 2)).has_value());
  CHECK_FALSE(global_vertex(make(Example::Chordal, Q)).has_value());
  CHECK_FALSE(global_vertex(make(Example::Quadric, F101)).has_value());

  // a global vertex is the vertex of every line-wise cone
  Rng rng(6);
  const LineFamily cone = transform_ambient(make(Example::Cone, F101, 3), rng.invertible_matrix(F101, 11));
  const auto gv = global_vertex(cone);
  REQUIRE(gv.has_value());
  for (int i = 0; i < 10; ++i) {
    const SplittingResult r = splitting_type(cone, rng.nonzero_vector(F101, 4), rng.nonzero_vector(F101, 4));
    REQUIRE(r.cone.has_value());
    CHECK(proportional(r.cone->vertex, *gv));
  }
}
