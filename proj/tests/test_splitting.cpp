#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vlines/atlas.hpp"
#include "vlines/grammar.hpp"
#include "vlines/splitting.hpp"

using namespace vlines;

namespace {

const Field Q = Field::rationals();
const Field F101 = Field::prime(101);

LineFamily make(Example e, Field k, int n = 0, std::uint64_t seed = 7) {
  Rng rng(seed);
  return atlas(e, n ? n : default_source_dim(e), k, rng);
}

Vector vec(Field k, std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.push_back(k.from_int(x));
  return v;
}

// Two points spanning the line {u . t = 0} of the plane.
std::pair<Vector, Vector> dual_line(const Vector& u) {
  const auto ker = kernel_basis(Matrix::from_rows(u.front().field(), {u}, u.size()));
  return {ker.at(0), ker.at(1)};
}

}  // namespace

TEST_CASE("the cone has a vertex on every source line") {
  const LineFamily cone = make(Example::Cone, Q, 2);
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    const Vector p = rng.nonzero_vector(Q, 3), q = rng.nonzero_vector(Q, 3);
    if (proportional(p, q)) continue;
    const SplittingResult r = splitting_type(cone, p, q);
    CHECK(r.type == SplittingType::unbalanced());
    REQUIRE(r.cone.has_value());
    CHECK(proportional(r.cone->vertex, vec(Q, {1, 0, 0, 0, 0, 0, 0})));
  }
  CHECK(generic_splitting_type(cone, rng).type == SplittingType::unbalanced());
}

TEST_CASE("the split family is balanced on every line") {
  const LineFamily split = make(Example::Split, F101, 2);
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const Vector p = rng.nonzero_vector(F101, 3), q = rng.nonzero_vector(F101, 3);
    if (proportional(p, q)) continue;
    const SplittingResult r = splitting_type(split, p, q);
    CHECK(r.type.is_balanced());
    CHECK_FALSE(r.cone.has_value());
  }
}

TEST_CASE("chordal family on s2 = 0 is a cone with vertex at the cubic point") {
  const LineFamily chordal = make(Example::Chordal, Q);
  const SplittingResult r = splitting_type(chordal, vec(Q, {1, 0, 0}), vec(Q, {0, 1, 0}));
  CHECK(r.type == SplittingType::unbalanced());
  REQUIRE(r.cone.has_value());
  CHECK(proportional(r.cone->vertex, vec(Q, {1, 0, 0, 0})));
}

TEST_CASE("generic splitting types") {
  Rng rng(3);
  CHECK(generic_splitting_type(make(Example::Cone, F101, 2), rng).type == SplittingType::unbalanced());
  for (Example e : {Example::Split, Example::Chordal, Example::Quadric, Example::QuadricLine}) {
    CAPTURE(example_name(e));
    CHECK(generic_splitting_type(make(e, F101), rng).type == SplittingType::balanced());
  }
  // n = 1: the only line, no sampling spread
  const GenericSplitting one = generic_splitting_type(make(Example::Split, F101, 1), rng);
  CHECK(one.trials == 1);
  CHECK(one.type.is_balanced());
  CHECK(SplittingType::balanced() < SplittingType::unbalanced());
}

TEST_CASE("generic type is invariant under coordinate changes") {
  Rng rng(4);
  for (Example e : {Example::Cone, Example::Chordal, Example::Quadric}) {
    const LineFamily f = make(e, F101);
    const auto base = generic_splitting_type(f, rng).type;
    const auto s = static_cast<std::size_t>(f.n() + 1), a = static_cast<std::size_t>(f.N() + 1);
    const LineFamily moved = transform_ambient(transform_source(f, rng.invertible_matrix(F101, s)), rng.invertible_matrix(F101, a));
    CHECK(generic_splitting_type(moved, rng).type == base);
  }
}

TEST_CASE("the linear system agrees with the pairwise incidence oracle") {
  std::mt19937_64 gen(5);
  Rng rng(5);
  for (Example e : {Example::Split, Example::Cone, Example::Chordal, Example::QuadricLine, Example::Quadric}) {
    CAPTURE(example_name(e));
    const LineFamily f = make(e, F101);
    std::vector<std::pair<Vector, Vector>> lines;
    for (int i = 0; i < 15; ++i) lines.emplace_back(rng.nonzero_vector(F101, static_cast<std::size_t>(f.n() + 1)),
                                                    rng.nonzero_vector(F101, static_cast<std::size_t>(f.n() + 1)));
    if (f.n() == 2) {  // include jumping lines so both outcomes occur
      JumpingOptions o;
      o.exhaustive = true;
      const JumpingReport rep = enumerate_jumping(f, rng, o);
      for (std::size_t i = 0; i < rep.lines.size() && i < 15; ++i) lines.push_back(dual_line(rep.lines[i]));
    }
    int unbalanced = 0;
    for (const auto& [p, q] : lines) {
      if (proportional(p, q)) continue;
      const SplittingResult r = splitting_type(f, p, q);
      const bool oracle_says = oracle::pairwise_incidence_unbalanced(f, oracle::residues(p), oracle::residues(q), gen);
      CHECK((r.type == SplittingType::unbalanced()) == oracle_says);
      if (r.cone) {
        ++unbalanced;
        // the vertex lies on the line at five parameters
        for (int k = 0; k < 5; ++k) {
          const Scalar s = rng.scalar(F101), u = rng.nonzero_scalar(F101);
          Vector t;
          for (std::size_t i = 0; i < p.size(); ++i) t.push_back(s * p[i] + u * q[i]);
          CHECK(point_on_line(r.cone->vertex, evaluate_family(f, t)));
        }
      }
    }
    if (e == Example::Cone || e == Example::Chordal || e == Example::QuadricLine) CHECK(unbalanced > 0);
  }
}

TEST_CASE("splitting errors") {
  const LineFamily split = make(Example::Split, Q, 2);
  CHECK_THROWS_AS(splitting_type(split, vec(Q, {1, 2, 3}), vec(Q, {2, 4, 6})), Error);

  LineFamily constant(Q, 2, 3);
  PolyParseOptions o;
  o.nvars = 3;
  constant.set_entry(0, 1, parse_poly("t0^2", Q, o));
  try {
    (void)splitting_type(constant, vec(Q, {1, 0, 0}), vec(Q, {1, 1, 0}));
    FAIL("contracted line accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ContractedLine);
  }
  try {
    (void)splitting_type(constant, vec(Q, {0, 1, 0}), vec(Q, {0, 0, 1}));
    FAIL("base line accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BasePoint);
  }
}

TEST_CASE("jumping lines in the plane") {
  Rng rng(6);
  JumpingOptions o;
  o.exhaustive = true;

  const JumpingReport split = enumerate_jumping(make(Example::Split, F101, 2), rng, o);
  CHECK(split.total == 10303);
  CHECK(split.jumping == 0);
  CHECK(split.codim == 2);

  const LineFamily chordal = make(Example::Chordal, F101);
  const JumpingReport ch = enumerate_jumping(chordal, rng, o);
  CHECK(ch.mode == "exhaustive");
  CHECK(ch.coordinates == "dual");
  CHECK(ch.jumping == 102);
  CHECK(ch.codim == 1);
  REQUIRE(ch.fit.has_value());
  CHECK(ch.fit->degree == 2);
  CHECK(ch.fit->nullity == 1);
  // a smooth conic: its symmetric matrix is nonsingular
  const HomForm& conic = ch.fit->forms.at(0);
  Matrix sym(F101, 3, 3);
  const Scalar half = F101.one() / F101.from_int(2);
  for (const auto& [e, c] : conic.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 3; ++i)
      for (int r = 0; r < e[i]; ++r) idx.push_back(i);
    if (idx[0] == idx[1]) sym(idx[0], idx[0]) += c;
    else {
      sym(idx[0], idx[1]) += c * half;
      sym(idx[1], idx[0]) += c * half;
    }
  }
  CHECK_FALSE(determinant(sym).is_zero());
  for (const auto& l : ch.lines) CHECK(conic.evaluate(l).is_zero());

  const JumpingReport ql = enumerate_jumping(make(Example::QuadricLine, F101), rng, o);
  CHECK(ql.jumping == 102);
  CHECK(ql.codim == 1);
  REQUIRE(ql.fit.has_value());
  CHECK(ql.fit->degree == 1);
  CHECK(ql.fit->nullity == 1);
}

TEST_CASE("fundamental curves") {
  Rng rng(7);
  JumpingOptions o;
  o.exhaustive = true;
  const LineFamily chordal = make(Example::Chordal, F101);
  const FundamentalCurve c = fundamental_curve(chordal, enumerate_jumping(chordal, rng, o));
  CHECK(c.verdict == CurveVerdict::RationalNormalCubic);
  CHECK(c.vertices.size() == 102);
  CHECK(c.span_rank == 4);
  CHECK(c.quadrics == 3);
  // vertices are points (1:a:a^2:a^3) or (0:0:0:1)
  for (const auto& v : c.vertices) {
    if (v[0].is_zero()) {
      CHECK(proportional(v, vec(F101, {0, 0, 0, 1})));
      continue;
    }
    const Scalar a = v[1] / v[0];
    CHECK(v[2] / v[0] == a * a);
    CHECK(v[3] / v[0] == a * a * a);
  }

  const LineFamily ql = make(Example::QuadricLine, F101);
  const FundamentalCurve l = fundamental_curve(ql, enumerate_jumping(ql, rng, o));
  CHECK(l.verdict == CurveVerdict::Line);
  CHECK(l.span_rank == 2);

  // negative control: points in general position
  std::vector<Vector> scattered;
  for (int i = 0; i < 12; ++i) scattered.push_back(rng.nonzero_vector(F101, 5));
  CHECK(classify_vertex_set(F101, scattered).verdict == CurveVerdict::Other);

  JumpingOptions sampled;
  sampled.exhaustive = false;
  sampled.trials = 500;
  try {
    (void)fundamental_curve(chordal, enumerate_jumping(chordal, rng, sampled));
    FAIL("sampled report accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyJumpingSet);
  }
  const LineFamily split = make(Example::Split, F101, 2);
  CHECK_THROWS_AS(fundamental_curve(split, enumerate_jumping(split, rng, o)), Error);
}

TEST_CASE("every chord meets the twisted cubic twice over F_p^2") {
  const LineFamily chordal = make(Example::Chordal, F101);
  Rng rng(8);
  int tangents = 0;
  for (int i = 0; i < 12; ++i) {
    oracle::Row t = oracle::residues(rng.nonzero_vector(F101, 3));
    if (i == 0) t = {1, 2, 1};  // s1^2 = 4 s0 s2: a tangent
    const oracle::u64 disc = (t[1] * t[1] + 101 * 101 - 4 * t[0] * t[2] % 101) % 101;
    const int expected = disc == 0 ? 1 : 2;
    tangents += disc == 0;
    CHECK(oracle::cubic_points_on_line(oracle::eval_w(chordal, t), 101) == expected);
  }
  CHECK(tangents >= 1);
}

TEST_CASE("jumping lines of the quadric family form a linear complex") {
  const Field f7 = Field::prime(7);
  const LineFamily quadric = make(Example::Quadric, f7);
  Rng rng(9);
  CHECK(exhaustive_feasible(3, 7));
  CHECK_FALSE(exhaustive_feasible(3, 11));
  CHECK(count_source_lines(3, 7) == 2850);
  JumpingOptions o;
  o.exhaustive = true;
  const JumpingReport r = enumerate_jumping(quadric, rng, o);
  CHECK(r.total == 2850);
  CHECK(r.coordinates == "pluecker");
  // a nondegenerate linear complex of P^3(F_7) has (p+1)(p^2+1) lines
  CHECK(r.jumping == 400);
  REQUIRE(r.fit.has_value());
  CHECK(r.fit->degree == 1);
  CHECK(r.fit->monomials == 6);
  CHECK(r.fit->rank == 5);
  CHECK(r.fit->nullity == 1);
  CHECK(r.codim == 1);
}

TEST_CASE("sampled jumping counts") {
  Rng rng(10);
  JumpingOptions o;
  o.exhaustive = false;
  const JumpingReport q = enumerate_jumping(make(Example::Quadric, F101), rng, o);
  CHECK(q.mode == "sampled");
  CHECK(q.total == 10100);
  CHECK(q.codim == 1);
  CHECK(q.lines.empty());
  const JumpingReport s = enumerate_jumping(make(Example::Split, F101, 3), rng, o);
  CHECK(s.jumping == 0);
  CHECK(s.codim == 2);
}
