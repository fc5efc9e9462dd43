#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vlines/extfield.hpp"
#include "vlines/grammar.hpp"
#include "vlines/planar.hpp"
#include "vlines/unipoly.hpp"

using namespace vlines;

namespace {

const Field Q = Field::rationals();
const Field F101 = Field::prime(101);

Vector vec(Field k, std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.push_back(k.from_int(x));
  return v;
}

HomForm random_form(Field k, int nvars, int degree, Rng& rng) {
  HomForm f(k, nvars, degree);
  for (const auto& e : monomial_basis(nvars, degree))
    if (rng.uniform(0, 2) == 0) f.add_term(e, rng.scalar(k));
  return f;
}

}  // namespace

TEST_CASE("scalars obey the field axioms exactly") {
  Rng rng(3);
  for (Field k : {Q, F101, Field::prime(7)}) {
    for (int i = 0; i < 200; ++i) {
      const Scalar a = rng.scalar(k), b = rng.scalar(k), c = rng.scalar(k);
      CHECK(a + (-a) == k.zero());
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == k.one());
    }
  }
  CHECK(Q.from_int(1) / Q.from_int(3) + Q.from_int(2) / Q.from_int(3) == Q.one());
  CHECK(F101.from_int(-1) == F101.from_int(100));
}

TEST_CASE("scalars from different fields never combine") {
  CHECK_THROWS_AS(Q.one() + F101.one(), Error);
  CHECK_THROWS_AS(F101.one() * Field::prime(103).one(), Error);
  try {
    (void)(Q.one() - F101.one());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("prime fields need a prime of at least 5") {
  CHECK_THROWS_AS(Field::prime(4), Error);
  CHECK_THROWS_AS(Field::prime(3), Error);
  CHECK_THROWS_AS(Field::prime(91), Error);
  CHECK(Field::prime(5).characteristic() == 5);
}

TEST_CASE("arithmetic mod p agrees with rational arithmetic reduced mod p") {
  std::mt19937_64 gen(17);
  std::uniform_int_distribution<int> small(-50, 50), op(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    Scalar q = Q.from_int(small(gen));
    Scalar r = F101.from_rational(q.rational());
    for (int step = 0; step < 8; ++step) {
      const int x = small(gen);
      const Scalar qx = Q.from_int(x), rx = F101.from_int(x);
      switch (op(gen)) {
        case 0: q += qx; r += rx; break;
        case 1: q -= qx; r -= rx; break;
        case 2: q *= qx; r *= rx; break;
        default:
          if (x % 101 == 0) break;  // division by a multiple of p
          q /= qx;
          r /= rx;
      }
    }
    CHECK(F101.from_rational(q.rational()) == r);
  }
}

TEST_CASE("evaluation of forms") {
  const HomForm t0sq = HomForm::variable(Q, 3, 0).pow(2);
  CHECK(t0sq.evaluate(vec(Q, {0, 1, 5})).is_zero());

  Rng rng(5);
  const HomForm t0t1 = HomForm::variable(F101, 2, 0) * HomForm::variable(F101, 2, 1);
  for (int i = 0; i < 20; ++i) {
    const Vector x = rng.vector(F101, 2);
    const Scalar lam = rng.nonzero_scalar(F101);
    const Vector y{lam * x[0], lam * x[1]};
    CHECK(t0t1.evaluate(y) == lam * lam * t0t1.evaluate(x));
  }
  const HomForm disc = parse_poly("s1^2 - 4*s0*s2", Q);
  CHECK(disc.evaluate(vec(Q, {1, 2, 1})).is_zero());
}

TEST_CASE("homogeneity holds for random forms") {
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    const int d = static_cast<int>(rng.uniform(1, 3));
    const HomForm f = random_form(F101, 4, d, rng);
    const Vector x = rng.vector(F101, 4);
    const Scalar lam = rng.nonzero_scalar(F101);
    Vector y;
    for (const auto& s : x) y.push_back(lam * s);
    CHECK(f.evaluate(y) == lam.pow(static_cast<std::uint64_t>(d)) * f.evaluate(x));
  }
}

TEST_CASE("forms of different degree do not add") {
  const HomForm a = HomForm::variable(Q, 3, 0);
  const HomForm b = a * a;
  CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("no zero coefficients are stored") {
  HomForm f = parse_poly("t0*t1 + t1^2", Q);
  f -= parse_poly("t0*t1", Q);
  CHECK(f.size() == 1);
  for (const auto& [e, c] : f.terms()) {
    CHECK_FALSE(c.is_zero());
    CHECK(e[0] + e[1] == 2);
  }
}

TEST_CASE("restriction to a line") {
  const Vector e0 = vec(Q, {1, 0, 0}), e1 = vec(Q, {0, 1, 0});
  const HomForm t0 = HomForm::variable(Q, 3, 0), t1 = HomForm::variable(Q, 3, 1);
  CHECK(substitute_line(t0, e0, e1) == HomForm::variable(Q, 2, 0));
  CHECK(substitute_line(t0 * t1, e0, e1) == HomForm::variable(Q, 2, 0) * HomForm::variable(Q, 2, 1));
  CHECK_THROWS_AS(substitute_line(t0, e0, vec(Q, {2, 0, 0})), Error);

  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const HomForm f = random_form(F101, 3, 2, rng);
    const Vector p = rng.vector(F101, 3), q = rng.vector(F101, 3);
    if (proportional(p, q) || is_zero_vector(p) || is_zero_vector(q)) continue;
    const HomForm g = substitute_line(f, p, q);
    for (int k = 0; k < 5; ++k) {
      const Scalar s = rng.scalar(F101), u = rng.scalar(F101);
      Vector x;
      for (int i = 0; i < 3; ++i) x.push_back(s * p[static_cast<std::size_t>(i)] + u * q[static_cast<std::size_t>(i)]);
      CHECK(g.evaluate(Vector{s, u}) == f.evaluate(x));
    }
  }
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(Matrix(Q, 2, 3)).size() == 3);
  CHECK(kernel_basis(Matrix::identity(F101, 4)).empty());

  Rng rng(9);
  const Matrix a = rng.full_rank_matrix(F101, 4, 6);
  const auto ker = kernel_basis(a);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK(is_zero_vector(a.apply(v)));

  for (Field k : {Q, F101}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto rows = static_cast<std::size_t>(rng.uniform(1, 5));
      const auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
      Matrix m = rng.matrix(k, rows, cols);
      if (trial % 3 == 0 && rows > 1)  // force a dependent row
        for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * k.from_int(2);
      const auto kb = kernel_basis(m);
      CHECK(rank(m) + kb.size() == cols);
      for (const auto& v : kb) CHECK(is_zero_vector(m.apply(v)));
      CHECK(rank_of_vectors(k, kb) == kb.size());
    }
  }
}

TEST_CASE("span dimension of forms") {
  const HomForm t0 = HomForm::variable(Q, 2, 0), t1 = HomForm::variable(Q, 2, 1);
  const std::vector<HomForm> dup{t0 * t0, t0 * t0, t1 * t1};
  CHECK(span_dimension(dup) == 2);
  for (int n = 1; n <= 4; ++n) {
    std::vector<HomForm> all;
    for (const auto& e : monomial_basis(n + 1, 2)) {
      HomForm m(Q, n + 1, 2);
      m.add_term(e, Q.one());
      all.push_back(m);
    }
    CHECK(span_dimension(all) == (n + 2) * (n + 1) / 2);
  }
}

TEST_CASE("polynomial grammar") {
  const HomForm d = parse_poly("s1^2 - 4*s0*s2", Q);
  CHECK(d.degree() == 2);
  CHECK(d.nvars() == 3);
  CHECK(d.size() == 2);  // s1^2 and s0*s2

  try {
    (void)parse_poly("s0 + s1^2", Q);
    FAIL("inhomogeneous input accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("s0") != std::string::npos);
  }
  try {
    (void)parse_poly("t0 * * t1", Q);
    FAIL("syntax error accepted");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(parse_poly("t0*s1", Q), Error);
  CHECK(parse_poly("1/2*t0^2", Q).coefficient({2}) == Q.from_int(1) / Q.from_int(2));
  CHECK(parse_poly("-t0^2", F101).coefficient({2}) == F101.from_int(100));
  CHECK(format_poly(parse_poly("t1^2 + t0*t2 - 3*t0^2", Q)) == "-3*t0^2 + t0*t2 + t1^2");
  CHECK(format_poly(HomForm(Q, 3, 2)) == "0");
}

TEST_CASE("printing then parsing gives back the same form") {
  Rng rng(10);
  for (int i = 0; i < 500; ++i) {
    const Field k = i % 2 ? Q : F101;
    const int nvars = static_cast<int>(rng.uniform(1, 5));
    const int degree = static_cast<int>(rng.uniform(0, 3));
    HomForm f = random_form(k, nvars, degree, rng);
    if (k.is_rational() && !f.is_zero() && i % 4 == 1) f *= Q.from_int(1) / Q.from_int(static_cast<int>(rng.uniform(2, 9)));
    PolyParseOptions opts;
    opts.nvars = nvars;
    opts.degree = degree;
    const HomForm g = parse_poly(format_poly(f), k, opts);
    CHECK(g == f);
  }
}

TEST_CASE("univariate helpers in characteristic p") {
  const Field f7 = Field::prime(7);
  const UniPoly x = UniPoly::x(f7);
  // x^2 + 1 has no root mod 7 (7 = 3 mod 4) but two in F_49
  const UniPoly q = x * x + UniPoly::constant(f7.one());
  CHECK(count_roots_in_extension(q, 1) == 0);
  CHECK(count_roots_in_extension(q, 2) == 2);
  CHECK(count_roots_in_extension(q, 3) == 0);
  // x^7 has zero derivative; its radical is x
  UniPoly x7 = UniPoly::constant(f7.one());
  for (int i = 0; i < 7; ++i) x7 = x7 * x;
  CHECK(squarefree_part(x7).degree() == 1);
  // (x - 1)^2 (x - 2)
  const UniPoly a = (x - UniPoly::constant(f7.one())) * (x - UniPoly::constant(f7.one())) * (x - UniPoly::constant(f7.from_int(2)));
  CHECK(squarefree_part(a).degree() == 2);
  CHECK(count_roots_in_extension(a, 1) == 2);
  CHECK(gcd(a, a.derivative()).degree() == 1);
}

TEST_CASE("extension field arithmetic") {
  for (int k = 1; k <= 3; ++k) {
    const ExtensionField e(7, k);
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
      const auto a = e.element(static_cast<std::uint64_t>(rng.uniform(1, static_cast<std::int64_t>(e.size()) - 1)));
      const auto one = e.mul(a, e.inv(a));
      CHECK(one == e.one());
      CHECK(e.pow(a, e.size() - 1) == e.one());
    }
  }
}

TEST_CASE("planar zero counts match enumeration over F_7, F_49 and F_343") {
  const Field f7 = Field::prime(7);
  Rng rng(12);
  int compared = 0;
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<HomForm> forms{random_form(f7, 3, 2, rng), random_form(f7, 3, 2, rng)};
    if (trial % 3 == 0) forms.push_back(forms[0] * f7.from_int(3) + forms[1]);  // dependent third form
    PlanarCount c;
    try {
      c = count_planar_points(forms, rng);
    } catch (const Error&) {
      continue;  // no separating change over such a small field
    }
    if (!c.finite) continue;
    for (int k = 1; k <= 3; ++k)
      CHECK(static_cast<std::uint64_t>(c.over_extension[static_cast<std::size_t>(k - 1)]) == oracle::count_plane_zeros(forms, 7, k));
    CHECK(c.closure <= 4);
    ++compared;
  }
  CHECK(compared >= 6);
}

TEST_CASE("two conics sharing a component are not finite") {
  const Field f7 = Field::prime(7);
  Rng rng(13);
  PolyParseOptions three;
  three.nvars = 3;
  const HomForm l = parse_poly("t0 + 2*t1 - t2", f7, three);
  const std::vector<HomForm> forms{l * parse_poly("t0", f7, three), l * parse_poly("t1 - t2", f7, three)};
  CHECK_FALSE(count_planar_points(forms, rng).finite);
}
