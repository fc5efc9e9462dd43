#include "vlines/atlas.hpp"

#include <array>

namespace vlines {

std::optional<Example> parse_example(std::string_view id) {
  static const std::array<std::pair<std::string_view, std::string_view>, 5> names{{
      {"split", "2.1"}, {"cone", "2.2"}, {"chordal", "2.3"}, {"quadric", "2.4"}, {"quadric-line", "2.5"}}};
  for (std::size_t i = 0; i < names.size(); ++i)
    if (id == names[i].first || id == names[i].second) return static_cast<Example>(i);
  return std::nullopt;
}

std::string example_name(Example e) {
  switch (e) {
    case Example::Split: return "split";
    case Example::Cone: return "cone";
    case Example::Chordal: return "chordal";
    case Example::Quadric: return "quadric";
    case Example::QuadricLine: return "quadric-line";
  }
  return "?";
}

std::string example_id(Example e) { return "2." + std::to_string(static_cast<int>(e) + 1); }

int default_source_dim(Example e) { return e == Example::Quadric ? 3 : 2; }

namespace {

HomForm monomial(Field k, int nvars, std::initializer_list<int> vars) {
  Exponents e(static_cast<std::size_t>(nvars), 0);
  for (int v : vars) ++e[static_cast<std::size_t>(v)];
  HomForm f(k, nvars, static_cast<int>(vars.size()));
  f.add_term(e, k.one());
  return f;
}

LineFamily split_family(int n, Field k) {
  LineFamily f(k, n, 2 * n + 1, "split n=" + std::to_string(n));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) f.set_entry(i, n + 1 + j, monomial(k, n + 1, {i, j}));
  return f;
}

LineFamily cone_family(int n, Field k) {
  const auto basis = monomial_basis(n + 1, 2);
  LineFamily f(k, n, static_cast<int>(basis.size()), "cone n=" + std::to_string(n));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    HomForm m(k, n + 1, 2);
    m.add_term(basis[c], k.one());
    f.set_entry(0, static_cast<int>(c) + 1, m);
  }
  return f;
}

LineFamily chordal_family(Field k) {
  LineFamily f(k, 2, 3, "chordal");
  f.set_entry(0, 1, monomial(k, 3, {0, 0}));
  f.set_entry(0, 2, monomial(k, 3, {0, 1}));
  f.set_entry(0, 3, monomial(k, 3, {1, 1}) - monomial(k, 3, {0, 2}));
  f.set_entry(1, 2, monomial(k, 3, {0, 2}));
  f.set_entry(1, 3, monomial(k, 3, {1, 2}));
  f.set_entry(2, 3, monomial(k, 3, {2, 2}));
  return f;
}

using Antisym = std::array<std::array<Scalar, 4>, 4>;

Antisym elementary(Field k, int a, int b) {
  Antisym m;
  for (auto& row : m) row.fill(k.zero());
  m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = k.one();
  m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -k.one();
  return m;
}

// M t as four linear forms.
std::array<HomForm, 4> act_on(const Antisym& m, Field k) {
  std::array<HomForm, 4> out{HomForm(k, 4, 1), HomForm(k, 4, 1), HomForm(k, 4, 1), HomForm(k, 4, 1)};
  for (std::size_t r = 0; r < 4; ++r) out[r] = HomForm::linear(m[r]);
  return out;
}

// Sections of the twisted cotangent bundle of P^3 are antisymmetric A,
// acting as t -> A t. A section with nonzero Pfaffian vanishes nowhere; the
// quotient bundle has the other five elementary sections as a basis, and
// the Pluecker coordinate of sections i, j at t is the factor lambda in
// det[B_i t, B_j t, A t, x] = lambda * (t . x).
LineFamily quadric_family(Field k, Rng& rng) {
  Antisym a;
  for (;;) {
    for (auto& row : a) row.fill(k.zero());
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const Scalar s = rng.scalar(k);
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
        a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -s;
      }
    const Scalar pf = a[0][1] * a[2][3] - a[0][2] * a[1][3] + a[0][3] * a[1][2];
    if (!pf.is_zero()) break;
  }
  std::vector<std::pair<int, int>> pairs;
  bool dropped = false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (!dropped && !a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) {
        dropped = true;  // A has a component here, so the others span the quotient
        continue;
      }
      pairs.emplace_back(i, j);
    }
  const auto at = act_on(a, k);
  std::vector<std::array<HomForm, 4>> sections;
  for (const auto& [i, j] : pairs) sections.push_back(act_on(elementary(k, i, j), k));

  LineFamily f(k, 3, 4, "quadric");
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      const auto& u = sections[static_cast<std::size_t>(i)];
      const auto& v = sections[static_cast<std::size_t>(j)];
      // expand along the column e_0: the determinant is minus the minor on rows 1..3
      const HomForm det3 = u[1] * (v[2] * at[3] - v[3] * at[2]) - u[2] * (v[1] * at[3] - v[3] * at[1]) +
                           u[3] * (v[1] * at[2] - v[2] * at[1]);
      f.set_entry(i, j, -det3.divide_by_variable(0));
    }
  return f;
}

LineFamily restrict_to_plane(const LineFamily& f, const Matrix& plane) {
  std::vector<HomForm> images;
  for (std::size_t r = 0; r < plane.rows(); ++r) images.push_back(HomForm::linear(plane.row(r)));
  LineFamily out(f.field(), static_cast<int>(plane.cols()) - 1, f.N(), "quadric-line");
  for (const auto& [i, j] : f.upper_indices()) out.set_entry(i, j, f.entry(i, j).substitute(images));
  return out;
}

}  // namespace

LineFamily atlas(Example e, int n, Field field, Rng& rng) {
  const auto need = [&](int want) {
    if (n != want)
      throw Error(ErrorCode::WrongDimension, example_name(e) + " family needs n = " + std::to_string(want) + ", got " + std::to_string(n));
  };
  switch (e) {
    case Example::Split:
      if (n < 1) throw Error(ErrorCode::WrongDimension, "split family needs n >= 1");
      return split_family(n, field);
    case Example::Cone:
      if (n < 1) throw Error(ErrorCode::WrongDimension, "cone family needs n >= 1");
      return cone_family(n, field);
    case Example::Chordal:
      need(2);
      return chordal_family(field);
    case Example::Quadric:
      need(3);
      return quadric_family(field, rng);
    case Example::QuadricLine: {
      need(2);
      const LineFamily q = quadric_family(field, rng);
      for (int attempt = 0; attempt < 20; ++attempt) {
        const Matrix plane = rng.full_rank_matrix(field, 4, 3);
        LineFamily f = restrict_to_plane(q, plane);
        if (scan_basepoints(f, rng).ok && embedding_spotcheck(f, rng, 20).ok()) return f;
      }
      throw Error(ErrorCode::Internal, "no general plane found in 20 attempts");
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown example");
}

}  // namespace vlines
