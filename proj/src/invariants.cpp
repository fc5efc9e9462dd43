#include "vlines/invariants.hpp"

#include <map>

namespace vlines {

namespace {

// u^T W v as a quadric.
HomForm pair_form(const LineFamily& f, const Vector& u, const Vector& v) {
  HomForm out(f.field(), f.n() + 1, 2);
  for (const auto& [i, j] : f.upper_indices()) {
    const HomForm& e = f.entry(i, j);
    if (e.is_zero()) continue;
    const Scalar c = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] -
                     u[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(i)];
    if (!c.is_zero()) out += e * c;
  }
  return out;
}

}  // namespace

Flag random_flag(Field field, int ambient_dim, Flag::Kind kind, Rng& rng) {
  const auto dim = static_cast<std::size_t>(ambient_dim + 1);
  if (kind == Flag::Kind::Order) {
    const Matrix a = rng.full_rank_matrix(field, dim - 3, dim);
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < a.rows(); ++i) basis.push_back(a.row(i));
    return Flag::order(ambient_dim, std::move(basis));
  }
  const Vector h = rng.nonzero_vector(field, dim);
  std::vector<Vector> b = annihilator(field, dim, {h});
  const Matrix mix = rng.full_rank_matrix(field, dim - 2, b.size());
  std::vector<Vector> a;
  for (std::size_t i = 0; i < mix.rows(); ++i) {
    Vector v(dim, field.zero());
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t c = 0; c < dim; ++c) v[c] += mix(i, k) * b[k][c];
    a.push_back(std::move(v));
  }
  return Flag::class_flag(ambient_dim, std::move(a), std::move(b));
}

FlagCount schubert_count(const LineFamily& f, const Flag& flag, Rng& rng) {
  if (f.n() != 2) throw Error(ErrorCode::WrongDimension, "Schubert counts are defined for surfaces (n = 2)");
  if (!f.field().is_prime()) throw Error(ErrorCode::InvalidArgument, "Schubert counts run over a prime field");
  const auto dim = static_cast<std::size_t>(f.N() + 1);
  std::vector<HomForm> forms;
  if (flag.kind == Flag::Kind::Order) {
    // the line u^v meets A iff h_a(u) h_b(v) - h_a(v) h_b(u) = 0 for A's annihilator
    const auto h = annihilator(f.field(), dim, flag.a);
    for (std::size_t a = 0; a < h.size(); ++a)
      for (std::size_t b = a + 1; b < h.size(); ++b) forms.push_back(pair_form(f, h[a], h[b]));
  } else {
    // contained in B = {H = 0}: W H = 0; such a line meets the hyperplane A of B anyway
    const auto hs = annihilator(f.field(), dim, flag.b);
    const Vector& h = hs.front();
    for (int i = 0; i <= f.N(); ++i) {
      Vector e(dim, f.field().zero());
      e[static_cast<std::size_t>(i)] = f.field().one();
      forms.push_back(pair_form(f, e, h));
    }
  }
  const PlanarCount c = count_planar_points(forms, rng);
  FlagCount out;
  out.finite = c.finite;
  out.closure = c.finite ? c.closure : -1;
  out.over_extension = c.over_extension;
  return out;
}

SchubertCount schubert_count(const LineFamily& input, Flag::Kind kind, Rng& rng, int repetitions) {
  if (repetitions < 1) throw Error(ErrorCode::InvalidArgument, "repetitions must be positive");
  const LineFamily f = over_prime_field(input);
  SchubertCount out;
  out.kind = kind;
  out.prime = f.field().characteristic();
  std::map<int, int> tally;
  for (int r = 0; r < repetitions; ++r) {
    const Flag flag = random_flag(f.field(), f.N(), kind, rng);
    out.flags.push_back(schubert_count(f, flag, rng));
    ++tally[out.flags.back().closure];
  }
  int best = -1;
  for (const auto& [value, times] : tally)
    if (times > best) {
      best = times;
      out.modal = value;
    }
  out.unanimous = tally.size() == 1;
  if (!out.unanimous) {
    out.warning = "special position: observed";
    for (const auto& c : out.flags) out.warning += " " + std::to_string(c.closure);
  }
  return out;
}

BidegreeReport bidegree(const LineFamily& f, Rng& rng, int repetitions) {
  BidegreeReport r;
  r.order = schubert_count(f, Flag::Kind::Order, rng, repetitions);
  r.klass = schubert_count(f, Flag::Kind::Class, rng, repetitions);
  r.value = {r.order.modal, r.klass.modal};
  return r;
}

namespace {

// W(t) c, a point on the line at t.
Vector swept_point(const std::vector<std::vector<Scalar>>& w, std::span<const Scalar> c) {
  Vector y(w.size(), c[0].field().zero());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (!w[i][j].is_zero()) y[i] += w[i][j] * c[j];
  return y;
}

std::vector<std::vector<Scalar>> evaluate_matrix(const LineFamily& f, std::span<const Scalar> t) {
  const auto m = static_cast<std::size_t>(f.N() + 1);
  std::vector<std::vector<Scalar>> w(m, std::vector<Scalar>(m, f.field().zero()));
  for (const auto& [i, j] : f.upper_indices()) {
    const Scalar v = f.entry(i, j).evaluate(t);
    w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    w[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -v;
  }
  return w;
}

std::optional<Vector> sample_swept(const LineFamily& f, Rng& rng) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    const Vector t = rng.nonzero_vector(f.field(), static_cast<std::size_t>(f.n() + 1));
    const Vector c = rng.vector(f.field(), static_cast<std::size_t>(f.N() + 1));
    Vector y = swept_point(evaluate_matrix(f, t), c);
    if (!is_zero_vector(y)) return y;
  }
  return std::nullopt;
}

Scalar monomial_value(const Exponents& e, const Vector& y) {
  Scalar v = y[0].field().one();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int k = 0; k < e[i]; ++k) v *= y[i];
  return v;
}

}  // namespace

SweptReport swept_variety(const LineFamily& f, Rng& rng, int samples) {
  if (samples < 20) throw Error(ErrorCode::InvalidArgument, "swept variety needs at least 20 samples");
  SweptReport out;
  out.seed = rng.seed();
  const Field k = f.field();
  const auto m = static_cast<std::size_t>(f.N() + 1);
  const auto src = static_cast<std::size_t>(f.n() + 1);

  // Jacobian of (t, c) -> W(t) c: columns dW/dt_i c and the columns of W(t)
  std::vector<std::vector<std::vector<HomForm>>> dw(src);
  for (std::size_t v = 0; v < src; ++v) {
    dw[v].assign(m, std::vector<HomForm>(m, HomForm(k, f.n() + 1, 1)));
    for (const auto& [i, j] : f.upper_indices()) {
      const HomForm d = f.entry(i, j).derivative(static_cast<int>(v));
      dw[v][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d;
      dw[v][static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -d;
    }
  }
  for (int draw = 0; draw < 5; ++draw) {
    const Vector t = rng.nonzero_vector(k, src);
    const Vector c = rng.vector(k, m);
    const auto w = evaluate_matrix(f, t);
    std::vector<Vector> cols;
    for (std::size_t v = 0; v < src; ++v) {
      std::vector<std::vector<Scalar>> dv(m, std::vector<Scalar>(m, k.zero()));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) dv[i][j] = dw[v][i][j].evaluate(t);
      cols.push_back(swept_point(dv, c));
    }
    for (std::size_t j = 0; j < m; ++j) {
      Vector col(m, k.zero());
      for (std::size_t i = 0; i < m; ++i) col[i] = w[i][j];
      cols.push_back(std::move(col));
    }
    out.dimension = std::max(out.dimension, static_cast<int>(rank_of_vectors(k, cols)) - 1);
  }

  if (f.N() > 7) return out;
  out.fitted = true;
  const auto mono = monomial_basis(static_cast<int>(m), 2);
  out.monomials = static_cast<int>(mono.size());
  out.samples = std::max(samples, out.monomials + 10);
  std::vector<Vector> pts;
  for (int s = 0; s < out.samples; ++s)
    if (auto y = sample_swept(f, rng)) pts.push_back(std::move(*y));
  Matrix sys(k, pts.size(), mono.size());
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t c = 0; c < mono.size(); ++c) sys(r, c) = monomial_value(mono[c], pts[r]);
  for (const auto& v : kernel_basis(sys)) {
    out.quadrics.push_back(HomForm::from_dense(k, static_cast<int>(m), 2, v));
    out.ranks.push_back(quadric_rank(out.quadrics.back()));
  }
  out.verified = true;
  for (int s = 0; s < 100; ++s) {
    const auto y = sample_swept(f, rng);
    if (!y) continue;
    ++out.fresh_points;
    for (const auto& q : out.quadrics)
      if (!q.evaluate(*y).is_zero()) out.verified = false;
  }
  return out;
}

std::optional<Vector> global_vertex(const LineFamily& f) {
  const auto basis = monomial_basis(f.n() + 1, 2);
  const int m = f.N() + 1;
  std::vector<Vector> rows;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        const auto cjk = f.entry(j, k).dense_coefficients();
        const auto cik = f.entry(i, k).dense_coefficients();
        const auto cij = f.entry(i, j).dense_coefficients();
        for (std::size_t b = 0; b < basis.size(); ++b) {
          if (cjk[b].is_zero() && cik[b].is_zero() && cij[b].is_zero()) continue;
          Vector row(static_cast<std::size_t>(m), f.field().zero());
          row[static_cast<std::size_t>(i)] = cjk[b];
          row[static_cast<std::size_t>(j)] = -cik[b];
          row[static_cast<std::size_t>(k)] = cij[b];
          rows.push_back(std::move(row));
        }
      }
  if (rows.empty()) return std::nullopt;
  const auto ker = kernel_basis(Matrix::from_rows(f.field(), rows, static_cast<std::size_t>(m)));
  if (ker.empty()) return std::nullopt;
  return normalize_projective(ker.front());
}

int quadric_rank(const HomForm& q) {
  if (q.degree() != 2) throw Error(ErrorCode::InvalidArgument, "quadric_rank expects a quadratic form");
  const Field k = q.field();
  const auto n = static_cast<std::size_t>(q.nvars());
  Matrix s(k, n, n);
  const Scalar half = k.from_int(2).inverse();
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (int r = 0; r < e[i]; ++r) idx.push_back(i);
    if (idx[0] == idx[1]) {
      s(idx[0], idx[0]) = c;
    } else {
      s(idx[0], idx[1]) = c * half;
      s(idx[1], idx[0]) = c * half;
    }
  }
  return static_cast<int>(rank(s));
}

}  // namespace vlines
