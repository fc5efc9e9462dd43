#include "vlines/splitting.hpp"

#include <cmath>

#include "fp_kernel.hpp"

namespace vlines {

namespace {

// Index of the upper entry (i, j), i < j, in upper_indices() order.
std::vector<std::vector<int>> entry_positions(int N) {
  std::vector<std::vector<int>> pos(static_cast<std::size_t>(N + 1), std::vector<int>(static_cast<std::size_t>(N + 1), -1));
  int k = 0;
  for (int i = 0; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k++;
  return pos;
}

struct Triple {
  int i, j, k;     // i < j < k
  int jk, ik, ij;  // entry positions
};

std::vector<Triple> triples(int N) {
  const auto pos = entry_positions(N);
  std::vector<Triple> out;
  for (int i = 0; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      for (int k = j + 1; k <= N; ++k)
        out.push_back({i, j, k, pos[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)],
                       pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                       pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
  return out;
}

}  // namespace

SplittingResult splitting_type(const LineFamily& f, std::span<const Scalar> p, std::span<const Scalar> q) {
  const auto dim = static_cast<std::size_t>(f.n() + 1);
  if (p.size() != dim || q.size() != dim) throw Error(ErrorCode::InvalidArgument, "line points have wrong length");
  if (is_zero_vector(p) || is_zero_vector(q) || proportional(p, q))
    throw Error(ErrorCode::DegenerateLine, "points do not span a line");
  const Field k = f.field();
  Vector sum(dim, k.zero());
  for (std::size_t i = 0; i < dim; ++i) sum[i] = p[i] + q[i];

  // W(s p + u q) = s^2 A + s u B + u^2 C
  const auto entries = f.upper_entries();
  std::array<Vector, 3> coef;
  for (const auto& e : entries) {
    const Scalar a = e.evaluate(p), c = e.evaluate(q);
    coef[0].push_back(a);
    coef[1].push_back(e.evaluate(sum) - a - c);
    coef[2].push_back(c);
  }
  const std::size_t r = rank_of_vectors(k, {coef[0], coef[1], coef[2]});
  if (r == 0) throw Error(ErrorCode::BasePoint, "W vanishes on the whole line");
  if (r == 1) throw Error(ErrorCode::ContractedLine, "the source line maps to a single line");

  const auto tri = triples(f.N());
  Matrix sys(k, 3 * tri.size(), static_cast<std::size_t>(f.N() + 1));
  std::size_t row = 0;
  for (const auto& t : tri)
    for (const auto& c : coef) {
      sys(row, static_cast<std::size_t>(t.i)) = c[static_cast<std::size_t>(t.jk)];
      sys(row, static_cast<std::size_t>(t.j)) = -c[static_cast<std::size_t>(t.ik)];
      sys(row, static_cast<std::size_t>(t.k)) = c[static_cast<std::size_t>(t.ij)];
      ++row;
    }
  const auto ker = kernel_basis(sys);
  if (ker.empty()) return {SplittingType::balanced(), std::nullopt};
  ConeCertificate cert{normalize_projective(ker.front()), Vector(p.begin(), p.end()), Vector(q.begin(), q.end()),
                       static_cast<int>(ker.size())};
  return {SplittingType::unbalanced(), std::move(cert)};
}

namespace {

Vector random_point(Rng& rng, Field k, std::size_t dim) { return rng.nonzero_vector(k, dim); }

std::pair<Vector, Vector> random_line(Rng& rng, Field k, std::size_t dim) {
  for (;;) {
    Vector p = random_point(rng, k, dim), q = random_point(rng, k, dim);
    if (!proportional(p, q)) return {std::move(p), std::move(q)};
  }
}

}  // namespace

GenericSplitting generic_splitting_type(const LineFamily& f, Rng& rng, int trials) {
  GenericSplitting out;
  const Field k = f.field();
  if (f.n() == 1) {
    const Vector e0{k.one(), k.zero()}, e1{k.zero(), k.one()};
    out.trials = 1;
    out.type = splitting_type(f, e0, e1).type;
    out.unbalanced = out.type.is_balanced() ? 0 : 1;
    return out;
  }
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
  out.type = SplittingType::unbalanced();
  for (int i = 0; i < trials; ++i) {
    const auto [p, q] = random_line(rng, k, static_cast<std::size_t>(f.n() + 1));
    const SplittingType t = splitting_type(f, p, q).type;
    if (!t.is_balanced()) ++out.unbalanced;
    out.type = std::min(out.type, t);
  }
  out.trials = trials;
  return out;
}

namespace {

// Residue version of splitting_type for the enumeration loops.
class FpSplitter {
 public:
  explicit FpSplitter(const LineFamily& f)
      : q_(f.upper_entries()), p_(q_.prime()), cols_(static_cast<std::size_t>(f.N() + 1)), tri_(triples(f.N())) {
    restricted_.resize(3 * q_.size());
    sys_.resize(3 * tri_.size() * cols_);
  }

  // true for type (2,0); the vertex is written when requested
  bool unbalanced(const fp::Res* p, const fp::Res* q, std::vector<fp::Res>* vertex) {
    q_.restrict_to_line(p, q, restricted_.data());
    check_not_contracted(p, q);
    std::fill(sys_.begin(), sys_.end(), 0);
    std::size_t row = 0;
    for (const auto& t : tri_)
      for (std::size_t s = 0; s < 3; ++s) {
        fp::Res* r = sys_.data() + row * cols_;
        r[t.i] = restricted_[3 * static_cast<std::size_t>(t.jk) + s];
        r[t.j] = (p_ - restricted_[3 * static_cast<std::size_t>(t.ik) + s]) % p_;
        r[t.k] = restricted_[3 * static_cast<std::size_t>(t.ij) + s];
        ++row;
      }
    auto ker = fp::kernel(sys_, row, cols_, p_);
    if (ker.empty()) return false;
    if (vertex) {
      *vertex = std::move(ker.front());
      fp::normalize(*vertex, p_);
    }
    return true;
  }

  fp::Res prime() const { return p_; }

 private:
  void check_not_contracted(const fp::Res* p, const fp::Res* q) {
    std::vector<fp::Res> m(3 * q_.size());
    for (std::size_t e = 0; e < q_.size(); ++e)
      for (std::size_t s = 0; s < 3; ++s) m[s * q_.size() + e] = restricted_[3 * e + s];
    const auto piv = fp::rref(m, 3, q_.size(), p_);
    if (piv.size() >= 2) return;
    std::string where = "source line through (";
    for (int i = 0; i < q_.nvars(); ++i) where += (i ? ":" : "") + std::to_string(p[i]);
    where += ") and (";
    for (int i = 0; i < q_.nvars(); ++i) where += (i ? ":" : "") + std::to_string(q[i]);
    where += ")";
    if (piv.empty()) throw Error(ErrorCode::BasePoint, "W vanishes on the " + where);
    throw Error(ErrorCode::ContractedLine, "the " + where + " maps to a single line");
  }

  fp::Quadrics q_;
  fp::Res p_;
  std::size_t cols_;
  std::vector<Triple> tri_;
  std::vector<fp::Res> restricted_;
  std::vector<fp::Res> sys_;
};

// Lines of P^n(F_p) as row-reduced 2 x (n+1) matrices, pivots i < j.
template <class F>
void for_each_source_line(int n, fp::Res p, F&& f) {
  const auto dim = static_cast<std::size_t>(n + 1);
  std::vector<fp::Res> r1(dim), r2(dim);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> free1, free2;
      for (int c = i + 1; c <= n; ++c)
        if (c != j) free1.push_back(c);
      for (int c = j + 1; c <= n; ++c) free2.push_back(c);
      const std::size_t nf = free1.size() + free2.size();
      std::uint64_t total = 1;
      for (std::size_t k = 0; k < nf; ++k) total *= p;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::fill(r1.begin(), r1.end(), 0);
        std::fill(r2.begin(), r2.end(), 0);
        r1[static_cast<std::size_t>(i)] = 1;
        r2[static_cast<std::size_t>(j)] = 1;
        std::uint64_t rest = idx;
        for (int c : free1) {
          r1[static_cast<std::size_t>(c)] = rest % p;
          rest /= p;
        }
        for (int c : free2) {
          r2[static_cast<std::size_t>(c)] = rest % p;
          rest /= p;
        }
        f(r1, r2);
      }
    }
}

std::vector<fp::Res> line_coordinates(const std::vector<fp::Res>& a, const std::vector<fp::Res>& b, fp::Res p) {
  std::vector<fp::Res> out;
  const std::size_t dim = a.size();
  if (dim == 3) {
    // dual coordinates: the cross product
    out = {(a[1] * b[2] + p * p - a[2] * b[1]) % p, (a[2] * b[0] + p * p - a[0] * b[2]) % p,
           (a[0] * b[1] + p * p - a[1] * b[0]) % p};
  } else {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) out.push_back((a[i] * b[j] + p * p - a[j] * b[i]) % p);
  }
  fp::normalize(out, p);
  return out;
}

std::optional<FittedLocus> fit_locus(Field k, const std::vector<Vector>& points, int max_degree) {
  if (points.empty()) return std::nullopt;
  const int vars = static_cast<int>(points.front().size());
  for (int d = 1; d <= max_degree; ++d) {
    const auto basis = monomial_basis(vars, d);
    Matrix m(k, points.size(), basis.size());
    for (std::size_t r = 0; r < points.size(); ++r)
      for (std::size_t c = 0; c < basis.size(); ++c) {
        Scalar v = k.one();
        for (int x = 0; x < vars; ++x)
          for (int e = 0; e < basis[c][static_cast<std::size_t>(x)]; ++e) v *= points[r][static_cast<std::size_t>(x)];
        m(r, c) = v;
      }
    const auto ker = kernel_basis(m);
    if (ker.empty() && d < max_degree) continue;
    FittedLocus fit;
    fit.degree = d;
    fit.monomials = static_cast<int>(basis.size());
    fit.nullity = static_cast<int>(ker.size());
    fit.rank = fit.monomials - fit.nullity;
    for (const auto& v : ker) fit.forms.push_back(HomForm::from_dense(k, vars, d, v));
    return fit;
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t count_source_lines(int n, std::uint32_t p) {
  // Gaussian binomial [n+1 choose 2]_p
  const auto size = [p](int m) { return fp::projective_size(m, p); };
  return size(n) * size(n - 1) / (static_cast<std::uint64_t>(p) + 1);
}

bool exhaustive_feasible(int n, std::uint32_t p) { return (n == 2 && p <= 211) || (n == 3 && p <= 7); }

JumpingReport enumerate_jumping(const LineFamily& input, Rng& rng, const JumpingOptions& options) {
  const LineFamily f = over_prime_field(input, options.prime);
  JumpingReport out;
  out.prime = f.field().characteristic();
  out.reduced = input.field().is_rational();
  out.seed = rng.seed();
  out.n = f.n();
  out.coordinates = f.n() == 2 ? "dual" : "pluecker";
  if (f.n() < 2) throw Error(ErrorCode::WrongDimension, "jumping lines need n >= 2");

  const fp::Res p = out.prime;
  const bool exhaustive = options.exhaustive.value_or(exhaustive_feasible(f.n(), out.prime));
  FpSplitter splitter(f);
  std::vector<fp::Res> vertex;
  std::vector<std::vector<fp::Res>> jumping_lines, jumping_vertices;
  const int dim_g = 2 * (f.n() - 1);

  if (exhaustive) {
    out.mode = "exhaustive";
    for_each_source_line(f.n(), p, [&](const std::vector<fp::Res>& a, const std::vector<fp::Res>& b) {
      ++out.total;
      if (splitter.unbalanced(a.data(), b.data(), &vertex)) {
        ++out.jumping;
        jumping_lines.push_back(line_coordinates(a, b, p));
        jumping_vertices.push_back(vertex);
      }
    });
    out.threshold = 0.5 * std::pow(static_cast<double>(p), dim_g - 1);
  } else {
    out.mode = "sampled";
    const std::uint64_t trials = options.trials ? options.trials : 100 * p;
    const auto dim = static_cast<std::size_t>(f.n() + 1);
    std::vector<fp::Res> a(dim), b(dim), coords;
    for (std::uint64_t t = 0; t < trials; ++t) {
      do {
        for (std::size_t i = 0; i < dim; ++i) {
          a[i] = static_cast<fp::Res>(rng.uniform(0, static_cast<std::int64_t>(p) - 1));
          b[i] = static_cast<fp::Res>(rng.uniform(0, static_cast<std::int64_t>(p) - 1));
        }
        coords = line_coordinates(a, b, p);
      } while (std::all_of(coords.begin(), coords.end(), [](fp::Res r) { return r == 0; }));
      ++out.total;
      if (splitter.unbalanced(a.data(), b.data(), nullptr)) ++out.jumping;
    }
    out.threshold = 0.5 * static_cast<double>(trials) / static_cast<double>(p);
  }

  if (out.jumping == out.total) {
    // every line is of type (2,0): that is the generic type, nothing jumps
    out.generic = SplittingType::unbalanced();
    out.jumping = 0;
    jumping_lines.clear();
    jumping_vertices.clear();
  } else {
    out.generic = SplittingType::balanced();
  }
  out.codim = static_cast<double>(out.jumping) >= out.threshold ? 1 : 2;

  if (exhaustive) {
    for (const auto& l : jumping_lines) out.lines.push_back(fp::to_scalars(l, p));
    for (const auto& v : jumping_vertices) out.vertices.push_back(fp::to_scalars(v, p));
    out.fit = fit_locus(f.field(), out.lines, f.n() == 2 ? 4 : 2);
  }
  return out;
}

const char* curve_verdict_name(CurveVerdict v) {
  switch (v) {
    case CurveVerdict::Line: return "Line";
    case CurveVerdict::RationalNormalCubic: return "RationalNormalCubic";
    case CurveVerdict::Other: return "Other";
  }
  return "Other";
}

FundamentalCurve classify_vertex_set(Field field, const std::vector<Vector>& vertices) {
  FundamentalCurve out;
  for (const auto& v : vertices) {
    Vector nv = normalize_projective(v);
    bool seen = false;
    for (const auto& w : out.vertices)
      if (w == nv) {
        seen = true;
        break;
      }
    if (!seen) out.vertices.push_back(std::move(nv));
  }
  if (out.vertices.empty()) return out;
  out.span_rank = static_cast<int>(rank_of_vectors(field, out.vertices));
  if (out.span_rank == 2) {
    out.verdict = CurveVerdict::Line;
    return out;
  }
  if (out.span_rank != 4) return out;

  // coordinates on the span, then quadrics through the vertices
  std::vector<Vector> basis;
  for (const auto& v : out.vertices) {
    basis.push_back(v);
    if (rank_of_vectors(field, basis) < basis.size()) basis.pop_back();
    if (basis.size() == 4) break;
  }
  const Matrix b = Matrix::from_columns(field, basis, out.vertices.front().size());
  std::vector<Vector> local;
  for (const auto& v : out.vertices) local.push_back(*solve(b, v));
  const auto mono = monomial_basis(4, 2);
  Matrix m(field, local.size(), mono.size());
  for (std::size_t r = 0; r < local.size(); ++r)
    for (std::size_t c = 0; c < mono.size(); ++c) {
      Scalar v = field.one();
      for (std::size_t x = 0; x < 4; ++x)
        for (int e = 0; e < mono[c][x]; ++e) v *= local[r][x];
      m(r, c) = v;
    }
  for (const auto& k : kernel_basis(m)) out.fitted.push_back(HomForm::from_dense(field, 4, 2, k));
  out.quadrics = static_cast<int>(out.fitted.size());
  if (out.quadrics < 3 || !field.is_prime()) return out;

  const fp::Quadrics q(out.fitted);
  std::vector<fp::Res> val(out.fitted.size());
  fp::for_each_point(3, field.characteristic(), [&](const std::vector<fp::Res>& x) {
    q.eval(x.data(), val.data());
    if (std::all_of(val.begin(), val.end(), [](fp::Res r) { return r == 0; })) ++out.common_zeros;
    return true;
  });
  if (out.common_zeros == out.vertices.size()) out.verdict = CurveVerdict::RationalNormalCubic;
  return out;
}

FundamentalCurve fundamental_curve(const LineFamily& f, const JumpingReport& report) {
  if (f.n() != 2 || report.n != 2) throw Error(ErrorCode::WrongDimension, "fundamental curves are computed for n = 2");
  if (report.mode != "exhaustive" || report.jumping == 0 || report.vertices.empty())
    throw Error(ErrorCode::EmptyJumpingSet, "no enumerated jumping lines to collect vertices from");
  return classify_vertex_set(Field::prime(report.prime), report.vertices);
}

}  // namespace vlines
