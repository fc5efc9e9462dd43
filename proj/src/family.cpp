#include "vlines/family.hpp"

#include <unordered_map>

#include "fp_kernel.hpp"
#include "vlines/grammar.hpp"
#include "vlines/planar.hpp"
#include "vlines/unipoly.hpp"

namespace vlines {

LineFamily::LineFamily(Field field, int n, int N, std::string label)
    : field_(field), n_(n), N_(N), label_(std::move(label)) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "source dimension must be at least 1");
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "ambient dimension must be at least 1");
  w_.assign(static_cast<std::size_t>((N + 1) * (N + 1)), HomForm(field, n + 1, 2));
}

std::size_t LineFamily::at(int i, int j) const {
  if (i < 0 || j < 0 || i > N_ || j > N_) throw Error(ErrorCode::InvalidArgument, "entry index out of range");
  return static_cast<std::size_t>(i * (N_ + 1) + j);
}

const HomForm& LineFamily::entry(int i, int j) const { return w_[at(i, j)]; }

void LineFamily::set_entry(int i, int j, const HomForm& f) {
  if (i == j) throw Error(ErrorCode::Antisymmetry, "diagonal entries are zero");
  if (f.field() != field_) throw Error(ErrorCode::FieldMismatch, "entry over " + f.field().name());
  if (f.nvars() != n_ + 1 || f.degree() != 2)
    throw Error(ErrorCode::InvalidArgument, "entries are quadrics in " + std::to_string(n_ + 1) + " variables");
  w_[at(i, j)] = f;
  w_[at(j, i)] = -f;
}

std::vector<std::pair<int, int>> LineFamily::upper_indices() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= N_; ++i)
    for (int j = i + 1; j <= N_; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<HomForm> LineFamily::upper_entries() const {
  std::vector<HomForm> out;
  for (const auto& [i, j] : upper_indices()) out.push_back(entry(i, j));
  return out;
}

bool operator==(const LineFamily& a, const LineFamily& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.N_ == b.N_ && a.w_ == b.w_;
}

PfaffianCheck check_pfaffians(const LineFamily& f) {
  PfaffianCheck out;
  const int m = f.N() + 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
          const HomForm pf = f.entry(i, j) * f.entry(k, l) - f.entry(i, k) * f.entry(j, l) + f.entry(i, l) * f.entry(j, k);
          if (pf.is_zero()) continue;
          out.ok = false;
          out.witness = {i, j, k, l};
          HomForm lead(pf.field(), pf.nvars(), pf.degree());
          const auto& [e, c] = *pf.terms().begin();
          lead.add_term(e, c);
          out.witness_monomial = format_poly(lead);
          return out;
        }
  return out;
}

namespace {

std::vector<HomForm> nonzero_entries(const LineFamily& f) {
  std::vector<HomForm> out;
  for (auto& e : f.upper_entries())
    if (!e.is_zero()) out.push_back(std::move(e));
  return out;
}

// Binary quadrics: common zeros over the closure via one gcd.
void scan_binary(const LineFamily& f, BasepointScan& out) {
  out.method = "gcd";
  const auto forms = nonzero_entries(f);
  const Field k = f.field();
  if (forms.empty()) {
    out.ok = false;
    out.positive_dimensional = true;
    return;
  }
  bool lead_zero = true;
  UniPoly g(k);
  for (const auto& q : forms) {
    const Scalar a = q.coefficient({2, 0}), b = q.coefficient({1, 1}), c = q.coefficient({0, 2});
    if (!a.is_zero()) lead_zero = false;
    g = gcd(g, UniPoly(k, {c, b, a}));  // q(x, 1)
  }
  if (lead_zero) {
    out.ok = false;
    out.closure = 1;
    out.witness = Vector{k.one(), k.zero()};
    return;
  }
  if (g.degree() > 0) {
    out.ok = false;
    out.closure = g.degree() == 1 ? 1 : squarefree_part(g).degree();
    if (g.degree() == 1) out.witness = Vector{-g.coeff(0), k.one()};
  }
}

void scan_points(const LineFamily& fp_family, Rng& rng, int trials, BasepointScan& out) {
  const auto forms = fp_family.upper_entries();
  const fp::Quadrics q(forms);
  const fp::Res p = q.prime();
  std::vector<fp::Res> val(forms.size());
  auto is_base = [&](const std::vector<fp::Res>& t) {
    q.eval(t.data(), val.data());
    for (auto v : val)
      if (v != 0) return false;
    return true;
  };
  const int n = fp_family.n();
  if (fp::projective_size(n, p) <= kExhaustivePoints) {
    out.method = "exhaustive";
    fp::for_each_point(n, p, [&](const std::vector<fp::Res>& t) {
      ++out.points_checked;
      if (is_base(t)) {
        out.ok = false;
        out.witness = fp::to_scalars(t, p);
        return false;
      }
      return true;
    });
    return;
  }
  out.method = "sampled";
  const Field k = fp_family.field();
  for (int i = 0; i < trials; ++i) {
    const auto t = fp::residues(rng.nonzero_vector(k, static_cast<std::size_t>(n + 1)));
    ++out.points_checked;
    if (is_base(t)) {
      out.ok = false;
      out.witness = fp::to_scalars(t, p);
      return;
    }
  }
}

}  // namespace

BasepointScan scan_basepoints(const LineFamily& f, Rng& rng, int trials, std::uint32_t prime) {
  BasepointScan out;
  out.prime = f.field().characteristic();
  if (f.n() == 1) {
    scan_binary(f, out);
    return out;
  }
  const LineFamily g = over_prime_field(f, prime);
  out.prime = g.field().characteristic();
  if (f.n() == 2) {
    out.method = "eliminant";
    const auto forms = nonzero_entries(g);
    if (forms.empty()) {
      out.ok = false;
      out.positive_dimensional = true;
      return out;
    }
    const PlanarCount c = count_planar_points(forms, rng);
    out.positive_dimensional = !c.finite;
    out.closure = c.closure;
    out.over_extension = c.over_extension;
    out.ok = c.finite && c.closure == 0;
    if (!out.ok && c.over_extension[0] > 0) {
      BasepointScan enumerated;
      scan_points(g, rng, trials, enumerated);
      out.witness = enumerated.witness;
      out.points_checked = enumerated.points_checked;
    }
    return out;
  }
  scan_points(g, rng, trials, out);
  return out;
}

namespace {

// Derivatives of the upper entries, one row per entry.
std::vector<std::vector<HomForm>> jacobian_forms(const LineFamily& f) {
  std::vector<std::vector<HomForm>> rows;
  for (const auto& e : f.upper_entries()) {
    std::vector<HomForm> row;
    for (int v = 0; v <= f.n(); ++v) row.push_back(e.derivative(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

Vector evaluate_upper(const std::vector<HomForm>& entries, std::span<const Scalar> t) {
  Vector out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.evaluate(t));
  return out;
}

void hash_all_points(const LineFamily& f, EmbeddingReport& out) {
  const auto forms = f.upper_entries();
  const fp::Quadrics q(forms);
  const fp::Res p = q.prime();
  const int n = f.n();
  std::unordered_map<std::uint64_t, std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(fp::projective_size(n, p)));
  std::vector<fp::Res> val(forms.size()), other(forms.size());
  std::uint64_t ordinal = 0;
  fp::for_each_point(n, p, [&](const std::vector<fp::Res>& t) {
    const std::uint64_t here = ordinal++;
    q.eval(t.data(), val.data());
    if (!fp::normalize(val, p)) {
      ++out.contractions;
      return true;
    }
    const auto [it, fresh] = seen.emplace(fp::fnv1a(val), here);
    if (fresh) return true;
    const auto s = fp::point_at(n, p, it->second);
    q.eval(s.data(), other.data());
    fp::normalize(other, p);
    if (other != val) return true;  // hash clash between different lines
    ++out.injectivity_failures;
    if (!out.collision) out.collision = std::make_pair(fp::to_scalars(s, p), fp::to_scalars(t, p));
    return true;
  });
  out.points_hashed = ordinal;
}

}  // namespace

EmbeddingReport embedding_spotcheck(const LineFamily& f, Rng& rng, int trials) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
  EmbeddingReport out;
  out.trials = trials;
  const Field k = f.field();
  const auto dim = static_cast<std::size_t>(f.n() + 1);
  const auto entries = f.upper_entries();

  if (k.is_prime() && fp::projective_size(f.n(), k.characteristic()) <= kExhaustivePoints) {
    out.exhaustive = true;
    hash_all_points(f, out);
  } else {
    for (int i = 0; i < trials; ++i) {
      const Vector t = rng.nonzero_vector(k, dim);
      Vector u = rng.nonzero_vector(k, dim);
      if (proportional(t, u)) continue;
      const Vector wt = evaluate_upper(entries, t), wu = evaluate_upper(entries, u);
      if (is_zero_vector(wt) || is_zero_vector(wu)) {
        ++out.contractions;
        continue;
      }
      if (proportional(wt, wu)) {
        ++out.injectivity_failures;
        if (!out.collision) out.collision = std::make_pair(t, u);
      }
    }
  }

  const auto jac = jacobian_forms(f);
  for (int i = 0; i < trials; ++i) {
    const Vector t = rng.nonzero_vector(k, dim);
    if (is_zero_vector(evaluate_upper(entries, t))) continue;
    Matrix m(k, jac.size(), dim);
    for (std::size_t r = 0; r < jac.size(); ++r)
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = jac[r][c].evaluate(t);
    if (rank(m) != dim) {
      ++out.immersion_failures;
      if (!out.immersion_witness) out.immersion_witness = t;
    }
  }
  return out;
}

ValidationReport validate(const LineFamily& f, Rng& rng, int trials, std::uint32_t prime) {
  ValidationReport r;
  r.pfaffian = check_pfaffians(f);
  r.basepoints = scan_basepoints(f, rng, trials, prime);
  r.embedding = embedding_spotcheck(f, rng, trials);
  return r;
}

Bivector evaluate_family(const LineFamily& f, std::span<const Scalar> t) {
  if (static_cast<int>(t.size()) != f.n() + 1) throw Error(ErrorCode::InvalidArgument, "point has wrong length");
  if (is_zero_vector(t)) throw Error(ErrorCode::InvalidArgument, "zero vector is not a point");
  Matrix m(f.field(), static_cast<std::size_t>(f.N() + 1), static_cast<std::size_t>(f.N() + 1));
  bool nonzero = false;
  for (const auto& [i, j] : f.upper_indices()) {
    const Scalar v = f.entry(i, j).evaluate(t);
    if (!v.is_zero()) nonzero = true;
    m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
    m(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = -v;
  }
  if (!nonzero) {
    std::string pt;
    for (const auto& s : t) pt += (pt.empty() ? "" : ":") + s.to_string();
    throw Error(ErrorCode::BasePoint, "W vanishes at (" + pt + ")");
  }
  return Bivector(std::move(m));
}

int plucker_span_dim(const LineFamily& f) { return span_dimension(f.upper_entries()); }

std::optional<Vector> grassmann_degenerate(const LineFamily& f) {
  const auto basis = monomial_basis(f.n() + 1, 2);
  const auto m = static_cast<std::size_t>(f.N() + 1);
  Matrix sys(f.field(), m * basis.size(), m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const auto dense = f.entry(static_cast<int>(i), static_cast<int>(j)).dense_coefficients();
      for (std::size_t k = 0; k < basis.size(); ++k) sys(i * basis.size() + k, j) = dense[k];
    }
  const auto ker = kernel_basis(sys);
  if (ker.empty()) return std::nullopt;
  return normalize_projective(ker.front());
}

LineFamily compress(const LineFamily& f, const Matrix& pi) {
  if (pi.field() != f.field()) throw Error(ErrorCode::FieldMismatch, "projection over a different field");
  if (pi.cols() != static_cast<std::size_t>(f.N() + 1))
    throw Error(ErrorCode::InvalidArgument, "projection matrix needs N+1 columns");
  const int m = static_cast<int>(pi.rows()) - 1;
  LineFamily out(f.field(), f.n(), m, f.label());
  const auto idx = f.upper_indices();
  const auto entries = f.upper_entries();
  for (int a = 0; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) {
      HomForm w(f.field(), f.n() + 1, 2);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (entries[k].is_zero()) continue;
        const auto [i, j] = idx[k];
        const Scalar c = pi(static_cast<std::size_t>(a), static_cast<std::size_t>(i)) * pi(static_cast<std::size_t>(b), static_cast<std::size_t>(j)) -
                         pi(static_cast<std::size_t>(a), static_cast<std::size_t>(j)) * pi(static_cast<std::size_t>(b), static_cast<std::size_t>(i));
        if (!c.is_zero()) w += entries[k] * c;
      }
      out.set_entry(a, b, w);
    }
  return out;
}

ProjectionResult try_project(const LineFamily& f, const Matrix& pi, Rng& rng, int trials) {
  const int m = static_cast<int>(pi.rows()) - 1;
  if (m < 3) throw Error(ErrorCode::InvalidArgument, "projection target must be G(1,m) with m >= 3");
  if (rank(pi) != pi.rows()) throw Error(ErrorCode::InvalidArgument, "projection matrix is not surjective");
  LineFamily g = compress(f, pi);
  if (!f.label().empty()) g.set_label(f.label() + " projected to G(1," + std::to_string(m) + ")");
  BasepointScan contraction = scan_basepoints(g, rng, trials);
  EmbeddingReport injectivity = embedding_spotcheck(g, rng, trials);
  return {std::move(g), std::move(contraction), std::move(injectivity)};
}

namespace {
std::string show(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ":" : "") + v[i].to_string();
  return s + ")";
}
}  // namespace

LineFamily project_family(const LineFamily& f, const Matrix& pi, Rng& rng, int trials) {
  ProjectionResult r = try_project(f, pi, rng, trials);
  if (!r.contraction.ok) {
    throw Error(ErrorCode::ProjectionNotIsomorphic,
                "projection contracts a line" + (r.contraction.witness ? " at " + show(*r.contraction.witness) : std::string()));
  }
  if (r.injectivity.collision) {
    throw Error(ErrorCode::ProjectionNotIsomorphic, "projection identifies the lines at " + show(r.injectivity.collision->first) +
                                                        " and " + show(r.injectivity.collision->second));
  }
  if (!r.injectivity.ok())
    throw Error(ErrorCode::ProjectionNotIsomorphic,
                "projection is not an immersion" + (r.injectivity.immersion_witness ? " at " + show(*r.injectivity.immersion_witness) : std::string()));
  return std::move(r.family);
}

LineFamily transform_source(const LineFamily& f, const Matrix& s) {
  const auto dim = static_cast<std::size_t>(f.n() + 1);
  if (s.rows() != dim || s.cols() != dim) throw Error(ErrorCode::InvalidArgument, "source change has wrong size");
  if (rank(s) != dim) throw Error(ErrorCode::InvalidArgument, "source change is not invertible");
  std::vector<HomForm> images;
  for (std::size_t i = 0; i < dim; ++i) images.push_back(HomForm::linear(s.row(i)));
  LineFamily out(f.field(), f.n(), f.N(), f.label());
  for (const auto& [i, j] : f.upper_indices()) {
    const HomForm& e = f.entry(i, j);
    if (!e.is_zero()) out.set_entry(i, j, e.substitute(images));
  }
  return out;
}

LineFamily transform_ambient(const LineFamily& f, const Matrix& g) {
  const auto dim = static_cast<std::size_t>(f.N() + 1);
  if (g.rows() != dim || g.cols() != dim) throw Error(ErrorCode::InvalidArgument, "ambient change has wrong size");
  if (rank(g) != dim) throw Error(ErrorCode::InvalidArgument, "ambient change is not invertible");
  return compress(f, g);
}

LineFamily reduce_mod_p(const LineFamily& f, std::uint32_t p) {
  if (!f.field().is_rational()) throw Error(ErrorCode::InvalidArgument, "only families over Q can be reduced");
  const Field k = Field::prime(p);
  LineFamily out(k, f.n(), f.N(), f.label());
  for (const auto& [i, j] : f.upper_indices()) {
    const HomForm& e = f.entry(i, j);
    HomForm r(k, f.n() + 1, 2);
    for (const auto& [ex, c] : e.terms()) r.add_term(ex, k.from_rational(c.rational()));
    out.set_entry(i, j, r);
  }
  return out;
}

LineFamily over_prime_field(const LineFamily& f, std::uint32_t p) {
  if (f.field().is_prime()) return f;
  if (!is_prime_number(p)) p = next_prime(p);
  for (int attempt = 0; attempt < 50; ++attempt, p = next_prime(p)) {
    try {
      return reduce_mod_p(f, p);
    } catch (const Error&) {
      // some denominator vanishes mod p
    }
  }
  throw Error(ErrorCode::InvalidArgument, "no good prime found for reduction");
}

}  // namespace vlines
