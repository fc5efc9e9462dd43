#include "vlines/poly.hpp"

#include <numeric>
#include <string>

#include "vlines/linalg.hpp"

namespace vlines {

namespace {

void check_compatible(const HomForm& a, const HomForm& b, const char* op) {
  if (a.field() != b.field())
    throw Error(ErrorCode::FieldMismatch, std::string(op) + ": forms over different fields");
  if (a.nvars() != b.nvars())
    throw Error(ErrorCode::InvalidArgument, std::string(op) + ": forms in different numbers of variables");
}

void enumerate_monomials(int nvars, int remaining, int var, Exponents& cur, std::vector<Exponents>& out) {
  if (var == nvars - 1) {
    cur[var] = static_cast<std::uint8_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = static_cast<std::uint8_t>(e);
    enumerate_monomials(nvars, remaining - e, var + 1, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Exponents> monomial_basis(int nvars, int degree) {
  std::vector<Exponents> out;
  if (nvars <= 0) return out;
  Exponents cur(static_cast<std::size_t>(nvars), 0);
  enumerate_monomials(nvars, degree, 0, cur, out);
  return out;
}

HomForm::HomForm(Field field, int nvars, int degree) : field_(field), nvars_(nvars), degree_(degree) {
  if (nvars < 1 || nvars > 64) throw Error(ErrorCode::InvalidArgument, "form arity must lie in [1, 64]");
  if (degree < 0 || degree > 255) throw Error(ErrorCode::InvalidArgument, "form degree must lie in [0, 255]");
}

HomForm HomForm::variable(Field field, int nvars, int index) {
  if (index < 0 || index >= nvars) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  HomForm f(field, nvars, 1);
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  f.add_term(e, field.one());
  return f;
}

HomForm HomForm::constant(const Scalar& c, int nvars) {
  HomForm f(c.field(), nvars, 0);
  f.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return f;
}

HomForm HomForm::linear(std::span<const Scalar> coeffs) {
  if (coeffs.empty()) throw Error(ErrorCode::InvalidArgument, "linear form needs at least one coefficient");
  const int n = static_cast<int>(coeffs.size());
  HomForm f(coeffs[0].field(), n, 1);
  for (int i = 0; i < n; ++i) {
    Exponents e(coeffs.size(), 0);
    e[static_cast<std::size_t>(i)] = 1;
    f.add_term(e, coeffs[static_cast<std::size_t>(i)]);
  }
  return f;
}

Scalar HomForm::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

void HomForm::add_term(const Exponents& e, const Scalar& c) {
  if (c.field() != field_) throw Error(ErrorCode::FieldMismatch, "term coefficient over " + c.field().name() + " added to a form over " + field_.name());
  if (static_cast<int>(e.size()) != nvars_) throw Error(ErrorCode::InvalidArgument, "exponent vector has wrong length");
  int d = 0;
  for (auto x : e) d += x;
  if (d != degree_)
    throw Error(ErrorCode::InvalidArgument, "term of degree " + std::to_string(d) + " added to a form of degree " + std::to_string(degree_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HomForm HomForm::operator-() const {
  HomForm r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

HomForm& HomForm::operator+=(const HomForm& o) {
  check_compatible(*this, o, "addition");
  if (o.degree_ != degree_ && !o.is_zero())
    throw Error(ErrorCode::InvalidArgument, "cannot add forms of degrees " + std::to_string(degree_) + " and " + std::to_string(o.degree_));
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HomForm& HomForm::operator-=(const HomForm& o) { return *this += -o; }

HomForm& HomForm::operator*=(const Scalar& c) {
  if (c.field() != field_) throw Error(ErrorCode::FieldMismatch, "scalar and form over different fields");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

HomForm operator*(const HomForm& a, const HomForm& b) {
  check_compatible(a, b, "multiplication");
  HomForm r(a.field_, a.nvars_, a.degree_ + b.degree_);
  Exponents e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const HomForm& a, const HomForm& b) {
  if (a.field_ != b.field_ || a.nvars_ != b.nvars_) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

HomForm HomForm::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  HomForm r = constant(field_.one(), nvars_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Scalar HomForm::evaluate(std::span<const Scalar> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw Error(ErrorCode::InvalidArgument, "point has " + std::to_string(point.size()) + " coordinates, form has " + std::to_string(nvars_) + " variables");
  Scalar total = field_.zero();
  for (const auto& [e, c] : terms_) {
    Scalar m = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) m *= point[i];
    }
    total += m;
  }
  return total;
}

HomForm HomForm::substitute(std::span<const HomForm> images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw Error(ErrorCode::InvalidArgument, "substitution needs one image per variable");
  const int target_vars = images[0].nvars();
  const int image_degree = images[0].degree();
  for (const auto& img : images) {
    if (img.nvars() != target_vars || img.field() != field_)
      throw Error(ErrorCode::InvalidArgument, "substitution images must share field and arity");
    if (img.degree() != image_degree && !img.is_zero())
      throw Error(ErrorCode::InvalidArgument, "substitution images must share degree");
  }
  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<HomForm>> powers(images.size());
  HomForm result(field_, target_vars, degree_ * image_degree);
  for (const auto& [e, c] : terms_) {
    HomForm m = constant(c, target_vars);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(field_.one(), target_vars));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
      m = m * pw[e[i]];
    }
    if (!m.is_zero()) result += m;
  }
  return result;
}

HomForm HomForm::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw Error(ErrorCode::InvalidArgument, "derivative variable out of range");
  HomForm r(field_, nvars_, degree_ > 0 ? degree_ - 1 : 0);
  if (degree_ == 0) return r;
  for (const auto& [e, c] : terms_) {
    const auto k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponents d = e;
    d[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(k - 1);
    r.add_term(d, c * field_.from_int(k));
  }
  return r;
}

HomForm HomForm::divide_by_variable(int var) const {
  if (degree_ == 0) throw Error(ErrorCode::InvalidArgument, "cannot divide a constant by a variable");
  HomForm r(field_, nvars_, degree_ - 1);
  for (const auto& [e, c] : terms_) {
    const auto k = e[static_cast<std::size_t>(var)];
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "form is not divisible by x" + std::to_string(var));
    Exponents d = e;
    d[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(k - 1);
    r.add_term(d, c);
  }
  return r;
}

std::vector<Scalar> HomForm::dense_coefficients() const {
  const auto basis = monomial_basis(nvars_, degree_);
  std::vector<Scalar> out;
  out.reserve(basis.size());
  auto it = terms_.begin();
  for (const auto& m : basis) {
    if (it != terms_.end() && it->first == m) {
      out.push_back(it->second);
      ++it;
    } else {
      out.push_back(field_.zero());
    }
  }
  return out;
}

HomForm HomForm::from_dense(Field field, int nvars, int degree, std::span<const Scalar> coeffs) {
  const auto basis = monomial_basis(nvars, degree);
  if (coeffs.size() != basis.size()) throw Error(ErrorCode::InvalidArgument, "dense coefficient vector has wrong length");
  HomForm f(field, nvars, degree);
  for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coeffs[i]);
  return f;
}

HomForm substitute_line(const HomForm& f, std::span<const Scalar> p, std::span<const Scalar> q) {
  const auto n = static_cast<std::size_t>(f.nvars());
  if (p.size() != n || q.size() != n) throw Error(ErrorCode::InvalidArgument, "line points have wrong length");
  if (proportional(p, q) || is_zero_vector(p) || is_zero_vector(q))
    throw Error(ErrorCode::DegenerateLine, "points spanning the line are proportional");
  std::vector<HomForm> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar coeffs[2] = {p[i], q[i]};
    images.push_back(HomForm::linear(coeffs));
  }
  return f.substitute(images);
}

int span_dimension(std::span<const HomForm> forms) {
  if (forms.empty()) return 0;
  const auto& first = forms[0];
  for (const auto& f : forms) {
    if (f.field() != first.field()) throw Error(ErrorCode::FieldMismatch, "span_dimension: mixed fields");
    if (f.nvars() != first.nvars()) throw Error(ErrorCode::InvalidArgument, "span_dimension: mixed arities");
    if (f.degree() != first.degree() && !f.is_zero() && !first.is_zero())
      throw Error(ErrorCode::InvalidArgument, "span_dimension: mixed degrees " + std::to_string(first.degree()) + " and " + std::to_string(f.degree()));
  }
  int degree = first.degree();
  for (const auto& f : forms)
    if (!f.is_zero()) degree = f.degree();
  for (const auto& f : forms)
    if (!f.is_zero() && f.degree() != degree) throw Error(ErrorCode::InvalidArgument, "span_dimension: mixed degrees");
  std::vector<Vector> rows;
  rows.reserve(forms.size());
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    rows.push_back(f.dense_coefficients());
  }
  if (rows.empty()) return 0;
  return static_cast<int>(rank(Matrix::from_rows(first.field(), rows, rows[0].size())));
}

}  // namespace vlines
