#include "vlines/planar.hpp"

namespace vlines {

namespace {

// Coefficient of t0^a t1^b t2^c.
Scalar co(const HomForm& f, int a, int b, int c) {
  return f.coefficient({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c)});
}

// Q = a*y^2 + b(x)*y + c(x) on the chart t0 = 1, x = t1, y = t2.
struct Quadratic {
  UniPoly a, b, c;
};

Quadratic split(const HomForm& f) {
  const Field k = f.field();
  return {UniPoly(k, {co(f, 0, 0, 2)}), UniPoly(k, {co(f, 1, 0, 1), co(f, 0, 1, 1)}),
          UniPoly(k, {co(f, 2, 0, 0), co(f, 1, 1, 0), co(f, 0, 2, 0)})};
}

// True when the forms have a common zero on the line t0 = 0.
bool meets_line_at_infinity(const std::vector<HomForm>& forms) {
  const Field k = forms.front().field();
  bool all_lead_zero = true;
  UniPoly g(k);
  for (const auto& f : forms) {
    if (!co(f, 0, 2, 0).is_zero()) all_lead_zero = false;
    g = gcd(g, UniPoly(k, {co(f, 0, 0, 2), co(f, 0, 1, 1), co(f, 0, 2, 0)}));
  }
  if (all_lead_zero) return true;  // (0:1:0)
  return g.is_zero() || g.degree() > 0;
}

}  // namespace

PlanarCount count_planar_points(const std::vector<HomForm>& input, Rng& rng, int max_attempts) {
  if (input.empty()) throw Error(ErrorCode::InvalidArgument, "no forms to intersect");
  const Field k = input.front().field();
  if (!k.is_prime()) throw Error(ErrorCode::InvalidArgument, "planar point counting needs a prime field");
  std::vector<HomForm> forms;
  for (const auto& f : input) {
    if (f.field() != k) throw Error(ErrorCode::FieldMismatch, "forms over different fields");
    if (f.nvars() != 3 || f.degree() != 2) throw Error(ErrorCode::InvalidArgument, "planar counting expects ternary quadrics");
    if (!f.is_zero()) forms.push_back(f);
  }
  PlanarCount out;
  if (forms.empty()) {
    out.finite = false;
    return out;
  }

  // A shared curve meets every line, so it always shows up at infinity. A
  // finite set (at most 4 points) misses a random line with probability
  // above 1/5, hence the larger budget for this outcome alone.
  const int infinity_budget = 10 * max_attempts;
  int vanishing_resultants = 0, at_infinity = 0, tries = 0;
  for (int attempt = 1; attempt <= max_attempts; ++attempt, ++tries) {
    out.attempts = tries + 1;
    const Matrix g = rng.invertible_matrix(k, 3);
    std::vector<HomForm> images;
    for (std::size_t i = 0; i < 3; ++i) images.push_back(HomForm::linear(g.row(i)));
    std::vector<HomForm> moved;
    for (const auto& f : forms) moved.push_back(f.substitute(images));
    if (meets_line_at_infinity(moved)) {
      if (++at_infinity >= infinity_budget) {
        out.finite = false;
        return out;
      }
      --attempt;  // does not count against max_attempts
      continue;
    }

    // two random members of the linear system, both monic-able in y
    HomForm q1(k, 3, 2), q2(k, 3, 2);
    for (const auto& f : moved) {
      q1 += f * rng.scalar(k);
      q2 += f * rng.scalar(k);
    }
    const Quadratic c1 = split(q1), c2 = split(q2);
    if (c1.a.is_zero() || c2.a.is_zero()) continue;

    const UniPoly num = c1.a * c2.c - c2.a * c1.c;
    const UniPoly den = c2.a * c1.b - c1.a * c2.b;
    const UniPoly res = num * num - (c1.a * c2.b - c2.a * c1.b) * (c1.b * c2.c - c2.b * c1.c);
    if (res.is_zero()) {
      if (++vanishing_resultants >= 3) {
        out.finite = false;
        return out;
      }
      continue;
    }
    // on a zero, y = num / den; clear denominators in every form
    UniPoly elim = res;
    for (const auto& f : moved) {
      const Quadratic q = split(f);
      elim = gcd(elim, q.a * num * num + q.b * num * den + q.c * den * den);
    }
    // zeros sharing an x-coordinate show up as common roots with den
    if (gcd(elim, den).degree() > 0) continue;

    out.finite = true;
    out.closure = squarefree_part(elim).degree();
    for (int e = 1; e <= 3; ++e) out.over_extension[static_cast<std::size_t>(e - 1)] = count_roots_in_extension(elim, e);
    out.eliminant = elim;
    return out;
  }
  throw Error(ErrorCode::Internal, "no separating coordinate change found after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace vlines
