#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vlines/pluecker.hpp"
#include "vlines/poly.hpp"
#include "vlines/random.hpp"

namespace vlines {

/// A family of lines in P^N over P^n: an antisymmetric matrix W of
/// quadrics in t_0..t_n, with W(t) the Pluecker bivector of the line at t.
class LineFamily {
 public:
  LineFamily(Field field, int n, int N, std::string label = {});

  Field field() const noexcept { return field_; }
  int n() const noexcept { return n_; }
  int N() const noexcept { return N_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  const HomForm& entry(int i, int j) const;
  /// Sets W[i][j] = f and W[j][i] = -f; i != j.
  void set_entry(int i, int j, const HomForm& f);

  /// (i, j) with i < j, row by row, and the matching entries.
  std::vector<std::pair<int, int>> upper_indices() const;
  std::vector<HomForm> upper_entries() const;

  friend bool operator==(const LineFamily& a, const LineFamily& b);

 private:
  std::size_t at(int i, int j) const;
  Field field_;
  int n_;
  int N_;
  std::string label_;
  std::vector<HomForm> w_;
};

struct PfaffianCheck {
  bool ok = true;
  std::array<int, 4> witness{};      // first failing i < j < k < l
  std::string witness_monomial;      // leading monomial of that Pfaffian
};

struct BasepointScan {
  bool ok = true;
  std::string method;                // "gcd", "eliminant", "exhaustive" or "sampled"
  std::uint32_t prime = 0;           // characteristic used for the scan
  std::uint64_t points_checked = 0;  // exhaustive and sampled scans
  int closure = 0;                   // eliminant: zeros over the closure
  std::array<int, 3> over_extension{};
  bool positive_dimensional = false;
  std::optional<Vector> witness;
};

struct EmbeddingReport {
  int trials = 0;
  bool exhaustive = false;           // every F_p point hashed
  std::uint64_t points_hashed = 0;
  int contractions = 0;              // W(t) = 0 met while sampling
  int injectivity_failures = 0;
  int immersion_failures = 0;
  std::optional<std::pair<Vector, Vector>> collision;
  std::optional<Vector> immersion_witness;
  bool ok() const { return contractions == 0 && injectivity_failures == 0 && immersion_failures == 0; }
};

struct ValidationReport {
  PfaffianCheck pfaffian;
  BasepointScan basepoints;
  EmbeddingReport embedding;
  bool valid() const { return pfaffian.ok && basepoints.ok && embedding.ok(); }
};

/// |P^n(F_p)| up to which scans enumerate every point.
inline constexpr std::uint64_t kExhaustivePoints = 2'200'000;

PfaffianCheck check_pfaffians(const LineFamily& f);
/// Families over Q are scanned modulo `prime` (or the next good prime).
BasepointScan scan_basepoints(const LineFamily& f, Rng& rng, int trials = 200, std::uint32_t prime = 101);
EmbeddingReport embedding_spotcheck(const LineFamily& f, Rng& rng, int trials = 100);
ValidationReport validate(const LineFamily& f, Rng& rng, int trials = 100, std::uint32_t prime = 101);

/// Throws BasePoint if W(t) = 0.
Bivector evaluate_family(const LineFamily& f, std::span<const Scalar> t);
int plucker_span_dim(const LineFamily& f);
/// A covector H != 0 with W(t) H = 0 identically, if one exists.
std::optional<Vector> grassmann_degenerate(const LineFamily& f);

/// W' = pi W pi^T without any check; pi is (m+1) x (N+1).
LineFamily compress(const LineFamily& f, const Matrix& pi);

struct ProjectionResult {
  LineFamily family;
  BasepointScan contraction;  // zeros of W' are contracted lines
  EmbeddingReport injectivity;
  bool isomorphic() const { return contraction.ok && injectivity.ok(); }
};

/// Compresses and checks the result; pi must be surjective with m >= 3.
ProjectionResult try_project(const LineFamily& f, const Matrix& pi, Rng& rng, int trials = 100);
/// As try_project, but throws ProjectionNotIsomorphic with a witness.
LineFamily project_family(const LineFamily& f, const Matrix& pi, Rng& rng, int trials = 100);

/// W(S t) for an invertible (n+1)x(n+1) matrix S.
LineFamily transform_source(const LineFamily& f, const Matrix& s);
/// G W G^T for an invertible (N+1)x(N+1) matrix G.
LineFamily transform_ambient(const LineFamily& f, const Matrix& g);
/// Reduction of a family over Q; throws if a denominator vanishes mod p.
LineFamily reduce_mod_p(const LineFamily& f, std::uint32_t p);
/// The family itself over F_p, or its reduction mod the first prime >= p
/// without bad denominators.
LineFamily over_prime_field(const LineFamily& f, std::uint32_t p = 101);

}  // namespace vlines
