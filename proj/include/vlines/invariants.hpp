#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vlines/family.hpp"
#include "vlines/planar.hpp"

namespace vlines {

struct Bidegree {
  int order = 0;
  int klass = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// One Schubert count: zeros of the incidence conditions over the closure,
/// with the F_p, F_p^2, F_p^3 counts kept as stabilization evidence.
struct FlagCount {
  bool finite = true;
  int closure = 0;
  std::array<int, 3> over_extension{};
  bool stabilized() const { return finite && over_extension[1] + over_extension[2] - over_extension[0] == closure; }
};

struct SchubertCount {
  Flag::Kind kind = Flag::Kind::Order;
  std::uint32_t prime = 0;
  std::vector<FlagCount> flags;  // one per random flag
  int modal = 0;
  bool unanimous = true;
  std::string warning;  // set when the flags disagree
};

/// Surface families (n = 2) over F_p only.
FlagCount schubert_count(const LineFamily& f, const Flag& flag, Rng& rng);
/// Modal count over `repetitions` random flags of the given kind; a family
/// over Q is reduced mod 101 first.
SchubertCount schubert_count(const LineFamily& f, Flag::Kind kind, Rng& rng, int repetitions = 5);

Flag random_flag(Field field, int ambient_dim, Flag::Kind kind, Rng& rng);

struct BidegreeReport {
  Bidegree value;
  SchubertCount order;
  SchubertCount klass;
};

BidegreeReport bidegree(const LineFamily& f, Rng& rng, int repetitions = 5);

struct SweptReport {
  int dimension = 0;  // of the union of the lines, projectively
  int samples = 0;
  std::uint64_t seed = 0;
  bool fitted = false;  // quadric fit attempted (small N only)
  int monomials = 0;
  std::vector<HomForm> quadrics;  // basis of the quadrics through the samples
  std::vector<int> ranks;         // rank of each basis quadric
  int fresh_points = 0;
  bool verified = false;  // every fitted quadric vanishes on the fresh points
};

/// Quadric fits run for N <= 7.
SweptReport swept_variety(const LineFamily& f, Rng& rng, int samples = 40);

/// A point on every line of the family, if there is one.
std::optional<Vector> global_vertex(const LineFamily& f);

/// Rank of the symmetric matrix of a quadratic form (odd characteristic).
int quadric_rank(const HomForm& q);

}  // namespace vlines
