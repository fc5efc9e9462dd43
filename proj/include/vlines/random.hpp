#pragma once

#include <cstdint>
#include <random>

#include "vlines/linalg.hpp"

namespace vlines {

/// Seeded source for every random choice in the library. Over Q the
/// scalars are small integers, which keeps coefficient growth in check.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::mt19937_64& engine() noexcept { return engine_; }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  Scalar scalar(Field field);
  Scalar nonzero_scalar(Field field);
  Vector vector(Field field, std::size_t n);
  Vector nonzero_vector(Field field, std::size_t n);
  Matrix matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix invertible_matrix(Field field, std::size_t n);
  /// A rows x cols matrix of full rank min(rows, cols).
  Matrix full_rank_matrix(Field field, std::size_t rows, std::size_t cols);
  /// Fresh seed for a sub-computation, so callers stay reproducible.
  std::uint64_t derive() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace vlines
