#pragma once

#include <cstdint>
#include <random>

#include "hpq/boundary_point.hpp"
#include "hpq/isometries.hpp"
#include "hpq/models.hpp"

namespace hpq {

/// Seeded source for the property checks. Same seed, same sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  double normal();
  int integer(int lo, int hi);  // inclusive
  bool coin();
  Vector uniform_vector(int n, double lo, double hi);
  Vector normal_vector(int n);
  /// Uniform on the unit sphere of R^n (n >= 1).
  Vector unit_vector(int n);

 private:
  std::mt19937_64 engine_;
};

enum class Stratum { Finite, Hyperplane, Infinity };

/// Point with horizontal coordinates in [-box, box] and z in [z_lo, z_hi].
HalfSpacePoint random_point(const Signature& sig, Rng& rng, double box = 2.0,
                            double z_lo = 0.25, double z_hi = 3.0);
/// Tangent with standard normal components.
Tangent random_tangent(const Signature& sig, Rng& rng);
/// Tangent of a prescribed causal type, kept at least `margin` away from the
/// null cone in relative terms. Throws DomainError if the signature has no
/// such vectors.
Tangent random_tangent_of_type(const Signature& sig, Rng& rng, CausalType type,
                               double margin = 0.05);
/// Unit-norm null horizontal vector (needs p >= 2 and q >= 1).
Vector random_null_direction(const Signature& sig, Rng& rng);
bool has_hyperplane_stratum(const Signature& sig);
BoundaryPoint random_boundary_point(const Signature& sig, Rng& rng, Stratum stratum);
/// lambda in [0.5, 2], A = exp(J S) with S of entries in [-0.5, 0.5],
/// optionally composed with a random diagonal reflection, t in [-2, 2].
IsometryG random_isometry(const Signature& sig, Rng& rng, bool reflections = true);

}  // namespace hpq
