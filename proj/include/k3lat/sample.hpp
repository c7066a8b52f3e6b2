#pragma once

// Seeded random-plane generation and the density sampling experiment: run the
// perturbation engine over many random planes and aggregate exact distance
// statistics. Everything here is deterministic given the seed.

#include "k3lat/perturb.hpp"

#include <cstdint>
#include <random>

namespace k3lat {

/// mt19937_64 with rejection-sampled bounded draws; the standard pins the
/// engine's output sequence, so reports are byte-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 eng_;
};

IntVec random_vector(Rng& rng, Index n, std::int64_t lo, std::int64_t hi);

/// Random plane with entries uniform in [-10, 10], resampled until the pair
/// is linearly independent. Bases are primitivized by the Plane constructor.
Plane random_plane(const LatticePtr& lattice, Rng& rng);

/// Random plane whose restricted form is positive definite. Uniform-box
/// planes are essentially never positive definite in signature (2,19), so
/// this draws near the positive 2-space spanned by the two U-block vectors
/// e+f and rejects the rare misses.
Plane random_posdef_plane(const LatticePtr& lattice, Rng& rng);

struct SampleReport {
  long d = 0;
  std::int64_t p = 0;
  Rat epsilon;
  long trials = 0;
  long successes = 0;
  bool has_stats = false;  // stats cover successes only
  Rat dist_min, dist_max, dist_mean;
  long posdef_inputs = 0;   // sampled planes with positive definite restricted form
  long posdef_outputs = 0;  // engine outputs with positive definite restricted form
  std::uint64_t seed = 0;
  bool require_posdef = false;
};

/// Runs make_property_r on `trials` seeded random planes. A trial counts as a
/// success only if the certificate verifies, the output satisfies property_r,
/// and the distance stays within epsilon. With require_posdef, input planes
/// are rejection-sampled until their restricted form is positive definite.
SampleReport run_density_sample(long d, std::int64_t p, long trials, const Rat& epsilon,
                                std::uint64_t seed, bool require_posdef);

/// True when the K3LAT_LOG environment variable asks for progress output.
bool log_enabled();

}  // namespace k3lat
