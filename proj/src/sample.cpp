#include "k3lat/sample.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace k3lat {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t zone = (UINT64_MAX / range) * range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= zone);
  return lo + static_cast<std::int64_t>(x % range);
}

IntVec random_vector(Rng& rng, Index n, std::int64_t lo, std::int64_t hi) {
  IntVec v(n);
  for (Index i = 0; i < n; ++i) v(i) = rng.uniform(lo, hi);
  return v;
}

namespace {

bool dependent(const IntVec& a, const IntVec& b) {
  Index j = -1;
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) != 0) {
      j = i;
      break;
    }
  }
  if (j < 0) return true;
  IntVec w = a(j) * b - b(j) * a;
  return is_zero(w);
}

}  // namespace

Plane random_plane(const LatticePtr& lattice, Rng& rng) {
  const Index n = lattice->rank();
  IntVec w1 = random_vector(rng, n, -10, 10);
  while (is_zero(w1)) w1 = random_vector(rng, n, -10, 10);
  IntVec w2 = random_vector(rng, n, -10, 10);
  while (dependent(w1, w2)) w2 = random_vector(rng, n, -10, 10);
  return Plane(lattice, w1, w2);
}

Plane random_posdef_plane(const LatticePtr& lattice, Rng& rng) {
  if (!lambda_degree(*lattice)) {
    throw Error(ErrorCode::InvalidLattice, "posdef sampling expects a Lambda_d lattice");
  }
  const Index n = lattice->rank();
  while (true) {
    std::int64_t a = rng.uniform(3, 10);
    std::int64_t b = rng.uniform(3, 10);
    IntVec w1 = random_vector(rng, n, -1, 1);
    IntVec w2 = random_vector(rng, n, -1, 1);
    w1(1) += a;  // a * (e + f) in the first U block
    w1(2) += a;
    w2(3) += b;  // b * (e + f) in the second U block
    w2(4) += b;
    if (is_zero(w1) || dependent(w1, w2)) continue;
    Plane h(lattice, w1, w2);
    if (restricted_posdef(h)) return h;
  }
}

bool log_enabled() {
  const char* v = std::getenv("K3LAT_LOG");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

SampleReport run_density_sample(long d, std::int64_t p, long trials, const Rat& epsilon,
                                std::uint64_t seed, bool require_posdef) {
  LatticePtr lattice = make_lambda_d(d);
  require_odd_prime(p);
  if (p < 5 || d % p == 0) {
    throw Error(ErrorCode::InvalidPrime, "sampling requires p >= 5 and p not dividing d");
  }
  if (trials < 0) {
    throw Error(ErrorCode::Precondition, "trials must be nonnegative");
  }

  SampleReport report;
  report.d = d;
  report.p = p;
  report.epsilon = epsilon;
  report.trials = trials;
  report.seed = seed;
  report.require_posdef = require_posdef;

  Rng rng(seed);
  Rat sum(0);
  const long tick = trials >= 10 ? trials / 10 : 1;
  for (long t = 0; t < trials; ++t) {
    Plane h = require_posdef ? random_posdef_plane(lattice, rng) : random_plane(lattice, rng);
    if (restricted_posdef(h)) ++report.posdef_inputs;
    bool success = false;
    try {
      PerturbCertificate cert = make_property_r(h, p, epsilon);
      success = verify_certificate(cert).ok && property_r(cert.output, p).holds &&
                cert.distance <= epsilon;
      if (restricted_posdef(cert.output)) ++report.posdef_outputs;
      if (success) {
        if (!report.has_stats) {
          report.dist_min = report.dist_max = cert.distance;
          report.has_stats = true;
        } else {
          if (cert.distance < report.dist_min) report.dist_min = cert.distance;
          if (cert.distance > report.dist_max) report.dist_max = cert.distance;
        }
        sum += cert.distance;
      }
    } catch (const Error&) {
      success = false;
    }
    if (success) ++report.successes;
    if (log_enabled() && (t + 1) % tick == 0) {
      std::cerr << "k3lat: sample " << (t + 1) << "/" << trials << " (" << report.successes
                << " ok)\n";
    }
  }
  if (report.successes > 0) {
    report.dist_mean = sum / report.successes;
  }
  return report;
}

}  // namespace k3lat
