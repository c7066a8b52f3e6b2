// Acceptance suite: one pass/fail line per criterion, all checks exact.
// Exit status is the number of failed criteria.

#include "k3lat/json_io.hpp"
#include "k3lat/sample.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace k3lat;
namespace oracle = k3lat::testing;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return std::string(buf);
}

// 1. Residue-lemma sweep against the exhaustive oracle, all odd primes
//    5 <= p <= 199, all nonzero pairs (A,B); under 60 seconds.
bool criterion_lemma_sweep(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  long pairs = 0, failures = 0;
  int primes = 0;
  for (std::int64_t p : oracle::odd_primes_upto(199)) {
    if (p < 5) continue;
    ++primes;
    auto table = oracle::square_table(p);
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t b = 1; b < p; ++b) {
        ++pairs;
        auto expected = oracle::lemma_oracle(a, b, p, table);
        if (!expected) {
          ++failures;
          continue;
        }
        auto [y, square] = solve_residue_lemma(ModP(a, p), ModP(b, p));
        bool ok = y.value() == expected->first && square.value() == expected->second &&
                  legendre(square) == +1 &&
                  table[static_cast<std::size_t>(square.value())];
        if (!ok) ++failures;
      }
    }
  }
  double elapsed = seconds_since(start);
  detail = fmt("%d primes, %ld pairs, %ld failures, %.1fs", primes, pairs, failures, elapsed);
  return failures == 0 && elapsed < 60.0;
}

// 2. Lattice identities: det, signature, E8 determinant, evenness sweeps.
bool criterion_lattice_identities(std::string& detail) {
  long bad = 0;
  for (long d : {2L, 4L, 6L, 8L, 10L, 12L}) {
    GramLattice l = build_lambda_d(d);
    if (l.det() != -d) ++bad;
    if (!(l.signature() == Signature{2, 19})) ++bad;
    if (!l.is_even()) ++bad;
    LatticePtr lp = make_lambda_d(d);
    Rng rng(static_cast<std::uint64_t>(d));
    for (int t = 0; t < 1000; ++t) {
      IntVec v = random_vector(rng, 21, -10, 10);
      if (lp->inner(v, v) % 2 != 0) ++bad;
    }
  }
  if (build_E8_neg().det() != 1) ++bad;
  detail = fmt("d in {2,4,6,8,10,12}, 1000 vectors each, %ld violations", bad);
  return bad == 0;
}

// 3. End-to-end engine: 1000 seeded planes x d in {4,6,10} x p in {23,29,31},
//    epsilon 1/100; certificates verify, distance within budget; under 120s.
bool criterion_engine_sweep(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  const Rat eps = parse_rat("1/100");
  long runs = 0, failures = 0;
  for (long d : {4L, 6L, 10L}) {
    LatticePtr l = make_lambda_d(d);
    Rng rng(static_cast<std::uint64_t>(900000 + d));
    std::vector<Plane> planes;
    planes.reserve(1000);
    for (int t = 0; t < 1000; ++t) planes.push_back(random_plane(l, rng));
    for (std::int64_t p : {23, 29, 31}) {
      for (const Plane& h : planes) {
        ++runs;
        try {
          PerturbCertificate cert = make_property_r(h, p, eps);
          bool ok = verify_certificate(cert).ok && property_r(cert.output, p).holds &&
                    cert.distance <= eps;
          if (!ok) ++failures;
        } catch (const Error&) {
          ++failures;
        }
      }
    }
  }
  double elapsed = seconds_since(start);
  detail = fmt("%ld runs, %ld failures, %.1fs", runs, failures, elapsed);
  return failures == 0 && elapsed < 120.0;
}

// 4. Density at desk scale: 20 fixed planes succeed at every epsilon in
//    {1/10, 1/100, 1/1000, 1/10000}.
bool criterion_density(std::string& detail) {
  LatticePtr l = make_lambda_d(4);
  Rng rng(444);
  long failures = 0;
  for (int t = 0; t < 20; ++t) {
    Plane h = random_plane(l, rng);
    for (const char* eps_str : {"1/10", "1/100", "1/1000", "1/10000"}) {
      Rat eps = parse_rat(eps_str);
      try {
        PerturbCertificate cert = make_property_r(h, 23, eps);
        bool ok = verify_certificate(cert).ok && property_r(cert.output, 23).holds &&
                  cert.distance <= eps;
        if (!ok) ++failures;
      } catch (const Error&) {
        ++failures;
      }
    }
  }
  detail = fmt("20 planes x 4 budgets down to 1/10000, %ld failures", failures);
  return failures == 0;
}

// 5. Rational vs integral basis oracle on 200 seeded planes, p in {23,29}.
bool criterion_basis_oracle(std::string& detail) {
  LatticePtr l = make_lambda_d(4);
  Rng rng(555);
  long checked = 0, failures = 0;
  for (int t = 0; t < 200; ++t) {
    Plane h = random_plane(l, rng);
    for (std::int64_t p : {23, 29}) {
      auto rational = property_r(h, p);
      auto integral = property_r_integral(h, p);
      Rat ratio = Rat(rational.witness.disc) / Rat(integral.witness.disc);
      bool square_ratio = ratio > 0 &&
                          mpz_perfect_square_p(ratio.get_num().get_mpz_t()) &&
                          mpz_perfect_square_p(ratio.get_den().get_mpz_t());
      if (!square_ratio) ++failures;
      if (rational.witness.residue.value() != 0 && integral.witness.residue.value() != 0) {
        ++checked;
        if (rational.holds != integral.holds) ++failures;
      }
    }
  }
  detail = fmt("200 planes x p in {23,29}, %ld comparable, %ld failures", checked, failures);
  return failures == 0 && checked > 0;
}

// 6. HNF / kernel / saturation unit identities on 500 random matrices.
bool criterion_hnf(std::string& detail) {
  Rng rng(666);
  long failures = 0;
  for (int t = 0; t < 500; ++t) {
    Index rows = rng.uniform(1, 6);
    Index cols = rng.uniform(1, 6);
    IntMat m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
      for (Index c = 0; c < cols; ++c) m(r, c) = rng.uniform(-20, 20);
    }
    auto res = hnf(m);
    if (m * res.u != res.h) ++failures;
    if (abs(det(res.u)) != 1) ++failures;
    if (!is_column_hnf(res.h)) ++failures;
    auto kernel = integer_kernel(m);
    for (const IntVec& v : kernel) {
      if (!is_zero(m * v)) ++failures;
    }
    if (static_cast<Index>(kernel.size()) != cols - oracle::rank_oracle(m)) ++failures;
    if (!kernel.empty()) {
      IntMat b(cols, static_cast<Index>(kernel.size()));
      for (Index j = 0; j < b.cols(); ++j) b.col(j) = kernel[static_cast<std::size_t>(j)];
      for (const Int& f : oracle::snf_invariant_factors(b)) {
        if (f != 1) ++failures;
      }
    }
  }
  // Saturation idempotence on random rational spans.
  for (int t = 0; t < 100; ++t) {
    Index n = 8;
    IntMat stack(2, n);
    std::vector<RatVec> v;
    for (int i = 0; i < 2; ++i) {
      IntVec x(n);
      for (Index k = 0; k < n; ++k) x(k) = rng.uniform(-20, 20);
      if (is_zero(x)) x(0) = 1;
      stack.row(i) = x.transpose();
      RatVec q = x.cast<Rat>();
      q /= Rat(rng.uniform(1, 5));
      v.push_back(q);
    }
    if (oracle::rank_oracle(stack) != 2) continue;
    auto once = saturate(v);
    std::vector<RatVec> lifted;
    for (const IntVec& b : once) lifted.push_back(b.cast<Rat>());
    auto twice = saturate(lifted);
    if (once.size() != twice.size()) {
      ++failures;
      continue;
    }
    for (std::size_t i = 0; i < once.size(); ++i) {
      if (once[i] != twice[i]) ++failures;
    }
  }
  detail = fmt("500 matrices + 100 saturation spans, %ld failures", failures);
  return failures == 0;
}

// 7. Step-3 primitivity support: Gram pairing of a primitive vector never
//    vanishes identically mod p when p does not divide d.
bool criterion_primitivity(std::string& detail) {
  long failures = 0, checked = 0;
  for (long d : {4L, 6L}) {
    LatticePtr l = make_lambda_d(d);
    for (std::int64_t p : {23, 29, 31}) {
      Rng rng(static_cast<std::uint64_t>(7700 + d * 100 + p));
      for (int t = 0; t < 200; ++t) {
        IntVec v = random_vector(rng, 21, -10, 10);
        while (is_zero(v)) v = random_vector(rng, 21, -10, 10);
        IntVec eta = primitivize(v);
        IntVec pairing = l->gram() * eta;
        bool hit = false;
        for (Index i = 0; i < 21; ++i) {
          if (mod_p(pairing(i), p) != 0) {
            hit = true;
            break;
          }
        }
        ++checked;
        if (!hit) ++failures;
      }
    }
  }
  detail = fmt("%ld primitive vectors across d in {4,6}, p in {23,29,31}, %ld failures",
               checked, failures);
  return failures == 0;
}

// 8. Certificate tamper suite: 50 certificates verify; five mutation classes
//    are each detected on every certificate.
bool criterion_tamper(std::string& detail) {
  LatticePtr l = make_lambda_d(4);
  Rng rng(888);
  long verified = 0, detected = 0, wanted = 0;
  std::vector<PerturbCertificate> certs;
  while (certs.size() < 50) {
    Plane h = random_plane(l, rng);
    PerturbCertificate cert = make_property_r(h, 23, parse_rat("1/100"));
    bool has_active = false;
    for (const auto& s : cert.steps) {
      if (!s.identity()) has_active = true;
    }
    if (!has_active) continue;  // need a non-identity step for the N mutation
    certs.push_back(std::move(cert));
  }
  for (const PerturbCertificate& cert : certs) {
    if (verify_certificate(cert).ok) ++verified;
    std::size_t active = 0;
    while (cert.steps[active].identity()) ++active;

    wanted += 5;
    {  // coordinate
      PerturbCertificate bad = cert;
      IntVec w = bad.output.omega1();
      w(0) += 1;
      try {
        bad.output = Plane(l, w, bad.output.omega2());
        if (!verify_certificate(bad).ok) ++detected;
      } catch (const Error&) {
        ++detected;  // corruption produced an invalid plane outright
      }
    }
    {  // N
      PerturbCertificate bad = cert;
      bad.steps[active].n += 1;
      if (!verify_certificate(bad).ok) ++detected;
    }
    {  // recorded residue
      PerturbCertificate bad = cert;
      bad.steps[active].after.disc = (bad.steps[active].after.disc + 1) % 23;
      if (!verify_certificate(bad).ok) ++detected;
    }
    {  // witness
      PerturbCertificate bad = cert;
      bad.sqrt_witness = bad.sqrt_witness + ModP(1, 23);
      if (!verify_certificate(bad).ok) ++detected;
    }
    {  // distance
      PerturbCertificate bad = cert;
      bad.distance += parse_rat("1/1000000000");
      if (!verify_certificate(bad).ok) ++detected;
    }
  }
  detail = fmt("%ld/50 verified, %ld/%ld mutations detected", verified, detected, wanted);
  return verified == 50 && detected == wanted;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "residue-lemma sweep vs exhaustive oracle (p <= 199)", criterion_lemma_sweep},
      {2, "lattice identities: det, signature, E8, evenness", criterion_lattice_identities},
      {3, "end-to-end engine sweep (9000 runs, eps = 1/100)", criterion_engine_sweep},
      {4, "density at desk scale (eps down to 1/10000)", criterion_density},
      {5, "rational vs integral basis oracle", criterion_basis_oracle},
      {6, "HNF / kernel / saturation identities", criterion_hnf},
      {7, "step-3 primitivity support (Gram invertible mod p)", criterion_primitivity},
      {8, "certificate tamper detection", criterion_tamper},
  };
  int failed = 0;
  for (auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failed;
    std::printf("[%d/8] %s  %s (%s)\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(),
                detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/8 criteria passed\n", 8 - failed);
  return failed;
}
