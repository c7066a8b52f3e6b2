#pragma once

// Arithmetic in the prime field Z/p for odd p, plus the quadratic-residue
// classifier and the residue lemma that drives the final perturbation step.

#include "k3lat/error.hpp"
#include "k3lat/numeric.hpp"

#include <cstdint>
#include <utility>

namespace k3lat {

/// Deterministic trial-division primality test (moduli here are tiny).
bool is_prime(std::int64_t n);

/// Throws InvalidPrime unless p is an odd prime.
void require_odd_prime(std::int64_t p);

/// An element of Z/p, p an odd prime. Immutable value type; operations between
/// different moduli are rejected.
class ModP {
 public:
  ModP(std::int64_t value, std::int64_t modulus);
  ModP(const Int& value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  ModP operator+(const ModP& o) const;
  ModP operator-(const ModP& o) const;
  ModP operator*(const ModP& o) const;
  ModP operator-() const;
  bool operator==(const ModP& o) const = default;

  ModP pow(std::int64_t e) const;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
  void check_same(const ModP& o) const;
};

/// Multiplicative inverse; throws ZeroInverse if a = 0.
ModP inverse(const ModP& a);

/// +1 if a is a nonzero square mod p, -1 if a nonzero nonsquare, 0 if a = 0.
/// Euler's criterion; the test suite checks it against exhaustive squaring.
int legendre(const ModP& a);

/// Canonical square root: the smaller of the two roots r, p - r.
/// Throws NotASquare if legendre(a) = -1. Direct search, so the modulus is
/// capped at 10^6 (far above anything this toolkit uses).
ModP sqrt_mod(const ModP& a);

/// Smallest y in [0, p) making A - B*y^2 a nonzero square mod p, together with
/// that square. Requires A, B nonzero and p >= 5; (A,B,p) = (2,2,3) has no
/// solution, which is why p = 3 is rejected.
std::pair<ModP, ModP> solve_residue_lemma(const ModP& A, const ModP& B);

}  // namespace k3lat
