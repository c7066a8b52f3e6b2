#pragma once

// Rational 2-planes in Lambda_d tensor Q, stored with primitive integer bases.
// The spanned subspace is the invariant object; the stored basis is a
// deterministic representative. Property R asks whether the plane's
// discriminant is a nonzero square mod p; a rational basis decides it because
// its discriminant differs from the one of an integral basis of H
// intersected with Lambda_d by a nonzero rational square.

#include "k3lat/lattice.hpp"
#include "k3lat/modp.hpp"

#include <array>
#include <vector>

namespace k3lat {

class Plane {
 public:
  /// Inputs are normalized to primitive integer vectors; linear independence
  /// over Q is required (DependentInput otherwise).
  Plane(LatticePtr lattice, const IntVec& omega1, const IntVec& omega2);
  Plane(LatticePtr lattice, const RatVec& omega1, const RatVec& omega2);

  const IntVec& omega1() const { return omega1_; }
  const IntVec& omega2() const { return omega2_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const GramLattice& lattice() const { return *lattice_; }

  /// Membership of a vector in the rational span.
  bool contains(const IntVec& v) const;

  /// Same rational span (mutual membership of bases).
  bool same_span(const Plane& other) const;

 private:
  LatticePtr lattice_;
  IntVec omega1_;
  IntVec omega2_;
};

/// Gram determinant (x,x)(y,y) - (x,y)^2 of an ordered pair.
Int pair_disc(const GramLattice& lattice, const IntVec& x, const IntVec& y);
Rat pair_disc(const GramLattice& lattice, const RatVec& x, const RatVec& y);

/// Exact discriminant (w1,w1)(w2,w2) - (w1,w2)^2 of the stored basis.
Int disc(const Plane& h);

/// A discriminant together with its mod-p classification.
struct DiscClass {
  Int disc;
  ModP residue;
  int legendre;
};

DiscClass disc_class(const Plane& h, std::int64_t p);

struct PropertyRResult {
  bool holds;
  DiscClass witness;
};

/// Property R on the stored primitive basis: disc mod p is a nonzero square.
PropertyRResult property_r(const Plane& h, std::int64_t p);

struct PropertyRIntegralResult {
  bool holds;
  DiscClass witness;
  std::array<IntVec, 2> basis;  // saturated integral basis of H intersect Lambda_d
};

/// Property R evaluated on a true integral basis of H intersected with the
/// lattice, obtained by saturation. Agrees with property_r whenever both
/// discriminants are nonzero mod p.
PropertyRIntegralResult property_r_integral(const Plane& h, std::int64_t p);

/// Same span, orthogonal basis: w2 is replaced by the primitivized
/// w2 - ((w1,w2)/(w1,w1)) w1. Requires (w1,w1) != 0 exactly
/// (DegenerateFirstVector otherwise).
Plane diagonalize(const Plane& h);

/// Saturated basis of {v in Lambda_d : (v,w1) = (v,w2) = 0}; rank 19 whenever
/// the form restricted to H is nondegenerate.
std::vector<IntVec> orth_complement(const Plane& h);

/// (d,d) - (w1,d)^2/(w1,w1) - (w2,d)^2/(w2,w2) mod p: the norm of the
/// component of delta orthogonal to H. Requires an orthogonal stored basis
/// and both (wi,wi) invertible mod p (NonInvertibleDenominator otherwise).
ModP projection_residual_norm(const Plane& h, const IntVec& delta, std::int64_t p);

/// Whether the form restricted to H is positive definite.
bool restricted_posdef(const Plane& h);

}  // namespace k3lat
