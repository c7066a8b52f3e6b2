#include "k3lat/plane.hpp"

namespace k3lat {

namespace {

Index pivot_index(const IntVec& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return i;
  }
  return -1;
}

}  // namespace

Plane::Plane(LatticePtr lattice, const IntVec& omega1, const IntVec& omega2)
    : lattice_(std::move(lattice)) {
  if (!lattice_) {
    throw Error(ErrorCode::LatticeMismatch, "plane needs a lattice");
  }
  if (omega1.size() != lattice_->rank() || omega2.size() != lattice_->rank()) {
    throw Error(ErrorCode::LatticeMismatch, "basis length does not match lattice rank");
  }
  omega1_ = primitivize(omega1);
  omega2_ = primitivize(omega2);
  // Independence: eliminate omega1's pivot coordinate from omega2.
  Index j = pivot_index(omega1_);
  IntVec w = omega1_(j) * omega2_ - omega2_(j) * omega1_;
  if (is_zero(w)) {
    throw Error(ErrorCode::DependentInput, "basis vectors are linearly dependent");
  }
}

Plane::Plane(LatticePtr lattice, const RatVec& omega1, const RatVec& omega2)
    : Plane(std::move(lattice), primitivize(omega1), primitivize(omega2)) {}

bool Plane::contains(const IntVec& v) const {
  if (v.size() != lattice_->rank()) return false;
  if (is_zero(v)) return true;
  Index j1 = pivot_index(omega1_);
  IntVec w2 = omega1_(j1) * omega2_ - omega2_(j1) * omega1_;
  IntVec r = omega1_(j1) * v - v(j1) * omega1_;
  Index j2 = pivot_index(w2);
  r = w2(j2) * r - r(j2) * w2;
  return is_zero(r);
}

bool Plane::same_span(const Plane& other) const {
  return contains(other.omega1()) && contains(other.omega2());
}

Int pair_disc(const GramLattice& lattice, const IntVec& x, const IntVec& y) {
  Int a = lattice.inner(x, x);
  Int b = lattice.inner(x, y);
  Int c = lattice.inner(y, y);
  return a * c - b * b;
}

Rat pair_disc(const GramLattice& lattice, const RatVec& x, const RatVec& y) {
  Rat a = lattice.inner(x, x);
  Rat b = lattice.inner(x, y);
  Rat c = lattice.inner(y, y);
  return a * c - b * b;
}

Int disc(const Plane& h) { return pair_disc(h.lattice(), h.omega1(), h.omega2()); }

DiscClass disc_class(const Plane& h, std::int64_t p) {
  Int d = disc(h);
  ModP residue(d, p);
  return DiscClass{std::move(d), residue, legendre(residue)};
}

PropertyRResult property_r(const Plane& h, std::int64_t p) {
  DiscClass w = disc_class(h, p);
  return PropertyRResult{w.legendre == +1, std::move(w)};
}

PropertyRIntegralResult property_r_integral(const Plane& h, std::int64_t p) {
  std::vector<IntVec> basis = saturate_int({h.omega1(), h.omega2()});
  const GramLattice& l = h.lattice();
  Int a = l.inner(basis[0], basis[0]);
  Int b = l.inner(basis[0], basis[1]);
  Int c = l.inner(basis[1], basis[1]);
  Int d = a * c - b * b;
  ModP residue(d, p);
  return PropertyRIntegralResult{legendre(residue) == +1,
                                 DiscClass{std::move(d), residue, legendre(residue)},
                                 {basis[0], basis[1]}};
}

Plane diagonalize(const Plane& h) {
  const GramLattice& l = h.lattice();
  Int a = l.inner(h.omega1(), h.omega1());
  if (a == 0) {
    throw Error(ErrorCode::DegenerateFirstVector, "(w1,w1) = 0: cannot diagonalize");
  }
  Int b = l.inner(h.omega1(), h.omega2());
  RatVec r = h.omega2().cast<Rat>() - make_rat(b, a) * h.omega1().cast<Rat>();
  return Plane(h.lattice_ptr(), h.omega1(), primitivize(r));
}

std::vector<IntVec> orth_complement(const Plane& h) {
  const IntMat& g = h.lattice().gram();
  IntMat pairing(2, h.lattice().rank());
  pairing.row(0) = (g * h.omega1()).transpose();
  pairing.row(1) = (g * h.omega2()).transpose();
  return integer_kernel(pairing);
}

ModP projection_residual_norm(const Plane& h, const IntVec& delta, std::int64_t p) {
  const GramLattice& l = h.lattice();
  if (l.inner(h.omega1(), h.omega2()) != 0) {
    throw Error(ErrorCode::Precondition, "projection residual needs an orthogonal basis");
  }
  ModP a(l.inner(h.omega1(), h.omega1()), p);
  ModP c(l.inner(h.omega2(), h.omega2()), p);
  if (a.is_zero() || c.is_zero()) {
    throw Error(ErrorCode::NonInvertibleDenominator, "(wi,wi) vanishes mod p");
  }
  ModP dd(l.inner(delta, delta), p);
  ModP x(l.inner(h.omega1(), delta), p);
  ModP y(l.inner(h.omega2(), delta), p);
  return dd - x * x * inverse(a) - y * y * inverse(c);
}

bool restricted_posdef(const Plane& h) {
  Int a = h.lattice().inner(h.omega1(), h.omega1());
  return a > 0 && disc(h) > 0;
}

}  // namespace k3lat
