#pragma once

// Even lattices presented by exact integer Gram matrices: the hyperbolic
// plane U, the negated E8 root lattice, and the rank-21 polarized lattice
// Lambda_d = Z(-d) + U + U + E8(-1) + E8(-1) in that fixed slot order.
// Coordinates are normative: slot 0 is the Z(-d) generator, slots 1-2 and 3-4
// the two U blocks (e, f), slots 5-12 and 13-20 the two E8(-1) blocks in the
// Bourbaki node order (chain 1-3-4-5-6-7-8, node 2 attached to node 4).

#include "k3lat/error.hpp"
#include "k3lat/intmat.hpp"
#include "k3lat/numeric.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace k3lat {

struct Signature {
  Index n_plus = 0;
  Index n_minus = 0;
  bool operator==(const Signature&) const = default;
};

/// A finite-rank nondegenerate lattice given by a symmetric integer Gram
/// matrix. Immutable after construction.
class GramLattice {
 public:
  GramLattice(IntMat gram, std::string label);

  Index rank() const { return gram_.rows(); }
  const IntMat& gram() const { return gram_; }
  const std::string& label() const { return label_; }
  const Int& det() const { return det_; }
  bool is_even() const;

  /// x^T G y, exact. Throws LatticeMismatch on length mismatch.
  Int inner(const IntVec& x, const IntVec& y) const;
  Rat inner(const RatVec& x, const RatVec& y) const;

  /// Sign counts of an exact rational diagonalization of the form.
  Signature signature() const;

  bool operator==(const GramLattice& o) const { return gram_ == o.gram_; }

 private:
  IntMat gram_;
  std::string label_;
  Int det_;
};

using LatticePtr = std::shared_ptr<const GramLattice>;

/// An exact coordinate vector tied to its lattice.
struct LatticeVector {
  LatticePtr lattice;
  IntVec coords;
};

/// Inner product of two vectors in the same lattice; LatticeMismatch otherwise.
Int inner(const LatticeVector& x, const LatticeVector& y);

/// The hyperbolic plane: rank 2, Gram [[0,1],[1,0]].
GramLattice build_U();

/// E8 with the form negated: diagonal -2, +1 at Dynkin-adjacent pairs, det +1.
GramLattice build_E8_neg();

/// Z(-d) + U + U + E8(-1) + E8(-1): rank 21, det -d, signature (2,19).
/// Throws InvalidDegree unless d is even and >= 2.
GramLattice build_lambda_d(long d);

/// Shared-pointer convenience for the builders above.
LatticePtr make_lambda_d(long d);

/// d if the Gram matrix is exactly the Lambda_d layout, otherwise nullopt.
std::optional<long> lambda_degree(const GramLattice& lattice);

/// true iff the integer coordinates have gcd 1.
bool is_primitive(const IntVec& v);

/// Smallest positive rational multiple of v with integer coprime coordinates.
/// Signs are preserved (the scaling is positive). Throws ZeroVector on 0.
IntVec primitivize(const IntVec& v);
IntVec primitivize(const RatVec& v);

/// Z-basis of span_Q(v) intersected with Z^n, canonicalized via HNF. The
/// result generates every integer vector of the span, so each of its members
/// is expressible over the output basis. Throws DependentInput if the input
/// vectors are linearly dependent over Q.
std::vector<IntVec> saturate(const std::vector<RatVec>& v);
std::vector<IntVec> saturate_int(const std::vector<IntVec>& v);

/// First vector of norm -2 accepted by the predicate. Search order is fixed:
/// the 16 E8(-1) simple roots (first block then second), e - f in each U
/// block, then integer root-coefficient combinations graded by sup-norm up to
/// 3. Throws NotFound when the bounded search is exhausted.
IntVec find_norm_minus2(const GramLattice& lattice,
                        const std::function<bool(const IntVec&)>& accept);

/// The seed list used by the search above (simple roots and U roots, in the
/// fixed enumeration order). Exposed for the perturbation engine's step-2
/// candidate sweep.
std::vector<IntVec> norm_minus2_seeds(const GramLattice& lattice);

}  // namespace k3lat
