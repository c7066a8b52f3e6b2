#pragma once

// Exact integer matrix algorithms: column Hermite normal form with its
// unimodular transform, saturated integer kernels, and fraction-free
// determinants. These are the engines behind orthogonal complements and
// lattice saturation.

#include "k3lat/numeric.hpp"

#include <vector>

namespace k3lat {

struct HnfResult {
  IntMat h;  // column HNF, m x n
  IntMat u;  // unimodular, n x n, with m * u = h
};

/// Column-style Hermite normal form. Convention, fixed for reproducibility:
/// nonzero columns come first; each pivot (the first nonzero entry of its
/// column, scanning rows top-down) is positive; in a pivot's row, entries in
/// earlier columns are reduced into [0, pivot); columns right of a pivot are
/// zero in its row. Zero columns trail.
HnfResult hnf(const IntMat& m);

/// Structural check of the convention above (used by the test oracles).
bool is_column_hnf(const IntMat& h);

/// Basis of {v in Z^n : m v = 0}, saturated: it generates the full integer
/// kernel, not a finite-index sublattice. Canonicalized through a second HNF
/// so equal kernels produce identical bases. Empty for injective m.
std::vector<IntVec> integer_kernel(const IntMat& m);

/// Rank over Q (number of nonzero HNF columns).
Index rank_of(const IntMat& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMat& m);

/// Columns of a matrix as vectors, skipping all-zero columns.
std::vector<IntVec> nonzero_columns(const IntMat& m);

}  // namespace k3lat
