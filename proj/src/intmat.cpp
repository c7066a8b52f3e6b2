#include "k3lat/intmat.hpp"

#include <utility>

namespace k3lat {

namespace {

void swap_cols(IntMat& a, Index i, Index j) {
  if (i != j) a.col(i).swap(a.col(j));
}

// col_j -= q * col_c, applied to both the work matrix and the transform.
void axpy_col(IntMat& h, IntMat& u, Index j, Index c, const Int& q) {
  if (q == 0) return;
  h.col(j) -= q * h.col(c);
  u.col(j) -= q * u.col(c);
}

}  // namespace

HnfResult hnf(const IntMat& m) {
  const Index rows = m.rows(), cols = m.cols();
  IntMat h = m;
  IntMat u = IntMat::Identity(cols, cols);
  Index c = 0;  // next pivot column slot
  for (Index r = 0; r < rows && c < cols; ++r) {
    // Euclidean elimination across columns c..cols-1 in row r.
    while (true) {
      // Smallest nonzero |entry| wins; ties broken by column index.
      Index best = -1;
      for (Index j = c; j < cols; ++j) {
        if (h(r, j) == 0) continue;
        if (best < 0 || abs(h(r, j)) < abs(h(r, best))) best = j;
      }
      if (best < 0) break;  // row has no pivot among remaining columns
      if (best != c) {
        swap_cols(h, c, best);
        swap_cols(u, c, best);
      }
      if (h(r, c) < 0) {
        h.col(c) = -h.col(c);
        u.col(c) = -u.col(c);
      }
      bool cleared = true;
      for (Index j = c + 1; j < cols; ++j) {
        if (h(r, j) == 0) continue;
        // Round-to-nearest quotient (pivot is positive) keeps remainders small.
        Int q;
        Int twice = 2 * h(r, j) + h(r, c);
        Int den2 = 2 * h(r, c);
        mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
        axpy_col(h, u, j, c, q);
        if (h(r, j) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(r, c) == 0) continue;  // no pivot in this row
    // Reduce earlier columns in the pivot row into [0, pivot).
    for (Index j = 0; j < c; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, j).get_mpz_t(), h(r, c).get_mpz_t());
      axpy_col(h, u, j, c, q);
    }
    ++c;
  }
  return {std::move(h), std::move(u)};
}

bool is_column_hnf(const IntMat& h) {
  const Index rows = h.rows(), cols = h.cols();
  auto pivot_row = [&](Index j) -> Index {
    for (Index r = 0; r < rows; ++r) {
      if (h(r, j) != 0) return r;
    }
    return -1;
  };
  Index prev = -1;
  bool seen_zero_col = false;
  for (Index j = 0; j < cols; ++j) {
    Index pr = pivot_row(j);
    if (pr < 0) {
      seen_zero_col = true;
      continue;
    }
    if (seen_zero_col) return false;    // zero columns must trail
    if (pr <= prev) return false;       // pivot rows strictly descend the staircase
    if (h(pr, j) <= 0) return false;    // positive pivots
    for (Index k = j + 1; k < cols; ++k) {
      if (h(pr, k) != 0) return false;  // pivot row zero to the right
    }
    for (Index k = 0; k < j; ++k) {
      if (h(pr, k) < 0 || h(pr, k) >= h(pr, j)) return false;
    }
    prev = pr;
  }
  return true;
}

std::vector<IntVec> nonzero_columns(const IntMat& m) {
  std::vector<IntVec> out;
  for (Index j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (Index r = 0; r < m.rows(); ++r) {
      if (m(r, j) != 0) {
        zero = false;
        break;
      }
    }
    if (!zero) out.push_back(m.col(j));
  }
  return out;
}

std::vector<IntVec> integer_kernel(const IntMat& m) {
  HnfResult res = hnf(m);
  const Index cols = m.cols();
  std::vector<Index> zero_cols;
  for (Index j = 0; j < cols; ++j) {
    bool zero = true;
    for (Index r = 0; r < m.rows(); ++r) {
      if (res.h(r, j) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) zero_cols.push_back(j);
  }
  if (zero_cols.empty()) return {};
  IntMat k(cols, static_cast<Index>(zero_cols.size()));
  for (Index j = 0; j < k.cols(); ++j) k.col(j) = res.u.col(zero_cols[static_cast<std::size_t>(j)]);
  // Second HNF makes the basis canonical (a unimodular change of the same lattice).
  IntMat canon = hnf(k).h;
  return nonzero_columns(canon);
}

Index rank_of(const IntMat& m) {
  IntMat h = hnf(m).h;
  Index rank = 0;
  for (Index j = 0; j < h.cols(); ++j) {
    for (Index r = 0; r < h.rows(); ++r) {
      if (h(r, j) != 0) {
        ++rank;
        break;
      }
    }
  }
  return rank;
}

Int det(const IntMat& m) {
  const Index n = m.rows();
  if (n != m.cols()) {
    return 0;
  }
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index piv = -1;
      for (Index r = k + 1; r < n; ++r) {
        if (a(r, k) != 0) {
          piv = r;
          break;
        }
      }
      if (piv < 0) return 0;
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

}  // namespace k3lat
