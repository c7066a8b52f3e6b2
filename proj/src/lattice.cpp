#include "k3lat/lattice.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>

namespace k3lat {

GramLattice::GramLattice(IntMat gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
  if (gram_.rows() != gram_.cols() || gram_.rows() == 0) {
    throw Error(ErrorCode::DegenerateForm, "Gram matrix must be square and nonempty");
  }
  for (Index i = 0; i < gram_.rows(); ++i) {
    for (Index j = i + 1; j < gram_.cols(); ++j) {
      if (gram_(i, j) != gram_(j, i)) {
        throw Error(ErrorCode::DegenerateForm, "Gram matrix must be symmetric");
      }
    }
  }
  det_ = k3lat::det(gram_);
  if (det_ == 0) {
    throw Error(ErrorCode::DegenerateForm, "Gram matrix is degenerate");
  }
}

bool GramLattice::is_even() const {
  for (Index i = 0; i < gram_.rows(); ++i) {
    if (gram_(i, i) % 2 != 0) return false;
  }
  return true;
}

Int GramLattice::inner(const IntVec& x, const IntVec& y) const {
  if (x.size() != rank() || y.size() != rank()) {
    throw Error(ErrorCode::LatticeMismatch, "vector length does not match lattice rank");
  }
  return x.dot(gram_ * y);
}

Rat GramLattice::inner(const RatVec& x, const RatVec& y) const {
  if (x.size() != rank() || y.size() != rank()) {
    throw Error(ErrorCode::LatticeMismatch, "vector length does not match lattice rank");
  }
  RatMat g = gram_.cast<Rat>();
  return x.dot(g * y);
}

Signature GramLattice::signature() const {
  const Index n = rank();
  RatMat a = gram_.cast<Rat>();
  Signature sig;
  for (Index i = 0; i < n; ++i) {
    if (a(i, i) == 0) {
      Index diag = -1, cross = -1;
      for (Index j = i + 1; j < n; ++j) {
        if (diag < 0 && a(j, j) != 0) diag = j;
        if (cross < 0 && a(i, j) != 0) cross = j;
      }
      if (diag >= 0) {
        a.row(i).swap(a.row(diag));
        a.col(i).swap(a.col(diag));
      } else if (cross >= 0) {
        // All remaining diagonal entries vanish; e_i += e_cross makes a(i,i) = 2 a(i,cross).
        a.row(i) += a.row(cross);
        a.col(i) += a.col(cross);
      } else {
        throw Error(ErrorCode::DegenerateForm, "form degenerates during diagonalization");
      }
    }
    for (Index j = i + 1; j < n; ++j) {
      if (a(i, j) == 0) continue;
      Rat f = a(i, j) / a(i, i);
      a.row(j) -= f * a.row(i);
      a.col(j) -= f * a.col(i);
    }
    if (a(i, i) > 0) {
      ++sig.n_plus;
    } else {
      ++sig.n_minus;
    }
  }
  return sig;
}

Int inner(const LatticeVector& x, const LatticeVector& y) {
  if (!x.lattice || !y.lattice) {
    throw Error(ErrorCode::LatticeMismatch, "vector without a lattice");
  }
  if (x.lattice != y.lattice && !(*x.lattice == *y.lattice)) {
    throw Error(ErrorCode::LatticeMismatch, "vectors live in different lattices");
  }
  return x.lattice->inner(x.coords, y.coords);
}

GramLattice build_U() {
  IntMat g(2, 2);
  g << 0, 1, 1, 0;
  return GramLattice(std::move(g), "U");
}

namespace {

// Bourbaki E8 adjacency (1-based): chain 1-3-4-5-6-7-8, node 2 attached to 4.
constexpr std::array<std::pair<int, int>, 7> kE8Edges = {
    {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}}};

}  // namespace

GramLattice build_E8_neg() {
  IntMat g = IntMat::Zero(8, 8);
  for (Index i = 0; i < 8; ++i) g(i, i) = -2;
  for (auto [a, b] : kE8Edges) {
    g(a - 1, b - 1) = 1;
    g(b - 1, a - 1) = 1;
  }
  return GramLattice(std::move(g), "E8(-1)");
}

GramLattice build_lambda_d(long d) {
  if (d < 2 || d % 2 != 0) {
    throw Error(ErrorCode::InvalidDegree, "degree must be even and >= 2, got " + std::to_string(d));
  }
  IntMat g = IntMat::Zero(21, 21);
  g(0, 0) = -d;
  const IntMat u = build_U().gram();
  const IntMat e8 = build_E8_neg().gram();
  g.block(1, 1, 2, 2) = u;
  g.block(3, 3, 2, 2) = u;
  g.block(5, 5, 8, 8) = e8;
  g.block(13, 13, 8, 8) = e8;
  return GramLattice(std::move(g), "Lambda_" + std::to_string(d));
}

LatticePtr make_lambda_d(long d) {
  return std::make_shared<const GramLattice>(build_lambda_d(d));
}

std::optional<long> lambda_degree(const GramLattice& lattice) {
  if (lattice.rank() != 21) return std::nullopt;
  const Int& head = lattice.gram()(0, 0);
  if (head >= 0 || !head.fits_slong_p()) return std::nullopt;
  long d = -head.get_si();
  if (d < 2 || d % 2 != 0) return std::nullopt;
  if (lattice.gram() != build_lambda_d(d).gram()) return std::nullopt;
  return d;
}

bool is_primitive(const IntVec& v) { return content(v) == 1; }

IntVec primitivize(const IntVec& v) {
  Int g = content(v);
  if (g == 0) {
    throw Error(ErrorCode::ZeroVector, "cannot primitivize the zero vector");
  }
  IntVec out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    mpz_divexact(out(i).get_mpz_t(), v(i).get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

IntVec primitivize(const RatVec& v) {
  Int l = 1;
  for (Index i = 0; i < v.size(); ++i) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v(i).get_den().get_mpz_t());
  }
  IntVec scaled(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    Rat s = v(i) * Rat(l);
    scaled(i) = s.get_num();  // exact: denominator is 1 after scaling by the lcm
  }
  return primitivize(scaled);
}

namespace {

std::vector<IntVec> saturate_integer_columns(const IntMat& a) {
  const Index n = a.rows();
  const Index k = a.cols();
  if (rank_of(a) != k) {
    throw Error(ErrorCode::DependentInput, "input vectors are linearly dependent");
  }
  // Double complement: D = {x : <v_i, x> = 0}, then {w : <d, w> = 0 for d in D}.
  // Both kernels are saturated, so the result is span_Q(V) intersected with Z^n.
  IntMat at = a.transpose();
  std::vector<IntVec> dual = integer_kernel(at);
  IntMat dt(static_cast<Index>(dual.size()), n);
  for (Index r = 0; r < dt.rows(); ++r) dt.row(r) = dual[static_cast<std::size_t>(r)].transpose();
  return integer_kernel(dt);
}

}  // namespace

std::vector<IntVec> saturate(const std::vector<RatVec>& v) {
  if (v.empty()) return {};
  const Index n = v.front().size();
  IntMat a(n, static_cast<Index>(v.size()));
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].size() != n) {
      throw Error(ErrorCode::LatticeMismatch, "saturate: mixed vector lengths");
    }
    a.col(static_cast<Index>(j)) = primitivize(v[j]);
  }
  return saturate_integer_columns(a);
}

std::vector<IntVec> saturate_int(const std::vector<IntVec>& v) {
  if (v.empty()) return {};
  const Index n = v.front().size();
  IntMat a(n, static_cast<Index>(v.size()));
  for (std::size_t j = 0; j < v.size(); ++j) a.col(static_cast<Index>(j)) = v[j];
  return saturate_integer_columns(a);
}

namespace {

IntVec unit_vector(Index n, Index i) {
  IntVec v = IntVec::Zero(n);
  v(i) = 1;
  return v;
}

// Lambda_d slot offsets.
constexpr Index kU1 = 1, kU2 = 3, kE81 = 5, kE82 = 13;

// int64 copy of the E8(-1) Gram for the fast combination sweep.
std::array<std::array<std::int64_t, 8>, 8> e8_gram_i64() {
  std::array<std::array<std::int64_t, 8>, 8> g{};
  for (int i = 0; i < 8; ++i) g[i][i] = -2;
  for (auto [a, b] : kE8Edges) {
    g[a - 1][b - 1] = 1;
    g[b - 1][a - 1] = 1;
  }
  return g;
}

}  // namespace

std::vector<IntVec> norm_minus2_seeds(const GramLattice& lattice) {
  std::vector<IntVec> seeds;
  const Index n = lattice.rank();
  if (lambda_degree(lattice)) {
    for (Index i = 0; i < 8; ++i) seeds.push_back(unit_vector(n, kE81 + i));
    for (Index i = 0; i < 8; ++i) seeds.push_back(unit_vector(n, kE82 + i));
    for (Index u : {kU1, kU2}) {
      IntVec v = IntVec::Zero(n);
      v(u) = 1;
      v(u + 1) = -1;  // (e - f, e - f) = -2
      seeds.push_back(v);
    }
    return seeds;
  }
  // Generic even lattice: diagonal entries and simple two-term combinations.
  for (Index i = 0; i < n; ++i) {
    if (lattice.gram()(i, i) == -2) seeds.push_back(unit_vector(n, i));
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      for (int s : {+1, -1}) {
        IntVec v = IntVec::Zero(n);
        v(i) = 1;
        v(j) = s;
        if (lattice.inner(v, v) == -2) seeds.push_back(v);
      }
    }
  }
  return seeds;
}

IntVec find_norm_minus2(const GramLattice& lattice,
                        const std::function<bool(const IntVec&)>& accept) {
  for (const IntVec& v : norm_minus2_seeds(lattice)) {
    if (!accept || accept(v)) return v;
  }
  if (!lambda_degree(lattice)) {
    throw Error(ErrorCode::NotFound, "norm -2 search exhausted");
  }
  // Escalation: root-coefficient combinations inside each E8 block, graded by
  // sup-norm, then by block, then lexicographically. Norms are evaluated in
  // int64 (coefficients <= 3 keep every product tiny).
  const auto g8 = e8_gram_i64();
  const Index n = lattice.rank();
  for (int grade = 1; grade <= 3; ++grade) {
    for (Index base : {kE81, kE82}) {
      std::array<std::int64_t, 8> c{};
      c.fill(-grade);
      while (true) {
        std::int64_t sup = 0;
        for (auto x : c) sup = std::max(sup, std::abs(x));
        if (sup == grade) {
          std::int64_t norm = 0;
          for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) norm += c[i] * g8[i][j] * c[j];
          }
          if (norm == -2) {
            IntVec v = IntVec::Zero(n);
            for (int i = 0; i < 8; ++i) v(base + i) = c[i];
            if (!accept || accept(v)) return v;
          }
        }
        int pos = 7;
        while (pos >= 0 && c[pos] == grade) {
          c[pos] = -grade;
          --pos;
        }
        if (pos < 0) break;
        ++c[pos];
      }
    }
  }
  throw Error(ErrorCode::NotFound, "norm -2 search exhausted (sup-norm <= 3)");
}

}  // namespace k3lat
