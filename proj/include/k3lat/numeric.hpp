#pragma once

// Exact scalar types and dense containers used throughout: arbitrary-precision
// integers and rationals (GMP) inside Eigen matrices. No floating point enters
// any lattice computation; square classes mod p do not survive rounding.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100,
  };
};

}  // namespace Eigen

namespace k3lat {

using Int = mpz_class;
using Rat = mpq_class;
using Index = Eigen::Index;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Rational a/b in lowest terms with positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Canonical representative of x mod p in [0, p).
inline std::int64_t mod_p(const Int& x, std::int64_t p) {
  return static_cast<std::int64_t>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p)));
}

/// gcd of the absolute values of all entries; 0 for the zero vector.
Int content(const IntVec& v);

/// max_i |v_i| as an exact integer.
Int sup_norm(const IntVec& v);

/// ceil(q) for an exact rational.
Int ceil_rat(const Rat& q);

bool is_zero(const IntVec& v);

/// Decimal parse of an integer; throws on malformed input.
Int parse_int(const std::string& s);

/// Parse "a" or "a/b" into an exact rational; throws on malformed input or b = 0.
Rat parse_rat(const std::string& s);

/// "a" if the denominator is 1, otherwise "a/b" in lowest terms.
std::string rat_to_string(const Rat& q);

}  // namespace k3lat
