#include "k3lat/modp.hpp"

#include <string>

namespace k3lat {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

void require_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw Error(ErrorCode::InvalidPrime, "modulus " + std::to_string(p) + " is not an odd prime");
  }
}

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

std::int64_t normalize(std::int64_t x, std::int64_t p) {
  std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

}  // namespace

ModP::ModP(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  require_odd_prime(modulus);
  if (modulus >= kMaxModulus) {
    throw Error(ErrorCode::UnsupportedModulus, "modulus too large: " + std::to_string(modulus));
  }
  value_ = normalize(value, modulus);
}

ModP::ModP(const Int& value, std::int64_t modulus)
    : ModP(static_cast<std::int64_t>(0), modulus) {
  value_ = mod_p(value, modulus);
}

void ModP::check_same(const ModP& o) const {
  if (modulus_ != o.modulus_) {
    throw Error(ErrorCode::ModulusMismatch,
                "mixed moduli " + std::to_string(modulus_) + " and " + std::to_string(o.modulus_));
  }
}

ModP ModP::operator+(const ModP& o) const {
  check_same(o);
  return ModP(value_ + o.value_, modulus_);
}

ModP ModP::operator-(const ModP& o) const {
  check_same(o);
  return ModP(value_ - o.value_, modulus_);
}

ModP ModP::operator*(const ModP& o) const {
  check_same(o);
  return ModP(value_ * o.value_, modulus_);
}

ModP ModP::operator-() const { return ModP(-value_, modulus_); }

ModP ModP::pow(std::int64_t e) const {
  ModP base = *this;
  ModP acc(1, modulus_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

ModP inverse(const ModP& a) {
  if (a.is_zero()) {
    throw Error(ErrorCode::ZeroInverse, "0 has no inverse mod " + std::to_string(a.modulus()));
  }
  // Extended Euclid on (value, p).
  std::int64_t r0 = a.value(), r1 = a.modulus();
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return ModP(s0, a.modulus());
}

int legendre(const ModP& a) {
  if (a.is_zero()) return 0;
  ModP e = a.pow((a.modulus() - 1) / 2);
  return e.value() == 1 ? +1 : -1;
}

ModP sqrt_mod(const ModP& a) {
  const std::int64_t p = a.modulus();
  if (p >= 1000000) {
    throw Error(ErrorCode::UnsupportedModulus,
                "sqrt_mod search capped at p < 10^6, got " + std::to_string(p));
  }
  if (legendre(a) == -1) {
    throw Error(ErrorCode::NotASquare,
                std::to_string(a.value()) + " is not a square mod " + std::to_string(p));
  }
  // The smaller root lies in [0, (p-1)/2]; scan upward and return the first hit.
  for (std::int64_t r = 0; r <= (p - 1) / 2; ++r) {
    if ((r * r) % p == a.value()) return ModP(r, p);
  }
  throw Error(ErrorCode::NotASquare, "unreachable: legendre said square");
}

std::pair<ModP, ModP> solve_residue_lemma(const ModP& A, const ModP& B) {
  const std::int64_t p = A.modulus();
  if (B.modulus() != p) {
    throw Error(ErrorCode::ModulusMismatch, "A and B live in different prime fields");
  }
  if (p < 5) {
    throw Error(ErrorCode::InvalidPrime, "residue lemma requires p >= 5 (fails at p = 3)");
  }
  if (A.is_zero() || B.is_zero()) {
    throw Error(ErrorCode::NoSolution, "residue lemma requires A, B nonzero");
  }
  for (std::int64_t y = 0; y < p; ++y) {
    ModP ym(y, p);
    ModP s = A - B * ym * ym;
    if (legendre(s) == +1) return {ym, s};
  }
  throw Error(ErrorCode::NoSolution,
              "no y with A - B*y^2 a nonzero square mod " + std::to_string(p));
}

}  // namespace k3lat
