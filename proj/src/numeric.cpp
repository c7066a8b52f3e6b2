#include "k3lat/numeric.hpp"

#include "k3lat/error.hpp"

#include <cctype>

namespace k3lat {

Int content(const IntVec& v) {
  Int g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v(i).get_mpz_t());
  }
  return g;
}

Int sup_norm(const IntVec& v) {
  Int m = 0;
  for (Index i = 0; i < v.size(); ++i) {
    Int a = abs(v(i));
    if (a > m) m = a;
  }
  return m;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_zero(const IntVec& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return false;
  }
  return true;
}

namespace {

bool looks_like_int(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Int parse_int(const std::string& s) {
  if (!looks_like_int(s)) {
    throw Error(ErrorCode::Parse, "not an integer: '" + s + "'");
  }
  return Int(s, 10);
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_int(s));
  }
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorCode::Parse, "zero denominator in '" + s + "'");
  }
  return make_rat(num, den);
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace k3lat
