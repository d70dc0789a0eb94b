#pragma once
// Exact rational / integer scalars on top of GMP.
#include <gmpxx.h>
#include <string>
#include <vector>
#include <stdexcept>

namespace rtq {

using Int = mpz_class;
using Rat = mpq_class;

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// floor of a rational
inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

// fractional part in [0,1)
inline Rat frac(const Rat& r) { return r - Rat(rat_floor(r)); }

inline Rat parse_rat(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace rtq
