#pragma once
// Exact rationals.  GMP's mpq_class already provides canonical form
// (gcd(p,q)=1, q>0), arbitrary precision and value semantics, so Rat is a
// thin alias plus the parse/print helpers used by the JSON layer.

#include <gmpxx.h>

#include <string>

#include "mc4p/errors.hpp"

namespace mc4p {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p" or "p/q" in base 10.
inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw ParameterError("cannot parse rational '" + s + "'");
  if (r.get_den() == 0) throw ParameterError("rational with zero denominator");
  r.canonicalize();
  return r;
}

// Canonical decimal string, "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// Crude size measure used for pivot selection: total bits of numerator and
// denominator.
inline size_t rat_complexity(const Rat& r) {
  return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

}  // namespace mc4p
