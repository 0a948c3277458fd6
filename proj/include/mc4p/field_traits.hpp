#pragma once
// Small trait surface the Poly<> and Matrix<> templates need from a field
// type: contextual zero/one (finite-field elements carry their modulus, so
// constants are made "like" an existing element), zero test, inverse, and a
// size measure for pivot selection.

#include "mc4p/cyclotomic.hpp"
#include "mc4p/rational.hpp"

namespace mc4p {

inline Rat field_zero_like(const Rat&) { return Rat(0); }
inline Rat field_one_like(const Rat&) { return Rat(1); }
inline bool field_is_zero(const Rat& x) { return x == 0; }
inline Rat field_inv(const Rat& x) {
  if (x == 0) throw SingularError("division by zero rational");
  return 1 / x;
}
inline size_t field_complexity(const Rat& x) { return rat_complexity(x); }

inline CycNum field_zero_like(const CycNum& x) {
  return CycNum(Rat(0)).lifted_to(x.order());
}
inline CycNum field_one_like(const CycNum& x) {
  return CycNum(Rat(1)).lifted_to(x.order());
}
inline bool field_is_zero(const CycNum& x) { return x.is_zero(); }
inline CycNum field_inv(const CycNum& x) { return x.inv(); }
inline size_t field_complexity(const CycNum& x) { return x.complexity(); }

}  // namespace mc4p
