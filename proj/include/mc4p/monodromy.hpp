#pragma once

#include <optional>

#include "mc4p/matrix.hpp"

namespace mc4p {

using CMat = Matrix<CycNum>;

// A representation of the fundamental group of the line minus {0, 1, lambda,
// infinity}.  The loops around the three finite punctures generate freely, so
// the data is three invertible matrices of a common size; the matrix at
// infinity is forced by the relation g0*g1*glambda*ginf = 1 and is always
// derived from the stored three, never set independently.
class MonodromyTuple {
 public:
  MonodromyTuple(const CMat& m0, const CMat& m1, const CMat& mlambda);

  const CMat& M0() const { return m0_; }
  const CMat& M1() const { return m1_; }
  const CMat& Mlambda() const { return mlambda_; }
  const CMat& Minf() const { return minf_; }

  long rank() const { return m0_.rows(); }

 private:
  CMat m0_, m1_, mlambda_, minf_;
};

MonodromyTuple make_tuple(const CMat& m0, const CMat& m1, const CMat& mlambda);

// True when each finite-puncture matrix is a single unipotent Jordan block
// J(1,2) and the matrix at infinity is a single J(-1,2) block.  Requires a
// rank-2 tuple; any eigenvalue outside {1} resp. {-1} simply yields false.
bool star_check(const MonodromyTuple& t);

// Burnside criterion: the tuple is irreducible iff the algebra generated by
// the three matrices has full dimension n^2.
bool is_irreducible(const MonodromyTuple& t);

struct TraceCoordinates {
  CycNum a0, a1, alambda, ainf;  // boundary traces
  CycNum x, y, z;                // tr(M0*M1), tr(M1*Mlambda), tr(M0*Mlambda)

  bool operator==(const TraceCoordinates& o) const;
  bool operator!=(const TraceCoordinates& o) const { return !(*this == o); }
};

TraceCoordinates trace_coordinates(const MonodromyTuple& t);

// Seven-trace separation: two irreducible rank-2 tuples are simultaneously
// conjugate iff all of a0, a1, alambda, ainf, x, y, z agree.  Throws
// ParameterError if either tuple is reducible.
bool is_conjugate(const MonodromyTuple& a, const MonodromyTuple& b);

// Closes the generated matrix group by breadth-first products.  Returns the
// group order if the closure completes within `bound` elements, otherwise
// nullopt.
std::optional<long> finite_image(const MonodromyTuple& t, long bound);

}  // namespace mc4p
