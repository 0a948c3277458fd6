#pragma once

#include <string>
#include <vector>

#include "mc4p/monodromy.hpp"

namespace mc4p {

// One half-twist on the ordered tuple (M_0, M_1, M_lambda, M_inf): index i
// acts on the adjacent pair at positions (i, i+1) by the Hurwitz rule
//   (A, B) -> (B, B^-1 A B),
// the inverse by (A, B) -> (A B A^-1, A).  The total product is preserved.
struct BraidMove {
  int index;  // 1, 2, or 3
  bool inverse = false;
};

MonodromyTuple apply_move(const MonodromyTuple& t, const BraidMove& mv);

// Action of the squared move on the seven trace coordinates, valid for
// determinant-one tuples.  The boundary traces are untouched; two of
// (x, y, z) move by successive reflections of the form
//   t -> b_t - t - (product of the other two),
// where b_x = a0 a1 + al ai and cyclically.  The squares of the first and
// third moves agree on coordinates because tr(Ml Mi) = x and tr(Mi M0) = y.
TraceCoordinates squared_move_on_coordinates(const TraceCoordinates& tc, int index,
                                             bool inverse);

struct OrbitPoint {
  CycNum x, y, z;
  // Letters a/b/c for the squared moves with index 1/2/3, upper case for
  // their inverses; the seed carries the empty word.
  std::string word;
};

struct OrbitReport {
  TraceCoordinates seed;
  bool exceeded;  // true when more than `bound` distinct points were found
  long size;      // distinct points discovered; the full orbit iff !exceeded
  // Fully expanded points in breadth-first order.  Complete when !exceeded;
  // when the bound was passed this holds only the processed prefix.
  std::vector<OrbitPoint> points;
};

// Breadth-first closure of the squared-move action on (x, y, z), with exact
// field equality as the membership test.  Requires an irreducible rank-2
// tuple with determinant-one entries.
OrbitReport orbit(const MonodromyTuple& t, long bound);

// Quoted CSV with columns x, y, z, word; one row per expanded orbit point.
std::string orbit_csv(const OrbitReport& r);

}  // namespace mc4p
