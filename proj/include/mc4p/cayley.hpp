#pragma once

#include <array>
#include <optional>
#include <string>

#include "mc4p/convolution.hpp"
#include "mc4p/monodromy.hpp"

namespace mc4p {

struct CayleyParams {
  Rat alpha, beta;
};

// The explicit two-parameter family of tuples with unipotent local monodromy
// at the finite punctures, built from
//   x1 = 2cos(pi(alpha+beta)/2), x2 = 2sin(pi alpha/2), x3 = 2sin(pi beta/2)
// inside the cyclotomic field of order 4*lcm(denominators).  Throws
// ParameterError when x1 = 0 (alpha + beta an odd integer).
MonodromyTuple cayley_solution(const CayleyParams& p);

// Monomials of degree <= 3 in (x, y, z): graded lex descending, 20 entries.
const std::array<std::array<int, 3>, 20>& cubic_monomial_basis();

// Canonical rendering of a polynomial over that basis ("x*y*z + x^2 - 4").
std::string render_cubic(const std::array<Rat, 20>& coeffs);

// The stored relation satisfied by the (x, y, z) coordinates of every
// boundary-unipotent tuple, as canonical text.
std::string cayley_cubic_text();

// Evaluates the stored relation at the given coordinates.  Requires boundary
// traces exactly (2, 2, 2, -2).
CycNum cubic_residual(const TraceCoordinates& tc);

struct TraceField {
  long degree;     // field degree over the rationals
  long conductor;  // smallest N with all traces inside the order-N field
};

TraceField trace_field(const MonodromyTuple& t);

// Builds a boundary-unipotent tuple realizing a given point of the cubic
// surface.  Requires the relation to vanish at (x, y, z) and x != 2.
MonodromyTuple tuple_from_cubic_point(const CycNum& x, const CycNum& y, const CycNum& z);

// Parameter pairs (alpha, beta) in (0,2]^2 whose denominator lcm equals d,
// ordered by alpha then beta; the building block of the search order.
std::vector<CayleyParams> cayley_params_with_lcm(long d);

// First (alpha, beta), enumerated by increasing denominator lcm then
// lexicographically, whose solution is conjugate to t.  Requires t to pass
// star_check and be irreducible.
std::optional<CayleyParams> match_cayley(const MonodromyTuple& t, long denominator_bound);

}  // namespace mc4p
