#pragma once

#include "mc4p/monodromy.hpp"

namespace mc4p {

// Multiplier for the convolution: a root of unity different from 1.
class ConvolutionScalar {
 public:
  explicit ConvolutionScalar(const CycNum& c);
  static ConvolutionScalar minus_one() { return ConvolutionScalar(CycNum(Rat(-1))); }

  const CycNum& value() const { return c_; }
  long order() const { return order_; }

 private:
  CycNum c_;
  long order_;
};

struct ConvolutionDetail {
  long dim_k = 0;    // sum of the fixed-space dimensions of the three inputs
  long dim_l = 0;    // common fixed space of the three block matrices
  long out_rank = 0;
};

// Convolution of the tuple with the scalar, realized on matrices: three block
// matrices of size 3n are formed, the invariant subspaces K (blockwise fixed
// vectors) and L (commonly fixed vectors) are split off, and the action on
// the quotient is returned as a new tuple.  Throws DegenerateError when the
// quotient collapses to dimension zero.
MonodromyTuple middle_convolve(const MonodromyTuple& t, const ConvolutionScalar& c,
                               ConvolutionDetail* detail = nullptr);

// Character of the first homology of the elliptic double cover branched at
// the four punctures, written additively: the two basis cycles map to
// zeta_m^a and zeta_m^b.
class CoverCharacter {
 public:
  CoverCharacter(long m, long a, long b);

  long modulus() const { return m_; }
  long a() const { return a_; }
  long b() const { return b_; }
  long exact_order() const;
  bool is_trivial() const { return a_ == 0 && b_ == 0; }

 private:
  long m_, a_, b_;
};

// The rank-2 tuple obtained by inducing the character from the fundamental
// group of the punctured double cover (an index-2 subgroup) up to the full
// punctured-line group.  Every local monodromy has trace zero.
MonodromyTuple induced_pushforward(const CoverCharacter& chi);

}  // namespace mc4p
