#pragma once
// Exact arithmetic in cyclotomic fields Q(zeta_N).  A CycNum holds its order
// N and phi(N) rational coordinates in the power basis {zeta_N^i}, always
// reduced modulo the N-th cyclotomic polynomial, so equality of values at
// one order is coordinate equality.  Binary operations lift both operands to
// the lcm of their orders; nothing is descended automatically (see
// minimal_order / descend_to_order for the explicit normalization utility).

#include <optional>
#include <string>
#include <vector>

#include "mc4p/errors.hpp"
#include "mc4p/rational.hpp"

namespace mc4p {

long euler_phi(long n);
std::vector<long> divisors_of(long n);

class CycNum {
 public:
  CycNum();                  // zero in Q = Q(zeta_1)
  explicit CycNum(const Rat& r);
  explicit CycNum(long n) : CycNum(Rat(n)) {}
  CycNum(long order, std::vector<Rat> coeffs);  // validates coeff count

  static CycNum zeta(long order);               // the root zeta_order itself
  static CycNum zeta_pow(long order, long k);   // zeta_order^k, any integer k

  long order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;          // true iff equal to an element of Q
  Rat to_rational() const;           // throws ParameterError if not rational

  // Re-express in Q(zeta_m); requires order() | m.
  CycNum lifted_to(long m) const;

  // Smallest d | order() with the value in Q(zeta_d), and the corresponding
  // re-expression.  These are the explicit descent utilities.
  long minimal_order() const;
  CycNum descend_to_order(long d) const;  // requires the value to lie there
  CycNum reduced() const { return descend_to_order(minimal_order()); }

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }

  CycNum inv() const;                 // throws SingularError on zero
  CycNum pow(long e) const;           // negative allowed via inv

  // Multiplicative order when the value is a root of unity (it always
  // divides 2*order()), nullopt otherwise.
  std::optional<long> root_of_unity_order() const;

  // Mathematical equality; lifts to a common order first.
  bool eq(const CycNum& o) const;
  friend bool operator==(const CycNum& a, const CycNum& b) { return a.eq(b); }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !a.eq(b); }

  // Deterministic serialization "N|c0,c1,...", also the hash key used by
  // orbit and closure searches.
  std::string key() const;

  // Pivot-selection size measure: summed bit sizes over nonzero coords.
  size_t complexity() const;

 private:
  long order_;
  std::vector<Rat> c_;
};

inline CycNum operator*(const Rat& r, CycNum a) { return a *= CycNum(r); }

// Galois automorphism zeta_N -> zeta_N^exponent, gcd(exponent, N) = 1.
struct GaloisElement {
  long order;
  long exponent;

  GaloisElement(long order_, long exponent_);
  GaloisElement compose(const GaloisElement& o) const;  // same order required
};

CycNum galois_apply(const GaloisElement& sigma, const CycNum& a);

// 2cos(pi k / n) = zeta_{2n}^k + zeta_{2n}^{-k}, exact, order 2n.
CycNum two_cos(long k, long n);
// 2sin(pi k / n) = -zeta_4 (zeta_{2n}^k - zeta_{2n}^{-k}), order lcm(4, 2n).
CycNum two_sin(long k, long n);

// Degree over Q of the subfield generated by the given elements
// (phi(N) / |stabilizer in Gal(Q(zeta_N)/Q)| after lifting all to a common
// order N).
long subfield_degree(const std::vector<CycNum>& elements);

// Smallest d (dividing the common order) with every element in Q(zeta_d).
long common_conductor(const std::vector<CycNum>& elements);

}  // namespace mc4p
