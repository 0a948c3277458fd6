#pragma once
// The double cover y^2 = x(x-1)(x-lambda) of the projective line branched at
// {0, 1, lambda, infinity}: group law, division polynomials, the x-coordinate
// shadow of multiplication by m, torsion abscissas, and point bookkeeping
// over Q and small prime fields (with their quadratic extensions).

#include <algorithm>
#include <optional>
#include <vector>

#include "mc4p/finite_field.hpp"
#include "mc4p/poly.hpp"

namespace mc4p {

template <class F>
struct LegendreCurve {
  F lambda;

  explicit LegendreCurve(const F& l) : lambda(l) {
    if (field_is_zero(l) || field_is_zero(l - field_one_like(l)))
      throw ParameterError("curve parameter must avoid 0 and 1");
  }

  // right-hand side x(x-1)(x-lambda) = x^3 - (1+lambda)x^2 + lambda x
  F rhs(const F& x) const {
    return x * (x - field_one_like(lambda)) * (x - lambda);
  }

  Poly<F> rhs_poly() const {
    const F one = field_one_like(lambda);
    const F zero = field_zero_like(lambda);
    return Poly<F>(zero, {zero, lambda, -(one + lambda), one});
  }
};

template <class F>
struct ECPoint {
  bool infinity;
  F x, y;
};

template <class F>
ECPoint<F> infinity_point(const F& exemplar) {
  const F z = field_zero_like(exemplar);
  return {true, z, z};
}

template <class F>
ECPoint<F> affine_point(const F& x, const F& y) {
  return {false, x, y};
}

template <class F>
bool on_curve(const LegendreCurve<F>& e, const ECPoint<F>& pt) {
  if (pt.infinity) return true;
  return field_is_zero(pt.y * pt.y - e.rhs(pt.x));
}

template <class F>
ECPoint<F> point_neg(const ECPoint<F>& pt) {
  if (pt.infinity) return pt;
  return {false, pt.x, -pt.y};
}

template <class F>
bool points_equal(const ECPoint<F>& pt, const ECPoint<F>& q) {
  if (pt.infinity || q.infinity) return pt.infinity == q.infinity;
  return field_is_zero(pt.x - q.x) && field_is_zero(pt.y - q.y);
}

// chord-tangent law; callers have already validated membership
template <class F>
ECPoint<F> add_raw(const LegendreCurve<F>& e, const ECPoint<F>& pt, const ECPoint<F>& q) {
  if (pt.infinity) return q;
  if (q.infinity) return pt;
  const F one = field_one_like(e.lambda);
  const F two = one + one;
  if (field_is_zero(pt.x - q.x)) {
    if (field_is_zero(pt.y + q.y)) return infinity_point(e.lambda);
    // tangent: s = (3x^2 - 2(1+lambda)x + lambda) / (2y)
    const F three = two + one;
    const F s = (three * pt.x * pt.x - two * (one + e.lambda) * pt.x + e.lambda) *
                field_inv(two * pt.y);
    const F x3 = s * s + one + e.lambda - pt.x - q.x;
    return {false, x3, s * (pt.x - x3) - pt.y};
  }
  const F s = (q.y - pt.y) * field_inv(q.x - pt.x);
  const F x3 = s * s + one + e.lambda - pt.x - q.x;
  return {false, x3, s * (pt.x - x3) - pt.y};
}

template <class F>
ECPoint<F> point_add(const LegendreCurve<F>& e, const ECPoint<F>& pt, const ECPoint<F>& q) {
  if (!on_curve(e, pt) || !on_curve(e, q))
    throw ParameterError("point is not on the curve");
  return add_raw(e, pt, q);
}

template <class F>
ECPoint<F> scalar_mul(const LegendreCurve<F>& e, long n, const ECPoint<F>& pt) {
  if (!on_curve(e, pt)) throw ParameterError("point is not on the curve");
  ECPoint<F> base = pt;
  if (n < 0) {
    base = point_neg(base);
    n = -n;
  }
  ECPoint<F> acc = infinity_point(e.lambda);
  while (n > 0) {
    if (n & 1) acc = add_raw(e, acc, base);
    base = add_raw(e, base, base);
    n >>= 1;
  }
  return acc;
}

// psi_m = x_part * (2y)^has_y; the y factor appears exactly for even m.
template <class F>
struct DivisionPoly {
  Poly<F> x_part;
  bool has_y;
};

namespace ecdetail {

template <class F>
Poly<F> psi3(const LegendreCurve<F>& e) {
  const F one = field_one_like(e.lambda);
  const F l = e.lambda;
  // 3x^4 - 4(1+lambda)x^3 + 6*lambda x^2 - lambda^2
  return Poly<F>(field_zero_like(l),
                 {-(l * l), field_zero_like(l), (one + one + one + one + one + one) * l,
                  -(one + one + one + one) * (one + l), one + one + one});
}

template <class F>
Poly<F> psi4_part(const LegendreCurve<F>& e) {
  // x-coordinates of the exact-order-4 points come from pulling each branch
  // abscissa back through duplication (x^2-lambda)^2 / 4x(x-1)(x-lambda);
  // each pullback is a perfect square, leaving the three quadratics below
  const F one = field_one_like(e.lambda);
  const F zero = field_zero_like(e.lambda);
  const F two = one + one;
  const F l = e.lambda;
  const Poly<F> q0(zero, {-l, zero, one});             // x^2 - lambda
  const Poly<F> q1(zero, {l, -two, one});              // x^2 - 2x + lambda
  const Poly<F> ql(zero, {l, -two * l, one});          // x^2 - 2*lambda*x + lambda
  return (q0 * q1 * ql).scaled(two);
}

// x-parts of psi_0 .. psi_m
template <class F>
std::vector<Poly<F>> division_chain(const LegendreCurve<F>& e, long m) {
  const F zero = field_zero_like(e.lambda);
  const F one = field_one_like(e.lambda);
  const F four = one + one + one + one;
  const Poly<F> B = e.rhs_poly().scaled(four);  // (2y)^2 after substitution
  std::vector<Poly<F>> P;
  P.reserve(m + 1);
  P.push_back(Poly<F>(zero));
  if (m >= 1) P.push_back(Poly<F>::constant(one));
  if (m >= 2) P.push_back(Poly<F>::constant(one));
  if (m >= 3) P.push_back(psi3(e));
  if (m >= 4) P.push_back(psi4_part(e));
  for (long n = 5; n <= m; ++n) {
    if (n % 2) {
      const long k = (n - 1) / 2;
      Poly<F> t1 = P[k + 2] * P[k] * P[k] * P[k];
      Poly<F> t2 = P[k - 1] * P[k + 1] * P[k + 1] * P[k + 1];
      // (2y)^4 from the four even factors collapses onto one side
      if (k % 2 == 0)
        t1 = t1 * B * B;
      else
        t2 = t2 * B * B;
      P.push_back(t1 - t2);
    } else {
      const long k = n / 2;
      P.push_back(P[k] * (P[k + 2] * P[k - 1] * P[k - 1] - P[k - 2] * P[k + 1] * P[k + 1]));
    }
  }
  return P;
}

}  // namespace ecdetail

template <class F>
DivisionPoly<F> division_poly(const LegendreCurve<F>& e, long m) {
  if (m < 1) throw ParameterError("division polynomial index must be positive");
  auto chain = ecdetail::division_chain(e, m);
  return {chain[m], m % 2 == 0};
}

template <class F>
struct RationalMap {
  Poly<F> num, den;  // coprime, monic denominator

  long degree() const { return std::max(num.degree(), den.degree()); }

  // finite value, or nullopt when x is a pole
  std::optional<F> eval(const F& x) const {
    const F d = den.eval(x);
    if (field_is_zero(d)) return std::nullopt;
    return num.eval(x) * field_inv(d);
  }

  // the image of infinity is infinity exactly when num dominates
  bool fixes_infinity() const { return num.degree() > den.degree(); }
};

// x-coordinate shadow of multiplication by m:
//   x o [m] = (x psi_m^2 - psi_{m-1} psi_{m+1}) / psi_m^2
// with y^2 eliminated through the curve equation, then gcd-reduced.
template <class F>
RationalMap<F> mult_x_map(const LegendreCurve<F>& e, long m) {
  if (m < 1) throw ParameterError("multiplication index must be positive");
  const F one = field_one_like(e.lambda);
  if (m == 1) return {Poly<F>::x(one), Poly<F>::constant(one)};
  const F four = one + one + one + one;
  const Poly<F> B = e.rhs_poly().scaled(four);
  auto chain = ecdetail::division_chain(e, m + 1);
  Poly<F> S = chain[m] * chain[m];
  Poly<F> T = chain[m - 1] * chain[m + 1];
  if (m % 2 == 0)
    S = S * B;
  else
    T = T * B;
  Poly<F> num = Poly<F>::x(one) * S - T;
  Poly<F> den = S;
  const Poly<F> g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  const F scale = field_inv(den.leading());
  return {num.scaled(scale), den.scaled(scale)};
}

template <class F>
struct FlowMap {
  RationalMap<F> map;
  long formal_degree;
  bool separable;  // false when the reduced fraction lies in k(x^char)
};

// The self-map of the x-line covering multiplication by an odd prime p: the
// unique g with g(x(P)) = x([p] P).  Fixes the four branch abscissas because
// odd multiples act trivially on the 2-torsion.
template <class F>
FlowMap<F> psi_p_map(const LegendreCurve<F>& e, long p) {
  if (p < 3 || p % 2 == 0 || !is_prime_long(p))
    throw ParameterError("the flow map is defined for odd primes");
  RationalMap<F> g = mult_x_map(e, p);
  const bool separable =
      !(g.num.derivative() * g.den == g.num * g.den.derivative());
  return {g, g.degree(), separable};
}

// Monic squarefree polynomial whose roots are exactly the abscissas of the
// nonzero points killed by [m].
template <class F>
Poly<F> torsion_x_poly(const LegendreCurve<F>& e, long m) {
  if (m < 2) throw ParameterError("torsion index must be at least 2");
  DivisionPoly<F> d = division_poly(e, m);
  const Poly<F> full = d.has_y ? d.x_part * e.rhs_poly() : d.x_part;
  return squarefree_part(full);
}

// ---- finite-field specific helpers ----

// |E(F_{p^k})| by character sums for k = 1, by the Weil relation for k = 2
// when the curve is defined over the prime field (brute force otherwise).
inline long point_count(const LegendreCurve<Fq>& e, int k) {
  if (!e.lambda.attached()) throw ParameterError("point counting needs a finite field");
  if (k != 1 && k != 2) throw ParameterError("only degree 1 and 2 fields are supported");
  const long p = e.lambda.modulus();
  if (k == 1) {
    if (!e.lambda.in_prime_subfield())
      throw ParameterError("curve is not defined over the prime field");
    // strip any extension tag so quadratic residues are tested in F_p
    const LegendreCurve<Fq> base(Fq(e.lambda.a(), p));
    long n = 1;
    for (long v = 0; v < p; ++v) {
      const Fq f = base.rhs(Fq(v, p));
      if (f.is_zero())
        n += 1;
      else if (is_square(f))
        n += 2;
    }
    return n;
  }
  if (e.lambda.in_prime_subfield()) {
    const long a = p + 1 - point_count(e, 1);
    return p * p + 1 - (a * a - 2 * p);
  }
  long n = 1;
  for (long i = 0; i < p * p; ++i) {
    const Fq f = e.rhs(Fq::in_ext(i % p, i / p, p));
    if (f.is_zero())
      n += 1;
    else if (is_square(f))
      n += 2;
  }
  return n;
}

// Deterministic point sample: abscissas are scanned in a fixed enumeration of
// F_{p^k} and each square right-hand side contributes both points.  Returns
// fewer than `count` only when the whole field has been exhausted.
inline std::vector<ECPoint<Fq>> sample_points(const LegendreCurve<Fq>& e, int k, long count) {
  if (!e.lambda.attached()) throw ParameterError("sampling needs a finite field");
  if (k != 1 && k != 2) throw ParameterError("only degree 1 and 2 fields are supported");
  const long p = e.lambda.modulus();
  if (k == 1 && !e.lambda.in_prime_subfield())
    throw ParameterError("curve is not defined over the prime field");
  const LegendreCurve<Fq> base(k == 1 ? Fq(e.lambda.a(), p) : e.lambda.lifted_to_ext());
  const long limit = k == 1 ? p : p * p;
  std::vector<ECPoint<Fq>> out;
  for (long i = 0; i < limit && static_cast<long>(out.size()) < count; ++i) {
    const Fq x = k == 1 ? Fq(i, p) : Fq::in_ext(i % p, i / p, p);
    const Fq f = base.rhs(x);
    if (f.is_zero()) {
      out.push_back(affine_point(x, f));
      continue;
    }
    const auto y = field_sqrt(f);
    if (!y) continue;
    out.push_back(affine_point(x, *y));
    if (static_cast<long>(out.size()) < count) out.push_back(affine_point(x, -*y));
  }
  return out;
}

// Lifts an abscissa from the prime field to a curve point (over F_p or, when
// the right-hand side is a non-square, over F_p^2), computes the exact order
// of the lift, and reports it when within the bound.
inline std::optional<long> is_torsion_x(const LegendreCurve<Fq>& e, const Fq& x0,
                                        long m_bound) {
  if (!e.lambda.attached() || !x0.attached())
    throw ParameterError("torsion queries need a finite field");
  if (!e.lambda.in_prime_subfield() || !x0.in_prime_subfield())
    throw ParameterError("torsion queries take prime-field inputs");
  const long p = e.lambda.modulus();
  if (x0.modulus() != p) throw ParameterError("mismatched moduli");
  const LegendreCurve<Fq> base(Fq(e.lambda.a(), p));
  const Fq x(x0.a(), p);
  const Fq f = base.rhs(x);
  if (f.is_zero()) return 2 <= m_bound ? std::optional<long>(2) : std::nullopt;
  const bool needs_ext = !is_square(f);
  const auto y = field_sqrt(needs_ext ? f.lifted_to_ext() : f);
  if (!y) throw ParameterError("right-hand side has no square root in the quadratic extension");
  const ECPoint<Fq> pt = affine_point(needs_ext ? x.lifted_to_ext() : x, *y);
  const long n = point_count(base, needs_ext ? 2 : 1);
  long order = n;
  for (const auto& [q, exp] : factorize(n)) {
    for (int i = 0; i < exp && order % q == 0; ++i) {
      if (!scalar_mul(base, order / q, pt).infinity) break;
      order /= q;
    }
  }
  return order <= m_bound ? std::optional<long>(order) : std::nullopt;
}

}  // namespace mc4p
