#pragma once
// Dense univariate polynomials over an exact field.  Used for
// characteristic polynomials over CycNum and for division polynomials /
// x-maps over Q and small prime fields.

#include <string>
#include <vector>

#include "mc4p/errors.hpp"
#include "mc4p/field_traits.hpp"

namespace mc4p {

template <class F>
class Poly {
 public:
  // zero polynomial "like" the exemplar (fixes field context)
  explicit Poly(const F& exemplar) : zero_(field_zero_like(exemplar)) {}
  Poly(const F& exemplar, std::vector<F> coeffs)
      : zero_(field_zero_like(exemplar)), c_(std::move(coeffs)) {
    trim();
  }

  static Poly constant(const F& v) { return Poly(v, {v}); }
  static Poly x(const F& exemplar) {
    return Poly(exemplar, {field_zero_like(exemplar), field_one_like(exemplar)});
  }

  long degree() const { return (long)c_.size() - 1; }  // -1 for zero poly
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  const F& zero_element() const { return zero_; }

  const F& coeff(long i) const {
    return (i >= 0 && i < (long)c_.size()) ? c_[i] : zero_;
  }
  const F& leading() const {
    if (c_.empty()) throw ParameterError("leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly operator-() const {
    Poly r = *this;
    for (F& v : r.c_) v = -v;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r(a.zero_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (size_t i = 0; i < r.c_.size(); ++i) {
      if (i < a.c_.size()) r.c_[i] = r.c_[i] + a.c_[i];
      if (i < b.c_.size()) r.c_[i] = r.c_[i] + b.c_[i];
    }
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.zero_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (field_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        if (!field_is_zero(b.c_[j])) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }

  Poly scaled(const F& s) const {
    Poly r(zero_);
    if (field_is_zero(s)) return r;
    r.c_ = c_;
    for (F& v : r.c_) v = v * s;
    r.trim();
    return r;
  }

  // Euclidean division; divisor must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw SingularError("polynomial division by zero");
    Poly q(a.zero_), r = a;
    F lead_inv = field_inv(b.leading());
    long db = b.degree();
    if (r.degree() >= db) q.c_.assign(r.degree() - db + 1, a.zero_);
    while (!r.is_zero() && r.degree() >= db) {
      long k = r.degree() - db;
      F f = r.leading() * lead_inv;
      q.c_[k] = f;
      for (long i = 0; i <= db; ++i) r.c_[i + k] = r.c_[i + k] - f * b.c_[i];
      r.trim();
    }
    q.trim();
    return {q, r};
  }

  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  // Exact division; throws if a nonzero remainder appears.
  friend Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw ParameterError("polynomial division was not exact");
    return q;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(field_inv(leading()));
  }

  Poly derivative() const {
    Poly r(zero_);
    if (degree() < 1) return r;
    r.c_.reserve(c_.size() - 1);
    F k = field_zero_like(zero_);
    for (size_t i = 1; i < c_.size(); ++i) {
      k = k + field_one_like(zero_);
      r.c_.push_back(c_[i] * k);
    }
    r.trim();
    return r;
  }

  F eval(const F& x) const {
    F acc = field_zero_like(zero_);
    for (long i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!field_is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && field_is_zero(c_.back())) c_.pop_back();
  }

  F zero_;
  std::vector<F> c_;
};

// Monic gcd by the Euclidean algorithm.
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = b;
    b = r;
  }
  return a.monic();
}

// Largest squarefree divisor with the same roots: p / gcd(p, p').
template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
  if (p.degree() < 1) return p.monic();
  Poly<F> g = poly_gcd(p, p.derivative());
  if (g.degree() < 1) return p.monic();
  return exact_div(p, g).monic();
}

}  // namespace mc4p
