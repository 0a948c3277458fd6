#pragma once
// Elements of F_p and F_p^2 for odd primes p, with the modulus carried per
// value (same pattern as the cyclotomic type: constants start unattached and
// adopt a modulus on first contact).  The quadratic extension is represented
// as a + b*t with t^2 = nr, nr the least quadratic non-residue mod p, and
// each element remembers which of the two fields it is meant to live in so
// square tests and square roots are unambiguous.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mc4p/errors.hpp"
#include "mc4p/field_traits.hpp"

namespace mc4p {

inline bool is_prime_long(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw ParameterError("factorize expects a positive integer");
  std::vector<std::pair<long, int>> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline long mulmod_long(long a, long b, long p) {
  return static_cast<long>(static_cast<__int128>(a) * b % p);
}

inline long powmod_long(long a, long e, long p) {
  long r = 1 % p;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = mulmod_long(r, a, p);
    a = mulmod_long(a, a, p);
    e >>= 1;
  }
  return r;
}

// -1, 0, or 1
inline int legendre_symbol(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  return powmod_long(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline long least_nonresidue(long p) {
  for (long z = 2; z < p; ++z)
    if (legendre_symbol(z, p) == -1) return z;
  throw ParameterError("no quadratic non-residue found; modulus must be an odd prime");
}

class Fq {
 public:
  static constexpr long kMaxModulus = (1L << 31) - 1;

  Fq() : p_(0), k_(1), a_(0), b_(0) {}
  Fq(long v) : p_(0), k_(1), a_(v), b_(0) {}  // unattached integer constant
  Fq(long v, long p, int k = 1) : p_(validated(p)), k_(checked_ext(k)), a_(mod(v, p)), b_(0) {}

  static Fq in_ext(long a, long b, long p) {
    Fq r(a, p, 2);
    r.b_ = mod(b, p);
    return r;
  }

  long modulus() const { return p_; }
  bool attached() const { return p_ != 0; }
  int ext_degree() const { return k_; }
  long a() const { return a_; }
  long b() const { return b_; }
  bool in_prime_subfield() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  // Same value regarded inside F_p^2.
  Fq lifted_to_ext() const {
    require_attached();
    Fq r = *this;
    r.k_ = 2;
    return r;
  }

  long field_size() const {
    require_attached();
    return k_ == 1 ? p_ : p_ * p_;
  }

  Fq operator-() const {
    Fq r = *this;
    if (r.p_ == 0) {
      r.a_ = -r.a_;
      return r;
    }
    r.a_ = r.a_ ? r.p_ - r.a_ : 0;
    r.b_ = r.b_ ? r.p_ - r.b_ : 0;
    return r;
  }

  friend Fq operator+(Fq x, Fq y) {
    align(x, y);
    if (x.p_ == 0) return Fq(x.a_ + y.a_);
    Fq r = x;
    r.a_ = (x.a_ + y.a_) % x.p_;
    r.b_ = (x.b_ + y.b_) % x.p_;
    return r;
  }
  friend Fq operator-(Fq x, const Fq& y) { return x + (-y); }
  friend Fq operator*(Fq x, Fq y) {
    align(x, y);
    if (x.p_ == 0) return Fq(x.a_ * y.a_);
    Fq r = x;
    if (x.b_ == 0 && y.b_ == 0) {
      r.a_ = mulmod_long(x.a_, y.a_, x.p_);
      r.b_ = 0;
      return r;
    }
    const long nr = least_nonresidue(x.p_);
    r.a_ = (mulmod_long(x.a_, y.a_, x.p_) + mulmod_long(nr, mulmod_long(x.b_, y.b_, x.p_), x.p_)) % x.p_;
    r.b_ = (mulmod_long(x.a_, y.b_, x.p_) + mulmod_long(x.b_, y.a_, x.p_)) % x.p_;
    return r;
  }

  Fq inv() const {
    if (is_zero()) throw SingularError("inverse of zero field element");
    if (p_ == 0) {
      if (a_ == 1 || a_ == -1) return *this;
      throw ParameterError("inverse of an unattached constant");
    }
    if (b_ == 0) {
      Fq r = *this;
      r.a_ = powmod_long(a_, p_ - 2, p_);
      return r;
    }
    // (a + b t)^-1 = (a - b t) / (a^2 - nr b^2); the norm sits in F_p
    const long nr = least_nonresidue(p_);
    long norm = (mulmod_long(a_, a_, p_) - mulmod_long(nr, mulmod_long(b_, b_, p_), p_)) % p_;
    if (norm < 0) norm += p_;
    const long ninv = powmod_long(norm, p_ - 2, p_);
    Fq r = *this;
    r.a_ = mulmod_long(a_, ninv, p_);
    r.b_ = mulmod_long(b_ ? p_ - b_ : 0, ninv, p_);
    return r;
  }

  Fq pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Fq acc = one_like();
    Fq base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  Fq zero_like() const {
    Fq r = *this;
    r.a_ = r.b_ = 0;
    return r;
  }
  Fq one_like() const {
    Fq r = zero_like();
    r.a_ = r.p_ ? 1 % r.p_ : 1;
    return r;
  }

  friend bool operator==(Fq x, Fq y) {
    align(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Fq& x, const Fq& y) { return !(x == y); }

  std::string str() const {
    if (b_ == 0) return std::to_string(a_);
    return std::to_string(a_) + "+" + std::to_string(b_) + "*t";
  }

 private:
  static long validated(long p) {
    if (p < 3 || p % 2 == 0 || p > kMaxModulus || !is_prime_long(p))
      throw ParameterError("modulus must be an odd prime below 2^31");
    return p;
  }
  static int checked_ext(int k) {
    if (k != 1 && k != 2) throw ParameterError("only degree 1 and 2 fields are supported");
    return k;
  }
  static long mod(long v, long p) {
    v %= p;
    return v < 0 ? v + p : v;
  }
  void require_attached() const {
    if (p_ == 0) throw ParameterError("field element has no modulus attached");
  }
  static void align(Fq& x, Fq& y) {
    if (x.p_ == 0 && y.p_ != 0) {
      x.p_ = y.p_;
      x.a_ = mod(x.a_, x.p_);
    } else if (y.p_ == 0 && x.p_ != 0) {
      y.p_ = x.p_;
      y.a_ = mod(y.a_, y.p_);
    } else if (x.p_ != y.p_) {
      throw ParameterError("field elements with different moduli");
    }
    const int k = std::max(x.k_, y.k_);
    x.k_ = y.k_ = k;
  }

  long p_;  // 0 while unattached
  int k_;
  long a_, b_;
};

// True for zero and for elements with a square root in the element's own
// field (F_p or F_p^2 as carried by ext_degree).
inline bool is_square(const Fq& x) {
  if (x.is_zero()) return true;
  return x.pow((x.field_size() - 1) / 2) == x.one_like();
}

// Deterministic Tonelli-Shanks in the element's own field.
inline std::optional<Fq> field_sqrt(const Fq& x) {
  if (x.is_zero()) return x;
  if (!is_square(x)) return std::nullopt;
  const long q = x.field_size();
  long m = q - 1;
  int s = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++s;
  }
  // non-residue of the ambient field
  Fq z = x.zero_like();
  if (x.ext_degree() == 1) {
    z = z + Fq(least_nonresidue(x.modulus()));
  } else {
    for (long c = 0;; ++c) {
      z = Fq::in_ext(c, 1, x.modulus());
      if (!is_square(z)) break;
    }
  }
  Fq cc = z.pow(m);
  Fq t = x.pow(m);
  Fq r = x.pow((m + 1) / 2);
  int mm = s;
  const Fq one = x.one_like();
  while (t != one) {
    Fq probe = t;
    int i = 0;
    while (probe != one) {
      probe = probe * probe;
      ++i;
    }
    Fq b = cc;
    for (int j = 0; j < mm - i - 1; ++j) b = b * b;
    mm = i;
    cc = b * b;
    t = t * cc;
    r = r * b;
  }
  return r;
}

inline Fq field_zero_like(const Fq& x) { return x.zero_like(); }
inline Fq field_one_like(const Fq& x) { return x.one_like(); }
inline bool field_is_zero(const Fq& x) { return x.is_zero(); }
inline Fq field_inv(const Fq& x) { return x.inv(); }
inline size_t field_complexity(const Fq&) { return 1; }

}  // namespace mc4p
