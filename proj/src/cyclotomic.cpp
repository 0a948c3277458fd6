#include "mc4p/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mc4p {

namespace {

// Keeps per-order data: the cyclotomic polynomial Phi_N (monic, integral)
// and reduction rows x^j mod Phi_N for 0 <= j < 2N.  2N covers every power
// produced by multiplication, order lifting and Galois twisting.
struct CycContext {
  long N = 1;
  long phi = 1;
  std::vector<mpz_class> Phi;                 // degree phi, monic
  std::vector<std::vector<mpz_class>> rows;   // rows[j][i], size 2N x phi
};

constexpr long kMaxOrder = 4000;

// x^n - 1 divided exactly by all lower-level cyclotomic polynomials.
std::vector<mpz_class> cyclotomic_poly(long n,
                                       std::map<long, std::vector<mpz_class>>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;

  std::vector<mpz_class> p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (long d : divisors_of(n)) {
    if (d == n) continue;
    const std::vector<mpz_class> q = cyclotomic_poly(d, memo);
    // exact division p /= q (both with integer coefficients, q monic)
    std::vector<mpz_class> out(p.size() - q.size() + 1);
    for (long i = (long)out.size() - 1; i >= 0; --i) {
      out[i] = p[i + q.size() - 1];
      for (size_t j = 0; j + 1 < q.size(); ++j) p[i + j] -= out[i] * q[j];
    }
    p = std::move(out);
  }
  memo.emplace(n, p);
  return p;
}

const CycContext& context(long N) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<CycContext>> cache;
  static std::map<long, std::vector<mpz_class>> phi_memo;

  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return *it->second;

  if (N < 1) throw ParameterError("cyclotomic order must be >= 1");
  if (N > kMaxOrder)
    throw ParameterError("cyclotomic order " + std::to_string(N) +
                         " beyond supported bound " + std::to_string(kMaxOrder));

  auto ctx = std::make_unique<CycContext>();
  ctx->N = N;
  ctx->phi = euler_phi(N);
  ctx->Phi = cyclotomic_poly(N, phi_memo);

  const long phi = ctx->phi;
  ctx->rows.reserve(2 * N);
  for (long j = 0; j < 2 * N; ++j) {
    std::vector<mpz_class> row(phi);
    if (j < phi) {
      row[j] = 1;
    } else {
      const std::vector<mpz_class>& prev = ctx->rows[j - 1];
      // multiply by x, then cancel the x^phi term against monic Phi
      const mpz_class& lead = prev[phi - 1];
      for (long i = phi - 1; i >= 1; --i) row[i] = prev[i - 1];
      row[0] = 0;
      if (lead != 0)
        for (long i = 0; i < phi; ++i) row[i] -= lead * ctx->Phi[i];
    }
    ctx->rows.push_back(std::move(row));
  }

  const CycContext& ref = *ctx;
  cache.emplace(N, std::move(ctx));
  return ref;
}

long lcm_checked(long a, long b) {
  long g = std::gcd(a, b);
  __int128 l = (__int128)(a / g) * b;
  if (l > kMaxOrder)
    throw ParameterError("combined cyclotomic order exceeds supported bound");
  return (long)l;
}

// ---- dense polynomial helpers over Q, used for inversion ----

using QPoly = std::vector<Rat>;

long qp_deg(const QPoly& p) {
  for (long i = (long)p.size() - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

void qp_trim(QPoly& p) { p.resize(qp_deg(p) + 1); }

// a -= c * x^k * b
void qp_axpy(QPoly& a, const Rat& c, long k, const QPoly& b) {
  if (a.size() < b.size() + k) a.resize(b.size() + k);
  for (size_t i = 0; i < b.size(); ++i) a[i + k] -= c * b[i];
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long> divisors_of(long n) {
  std::vector<long> d;
  for (long i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

CycNum::CycNum() : order_(1), c_(1) {}

CycNum::CycNum(const Rat& r) : order_(1), c_{r} {}

CycNum::CycNum(long order, std::vector<Rat> coeffs) : order_(order), c_(std::move(coeffs)) {
  const CycContext& ctx = context(order);
  if ((long)c_.size() != ctx.phi)
    throw DimensionError("CycNum coefficient count does not match phi(order)");
}

CycNum CycNum::zeta(long order) { return zeta_pow(order, 1); }

CycNum CycNum::zeta_pow(long order, long k) {
  const CycContext& ctx = context(order);
  k %= order;
  if (k < 0) k += order;
  std::vector<Rat> c(ctx.phi);
  const std::vector<mpz_class>& row = ctx.rows[k];
  for (long i = 0; i < ctx.phi; ++i) c[i] = Rat(row[i]);
  return CycNum(order, std::move(c));
}

bool CycNum::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat CycNum::to_rational() const {
  if (!is_rational()) throw ParameterError("CycNum is not rational");
  return c_[0];
}

CycNum CycNum::lifted_to(long m) const {
  if (m == order_) return *this;
  if (m % order_ != 0)
    throw ParameterError("cannot lift CycNum: current order does not divide target");
  const CycContext& ctx = context(m);
  const long stride = m / order_;
  std::vector<Rat> out(ctx.phi);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const std::vector<mpz_class>& row = ctx.rows[(long)i * stride];
    for (long j = 0; j < ctx.phi; ++j)
      if (row[j] != 0) out[j] += c_[i] * Rat(row[j]);
  }
  return CycNum(m, std::move(out));
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (Rat& x : r.c_) x = -x;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (order_ != o.order_) {
    long L = lcm_checked(order_, o.order_);
    *this = lifted_to(L);
    return *this += o.lifted_to(L);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  if (order_ != o.order_) {
    long L = lcm_checked(order_, o.order_);
    *this = lifted_to(L);
    return *this -= o.lifted_to(L);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  if (order_ != o.order_) {
    long L = lcm_checked(order_, o.order_);
    *this = lifted_to(L);
    return *this *= o.lifted_to(L);
  }
  const CycContext& ctx = context(order_);
  const long phi = ctx.phi;
  std::vector<Rat> acc(2 * phi - 1);
  for (long i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j < phi; ++j)
      if (o.c_[j] != 0) acc[i + j] += c_[i] * o.c_[j];
  }
  std::vector<Rat> out(phi);
  for (long i = 0; i < phi; ++i) out[i] = std::move(acc[i]);
  for (long j = phi; j < 2 * phi - 1; ++j) {
    if (acc[j] == 0) continue;
    const std::vector<mpz_class>& row = ctx.rows[j];
    for (long i = 0; i < phi; ++i)
      if (row[i] != 0) out[i] += acc[j] * Rat(row[i]);
  }
  c_ = std::move(out);
  return *this;
}

CycNum CycNum::inv() const {
  if (is_zero()) throw SingularError("division by zero CycNum");
  if (is_rational()) {
    Rat r = c_[0];
    CycNum out = *this;
    out.c_[0] = 1 / r;
    return out;
  }
  const CycContext& ctx = context(order_);
  // extended Euclid between the representative and Phi_N (irreducible/Q,
  // so the gcd is a nonzero constant)
  QPoly r0(ctx.Phi.size());
  for (size_t i = 0; i < ctx.Phi.size(); ++i) r0[i] = Rat(ctx.Phi[i]);
  QPoly r1(c_.begin(), c_.end());
  qp_trim(r1);
  QPoly s0{Rat(0)}, s1{Rat(1)};  // coefficients of the representative
  while (qp_deg(r1) > 0) {
    long d0 = qp_deg(r0), d1 = qp_deg(r1);
    while (d0 >= d1) {
      Rat q = r0[d0] / r1[d1];
      qp_axpy(r0, q, d0 - d1, r1);
      QPoly shift(d0 - d1 + 1);
      shift[d0 - d1] = q;
      QPoly t = qp_mul(shift, s1);
      if (s0.size() < t.size()) s0.resize(t.size());
      for (size_t i = 0; i < t.size(); ++i) s0[i] -= t[i];
      d0 = qp_deg(r0);
      if (d0 < 0) break;
    }
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
  if (qp_deg(r1) != 0)
    throw SingularError("CycNum inversion failed: representative shares a factor with Phi_N");
  Rat unit = r1[qp_deg(r1)];
  // reduce s1/unit modulo Phi via the row table
  if ((long)s1.size() > 2 * ctx.N)
    throw SingularError("CycNum inversion: cofactor degree out of range");
  std::vector<Rat> out(ctx.phi);
  for (size_t j = 0; j < s1.size(); ++j) {
    if (s1[j] == 0) continue;
    Rat cj = s1[j] / unit;
    const std::vector<mpz_class>& row = ctx.rows[j];
    for (long i = 0; i < ctx.phi; ++i)
      if (row[i] != 0) out[i] += cj * Rat(row[i]);
  }
  return CycNum(order_, std::move(out));
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycNum base = *this;
  CycNum result{Rat(1)};
  result = result.lifted_to(order_);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::optional<long> CycNum::root_of_unity_order() const {
  if (is_zero()) return std::nullopt;
  long M = std::lcm(2L, order_);
  CycNum one{Rat(1)};
  if (!pow(M).eq(one)) return std::nullopt;
  for (long d : divisors_of(M))
    if (pow(d).eq(one)) return d;
  return std::nullopt;  // unreachable
}

bool CycNum::eq(const CycNum& o) const {
  if (order_ == o.order_) return c_ == o.c_;
  long L = lcm_checked(order_, o.order_);
  return lifted_to(L).c_ == o.lifted_to(L).c_;
}

std::string CycNum::key() const {
  std::ostringstream os;
  os << order_ << '|';
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  return os.str();
}

size_t CycNum::complexity() const {
  size_t s = 1;
  for (const Rat& x : c_)
    if (x != 0) s += rat_complexity(x);
  return s;
}

long CycNum::minimal_order() const {
  for (long d : divisors_of(order_)) {
    bool fixed = true;
    for (long k = 1 + d; k < order_ && fixed; k += d) {
      if (std::gcd(k, order_) != 1) continue;
      if (!galois_apply(GaloisElement(order_, k), *this).eq(*this)) fixed = false;
    }
    if (fixed) return d;
  }
  return order_;
}

CycNum CycNum::descend_to_order(long d) const {
  if (d == order_) return *this;
  if (order_ % d != 0)
    throw ParameterError("descend_to_order: target does not divide current order");
  const CycContext& big = context(order_);
  const long phid = euler_phi(d);
  const long stride = order_ / d;
  // Solve E * y = c where column i of E is zeta_d^i written at the big order.
  long rows = big.phi, cols = phid;
  std::vector<std::vector<Rat>> M(rows, std::vector<Rat>(cols + 1));
  for (long i = 0; i < cols; ++i) {
    const std::vector<mpz_class>& row = big.rows[i * stride];
    for (long r = 0; r < rows; ++r) M[r][i] = Rat(row[r]);
  }
  for (long r = 0; r < rows; ++r) M[r][cols] = c_[r];

  std::vector<long> pivot_of_col(cols, -1);
  long rank = 0;
  for (long col = 0; col < cols && rank < rows; ++col) {
    long piv = -1;
    for (long r = rank; r < rows; ++r)
      if (M[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(M[rank], M[piv]);
    Rat lead = M[rank][col];
    for (long j = col; j <= cols; ++j) M[rank][j] /= lead;
    for (long r = 0; r < rows; ++r) {
      if (r == rank || M[r][col] == 0) continue;
      Rat f = M[r][col];
      for (long j = col; j <= cols; ++j) M[r][j] -= f * M[rank][j];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  for (long r = rank; r < rows; ++r)
    if (M[r][cols] != 0)
      throw ParameterError("descend_to_order: value does not lie in the target subfield");
  std::vector<Rat> y(cols);
  for (long col = 0; col < cols; ++col)
    if (pivot_of_col[col] >= 0) y[col] = M[pivot_of_col[col]][cols];
  return CycNum(d, std::move(y));
}

GaloisElement::GaloisElement(long order_, long exponent_) : order(order_) {
  exponent = exponent_ % order;
  if (exponent < 0) exponent += order;
  if (order < 1 || std::gcd(exponent, order) != 1)
    throw ParameterError("Galois exponent must be a unit modulo the order");
}

GaloisElement GaloisElement::compose(const GaloisElement& o) const {
  if (order != o.order)
    throw ParameterError("Galois composition requires equal orders; unify first");
  return GaloisElement(order, (exponent * o.exponent) % order);
}

CycNum galois_apply(const GaloisElement& sigma, const CycNum& a) {
  if (sigma.order != a.order())
    throw ParameterError("galois_apply: automorphism order differs from element order; unify first");
  const CycContext& ctx = context(a.order());
  std::vector<Rat> out(ctx.phi);
  for (long i = 0; i < (long)a.coeffs().size(); ++i) {
    const Rat& ci = a.coeffs()[i];
    if (ci == 0) continue;
    const std::vector<mpz_class>& row = ctx.rows[(i * sigma.exponent) % ctx.N];
    for (long j = 0; j < ctx.phi; ++j)
      if (row[j] != 0) out[j] += ci * Rat(row[j]);
  }
  return CycNum(a.order(), std::move(out));
}

CycNum two_cos(long k, long n) {
  if (n < 1) throw ParameterError("two_cos: denominator must be positive");
  return CycNum::zeta_pow(2 * n, k) + CycNum::zeta_pow(2 * n, -k);
}

CycNum two_sin(long k, long n) {
  if (n < 1) throw ParameterError("two_sin: denominator must be positive");
  long L = std::lcm(4L, 2 * n);
  CycNum i4 = CycNum::zeta_pow(L, L / 4);
  CycNum diff = CycNum::zeta_pow(2 * n, k).lifted_to(L) -
                CycNum::zeta_pow(2 * n, -k).lifted_to(L);
  return -(i4 * diff);
}

long subfield_degree(const std::vector<CycNum>& elements) {
  long L = 1;
  for (const CycNum& e : elements) L = lcm_checked(L, e.order());
  std::vector<CycNum> lifted;
  lifted.reserve(elements.size());
  for (const CycNum& e : elements) lifted.push_back(e.lifted_to(L));
  long stab = 0;
  for (long k = 0; k < L; ++k) {
    if (std::gcd(k, L) != 1) continue;
    GaloisElement sigma(L, k);
    bool fixes = true;
    for (const CycNum& e : lifted)
      if (!galois_apply(sigma, e).eq(e)) { fixes = false; break; }
    if (fixes) ++stab;
  }
  return euler_phi(L) / stab;
}

long common_conductor(const std::vector<CycNum>& elements) {
  long L = 1;
  for (const CycNum& e : elements) L = lcm_checked(L, e.order());
  std::vector<CycNum> lifted;
  lifted.reserve(elements.size());
  for (const CycNum& e : elements) lifted.push_back(e.lifted_to(L));
  for (long d : divisors_of(L)) {
    bool all_fixed = true;
    for (long k = 1 + d; k < L && all_fixed; k += d) {
      if (std::gcd(k, L) != 1) continue;
      GaloisElement sigma(L, k);
      for (const CycNum& e : lifted)
        if (!galois_apply(sigma, e).eq(e)) { all_fixed = false; break; }
    }
    if (all_fixed) return d;
  }
  return L;
}

}  // namespace mc4p
