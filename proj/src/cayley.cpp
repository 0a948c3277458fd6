#include "mc4p/cayley.hpp"

#include <numeric>

namespace mc4p {

namespace {

struct Frac {
  long num, den;
};

long to_long_checked(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) throw ParameterError(std::string(what) + " is too large");
  return z.get_si();
}

Frac frac_of(const Rat& r, const char* what) {
  return {to_long_checked(r.get_num(), what), to_long_checked(r.get_den(), what)};
}

// x1 = 0 exactly when alpha + beta is an odd integer.
bool half_sum_degenerate(const Rat& sum) {
  return rat_is_integer(sum) && sum.get_num() % 2 != 0;
}

}  // namespace

MonodromyTuple cayley_solution(const CayleyParams& p) {
  const Frac fa = frac_of(p.alpha, "alpha");
  const Frac fb = frac_of(p.beta, "beta");
  if (fa.den > 1000 || fb.den > 1000)
    throw ParameterError("cayley denominator exceeds the supported field order");
  const Rat sum = p.alpha + p.beta;
  if (half_sum_degenerate(sum))
    throw ParameterError("cayley parameters with alpha + beta an odd integer");
  const Frac fs = frac_of(sum / 2, "alpha+beta");

  const CycNum x1 = two_cos(fs.num, fs.den);
  const CycNum x2 = two_sin(fa.num, 2 * fa.den);
  const CycNum x3 = two_sin(fb.num, 2 * fb.den);
  const CycNum ix1 = x1.inv();
  const CycNum one(1), zero;

  CMat m0 = CMat::from_rows({{one + x2 * x3 * ix1, -(x2 * x2 * ix1)},
                             {x3 * x3 * ix1, one - x2 * x3 * ix1}});
  CMat m1 = CMat::from_rows({{one, -x1}, {zero, one}});
  CMat ml = CMat::from_rows({{one, zero}, {x1, one}});

  // Uniform ambient field: every entry lives in the order-4*lcm field, and
  // lifting them all there keeps serialization keys comparable.
  const long ambient = 4 * std::lcm(fa.den, fb.den);
  auto lifted = [ambient](const CMat& m) {
    std::vector<std::vector<CycNum>> rows(m.rows());
    for (long i = 0; i < m.rows(); ++i)
      for (long j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j).lifted_to(ambient));
    return CMat::from_rows(rows);
  };
  return make_tuple(lifted(m0), lifted(m1), lifted(ml));
}

const std::array<std::array<int, 3>, 20>& cubic_monomial_basis() {
  static const std::array<std::array<int, 3>, 20> basis = {{
      {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2}, {0, 3, 0},
      {0, 2, 1}, {0, 1, 2}, {0, 0, 3}, {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0},
      {0, 1, 1}, {0, 0, 2}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}}};
  return basis;
}

namespace {
constexpr std::array<long, 20> kCubicCoeffs = {0, 0, 0, 0, 1, 0, 0, 0, 0, 0,
                                               1, 0, 0, 1, 0, 1, 0, 0, 0, -4};
}

std::string render_cubic(const std::array<Rat, 20>& coeffs) {
  static const char* const names[3] = {"x", "y", "z"};
  const auto& basis = cubic_monomial_basis();
  std::string out;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const bool neg = coeffs[i] < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rat mag = abs(coeffs[i]);
    std::string mono;
    for (int v = 0; v < 3; ++v) {
      const int e = basis[i][v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      out += rat_to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += rat_to_string(mag) + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

std::string cayley_cubic_text() {
  std::array<Rat, 20> coeffs;
  for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = kCubicCoeffs[i];
  return render_cubic(coeffs);
}

CycNum cubic_residual(const TraceCoordinates& tc) {
  const CycNum two(2);
  if (tc.a0 != two || tc.a1 != two || tc.alambda != two || tc.ainf != CycNum(-2))
    throw ParameterError("cubic relation requires boundary traces (2, 2, 2, -2)");
  const auto& basis = cubic_monomial_basis();
  CycNum acc;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (kCubicCoeffs[i] == 0) continue;
    CycNum term(kCubicCoeffs[i]);
    term *= tc.x.pow(basis[i][0]);
    term *= tc.y.pow(basis[i][1]);
    term *= tc.z.pow(basis[i][2]);
    acc += term;
  }
  return acc;
}

TraceField trace_field(const MonodromyTuple& t) {
  const TraceCoordinates tc = trace_coordinates(t);
  const CycNum triple = (t.M0() * t.M1() * t.Mlambda()).trace();
  const std::vector<CycNum> gens = {tc.a0, tc.a1, tc.alambda, tc.ainf,
                                    tc.x,  tc.y,  tc.z,       triple};
  return {subfield_degree(gens), common_conductor(gens)};
}

MonodromyTuple tuple_from_cubic_point(const CycNum& x, const CycNum& y, const CycNum& z) {
  const CycNum one(1), two(2), zero;
  if (!cubic_residual({two, two, two, CycNum(-2), x, y, z}).is_zero())
    throw ParameterError("point does not satisfy the cubic relation");
  const CycNum c = x - two;
  if (c.is_zero())
    throw ParameterError("cubic point with x = 2; permute the coordinates first");
  const CycNum ci = c.inv();
  // Third generator I + N with N nilpotent; the cubic relation is exactly the
  // condition making the (1,1) entry of N consistent with N^2 = 0.
  const CycNum q = z - two;
  const CycNum pp = (y - two) * ci;
  const CycNum n = (two - x - y - z) * ci;
  CMat m0 = CMat::from_rows({{one, one}, {zero, one}});
  CMat m1 = CMat::from_rows({{one, zero}, {c, one}});
  CMat ml = CMat::from_rows({{one + n, pp}, {q, one - n}});
  return make_tuple(m0, m1, ml);
}

std::vector<CayleyParams> cayley_params_with_lcm(long d) {
  if (d < 1) throw ParameterError("denominator must be positive");
  std::vector<CayleyParams> out;
  for (long k1 = 1; k1 <= 2 * d; ++k1) {
    const long g1 = std::gcd(k1, d);
    for (long k2 = 1; k2 <= 2 * d; ++k2)
      if (std::gcd(g1, std::gcd(k2, d)) == 1) out.push_back({rat(k1, d), rat(k2, d)});
  }
  return out;
}

std::optional<CayleyParams> match_cayley(const MonodromyTuple& t, long denominator_bound) {
  if (t.rank() != 2) throw DimensionError("match_cayley expects a rank-2 tuple");
  if (!star_check(t))
    throw ParameterError("match_cayley requires the unipotent boundary conditions");
  if (!is_irreducible(t)) throw ParameterError("match_cayley requires an irreducible tuple");
  const TraceCoordinates target = trace_coordinates(t);
  for (long d = 1; d <= denominator_bound; ++d) {
    for (const CayleyParams& cand : cayley_params_with_lcm(d)) {
      const Rat sum = cand.alpha + cand.beta;
      if (half_sum_degenerate(sum)) continue;
      const Frac fa = frac_of(cand.alpha, "alpha");
      const Frac fb = frac_of(cand.beta, "beta");
      const Frac fs = frac_of(sum, "alpha+beta");
      // Closed-form coordinates of the candidate; cheap pre-filter before
      // building any matrices.
      if (two_cos(fb.num, fb.den) != target.x) continue;
      if (-two_cos(fs.num, fs.den) != target.y) continue;
      if (two_cos(fa.num, fa.den) != target.z) continue;
      const MonodromyTuple sol = cayley_solution(cand);
      if (is_conjugate(t, sol)) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace mc4p
