#include "mc4p/matrix.hpp"

#include <algorithm>

namespace mc4p {

JordanType jordan_type(const Matrix<CycNum>& a, const std::vector<CycNum>& candidates) {
  if (!a.is_square()) throw DimensionError("jordan_type of non-square matrix");
  const long n = a.rows();
  const CycNum zero = field_zero_like(a.at(0, 0));
  const CycNum one = field_one_like(a.at(0, 0));

  // Split the characteristic polynomial over the candidate list.
  Poly<CycNum> p = char_poly(a);
  std::vector<std::pair<CycNum, long>> mult;  // distinct eigenvalue, algebraic multiplicity
  for (const CycNum& c : candidates) {
    bool seen = false;
    for (auto& [e, m] : mult)
      if (e.eq(c)) { seen = true; break; }
    if (seen) continue;
    Poly<CycNum> lin(zero, {-c, one});  // t - c
    long m = 0;
    while (p.degree() >= 1) {
      auto [q, r] = divmod(p, lin);
      if (!r.is_zero()) break;
      p = q;
      ++m;
    }
    if (m > 0) mult.push_back({c, m});
  }
  if (p.degree() > 0)
    throw EigenvalueError("char_poly does not split over the candidate eigenvalues");

  JordanType blocks;
  for (auto& [c, m] : mult) {
    Matrix<CycNum> b = a - Matrix<CycNum>::identity(n, zero).scaled(c);
    std::vector<long> r{n};  // r[k] = rank(b^k)
    Matrix<CycNum> power = b;
    while (true) {
      long rk = rank(power);
      r.push_back(rk);
      if (rk == r[r.size() - 2]) break;  // stabilized
      power = power * b;
    }
    auto ge = [&](long k) -> long {  // blocks of size >= k
      if (k >= (long)r.size()) return 0;
      return r[k - 1] - r[k];
    };
    long total = 0;
    for (long k = 1; k < (long)r.size(); ++k) {
      long exact = ge(k) - ge(k + 1);
      for (long i = 0; i < exact; ++i) blocks.push_back({c, k});
      total += exact * k;
    }
    if (total != m)
      throw EigenvalueError("rank sequence inconsistent with algebraic multiplicity");
  }

  std::sort(blocks.begin(), blocks.end(), [](const JordanBlock& x, const JordanBlock& y) {
    std::string kx = x.eigenvalue.key(), ky = y.eigenvalue.key();
    return kx != ky ? kx < ky : x.size < y.size;
  });
  return blocks;
}

}  // namespace mc4p
