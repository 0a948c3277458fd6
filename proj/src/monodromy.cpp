#include "mc4p/monodromy.hpp"

#include <deque>
#include <numeric>
#include <unordered_set>

#include "mc4p/errors.hpp"

namespace mc4p {

namespace {

CycNum cyc(long v) { return CycNum(Rat(v)); }

// Lifts every entry to the given cyclotomic order so that coefficient
// vectors, and hence Matrix::key(), are canonical across the whole group
// closure.  Products of equal-order entries stay at that order.
CMat lift_entries(const CMat& m, long order) {
  CMat out(m.rows(), m.cols(), cyc(0).lifted_to(order));
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c).lifted_to(order);
  return out;
}

long common_entry_order(const std::vector<CMat>& mats) {
  long l = 1;
  for (const CMat& m : mats)
    for (long r = 0; r < m.rows(); ++r)
      for (long c = 0; c < m.cols(); ++c) l = std::lcm(l, m.at(r, c).order());
  return l;
}

}  // namespace

MonodromyTuple::MonodromyTuple(const CMat& m0, const CMat& m1, const CMat& mlambda)
    : m0_(m0), m1_(m1), mlambda_(mlambda), minf_(1, 1, cyc(0)) {
  const long n = m0.rows();
  if (m0.cols() != n || m1.rows() != n || m1.cols() != n || mlambda.rows() != n ||
      mlambda.cols() != n)
    throw DimensionError("monodromy tuple needs three square matrices of equal size");
  // det(M0*M1*Mlambda) = det(M0)det(M1)det(Mlambda), so inverting the product
  // also certifies that each factor is invertible.
  minf_ = mat_inv(m0_ * m1_ * mlambda_);
}

MonodromyTuple make_tuple(const CMat& m0, const CMat& m1, const CMat& mlambda) {
  return MonodromyTuple(m0, m1, mlambda);
}

bool star_check(const MonodromyTuple& t) {
  if (t.rank() != 2) throw DimensionError("star_check expects a rank-2 tuple");
  auto is_single_block = [](const CMat& m, long eigenvalue) {
    try {
      JordanType jt = jordan_type(m, {cyc(eigenvalue)});
      return jt.size() == 1 && jt[0].size == 2;
    } catch (const EigenvalueError&) {
      return false;  // some eigenvalue is not the requested one
    }
  };
  return is_single_block(t.M0(), 1) && is_single_block(t.M1(), 1) &&
         is_single_block(t.Mlambda(), 1) && is_single_block(t.Minf(), -1);
}

namespace {

std::vector<CycNum> flatten(const CMat& m) {
  std::vector<CycNum> v;
  v.reserve(static_cast<std::size_t>(m.rows() * m.cols()));
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

}  // namespace

bool is_irreducible(const MonodromyTuple& t) {
  const long n = t.rank();
  const long full = n * n;
  std::vector<CMat> gens = {t.M0(), t.M1(), t.Mlambda()};

  RowSpan<CycNum> span;
  std::deque<CMat> work;
  CMat id = CMat::identity(n, cyc(0));
  span.add(flatten(id));
  work.push_back(id);
  while (!work.empty() && span.dim() < full) {
    CMat w = work.front();
    work.pop_front();
    for (const CMat& g : gens) {
      CMat p = g * w;
      if (span.add(flatten(p))) {
        if (span.dim() == full) return true;
        work.push_back(p);
      }
    }
  }
  return span.dim() == full;
}

TraceCoordinates trace_coordinates(const MonodromyTuple& t) {
  if (t.rank() != 2) throw DimensionError("trace coordinates expect a rank-2 tuple");
  TraceCoordinates c{t.M0().trace(),      t.M1().trace(),           t.Mlambda().trace(),
                     t.Minf().trace(),    (t.M0() * t.M1()).trace(),
                     (t.M1() * t.Mlambda()).trace(),                 (t.M0() * t.Mlambda()).trace()};
  return c;
}

bool TraceCoordinates::operator==(const TraceCoordinates& o) const {
  return a0.eq(o.a0) && a1.eq(o.a1) && alambda.eq(o.alambda) && ainf.eq(o.ainf) &&
         x.eq(o.x) && y.eq(o.y) && z.eq(o.z);
}

bool is_conjugate(const MonodromyTuple& a, const MonodromyTuple& b) {
  if (a.rank() != 2 || b.rank() != 2)
    throw DimensionError("conjugacy test expects rank-2 tuples");
  if (!is_irreducible(a) || !is_irreducible(b))
    throw ParameterError("conjugacy test requires irreducible tuples");
  return trace_coordinates(a) == trace_coordinates(b);
}

std::optional<long> finite_image(const MonodromyTuple& t, long bound) {
  if (bound < 1) throw ParameterError("finite_image bound must be positive");
  std::vector<CMat> gens = {t.M0(), t.M1(), t.Mlambda()};
  const long order = common_entry_order(gens);
  for (CMat& g : gens) g = lift_entries(g, order);

  CMat id = lift_entries(CMat::identity(t.rank(), cyc(0)), order);
  std::unordered_set<std::string> seen;
  std::deque<CMat> frontier;
  seen.insert(id.key());
  frontier.push_back(id);
  while (!frontier.empty()) {
    CMat w = frontier.front();
    frontier.pop_front();
    for (const CMat& g : gens) {
      CMat p = w * g;
      if (seen.insert(p.key()).second) {
        if (static_cast<long>(seen.size()) > bound) return std::nullopt;
        frontier.push_back(p);
      }
    }
  }
  return static_cast<long>(seen.size());
}

}  // namespace mc4p
