#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mc4p/monodromy.hpp"

using namespace mc4p;

namespace {

CycNum qn(long p, long q = 1) { return CycNum(rat(p, q)); }

CMat mat2(long a, long b, long c, long d) {
  return CMat::from_rows({{qn(a), qn(b)}, {qn(c), qn(d)}});
}

// Tuple for the parameter point (1/3, 1/3): three unipotent generators whose
// product inverse is a single block at eigenvalue -1.
MonodromyTuple third_third() {
  return make_tuple(mat2(2, -1, 1, 0), mat2(1, -1, 0, 1), mat2(1, 0, 1, 1));
}

// Degenerate parameter point (1, 1): the matrix at infinity collapses to -I.
MonodromyTuple one_one() {
  return make_tuple(mat2(-1, 2, -2, 3), mat2(1, 2, 0, 1), mat2(1, 0, -2, 1));
}

MonodromyTuple conjugated(const MonodromyTuple& t, const CMat& p) {
  CMat pi = mat_inv(p);
  return make_tuple(pi * t.M0() * p, pi * t.M1() * p, pi * t.Mlambda() * p);
}

}  // namespace

TEST_CASE("derived matrix at infinity") {
  CMat id = CMat::identity(2, qn(0));
  CHECK(make_tuple(id, id, id).Minf() == id);
  CHECK(third_third().Minf() == mat2(-1, 3, 0, -1));
  CHECK(one_one().Minf() == mat2(-1, 0, 0, -1));
}

TEST_CASE("product relation holds exactly") {
  for (const MonodromyTuple& t : {third_third(), one_one()}) {
    CMat prod = t.M0() * t.M1() * t.Mlambda() * t.Minf();
    CHECK(prod == CMat::identity(2, qn(0)));
  }
}

TEST_CASE("tuple construction rejects bad input") {
  CMat id2 = CMat::identity(2, qn(0));
  CMat id3 = CMat::identity(3, qn(0));
  CHECK_THROWS_AS(make_tuple(id2, id3, id2), DimensionError);
  CHECK_THROWS_AS(make_tuple(CMat(2, 3, qn(0)), id2, id2), DimensionError);
  CHECK_THROWS_AS(make_tuple(mat2(1, 1, 1, 1), id2, id2), SingularError);
  CHECK_THROWS_AS(make_tuple(id2, id2, mat2(2, 4, 1, 2)), SingularError);
}

TEST_CASE("star check on pinned tuples") {
  CHECK(star_check(third_third()));
  CHECK_FALSE(star_check(one_one()));  // -I at infinity is semisimple
  CMat id = CMat::identity(2, qn(0));
  CHECK_FALSE(star_check(make_tuple(id, id, id)));
  // eigenvalues outside {1,-1} must map to false, not throw
  MonodromyTuple diag = make_tuple(mat2(2, 0, 0, 3), mat2(1, 0, 0, 1), mat2(1, 0, 0, 1));
  CHECK_FALSE(star_check(diag));
  MonodromyTuple r3 = make_tuple(CMat::identity(3, qn(0)), CMat::identity(3, qn(0)),
                                 CMat::identity(3, qn(0)));
  CHECK_THROWS_AS(star_check(r3), DimensionError);
}

TEST_CASE("star check is conjugation invariant") {
  MonodromyTuple t = third_third();
  CHECK(star_check(conjugated(t, mat2(1, 2, 3, 7))));
  CMat p = CMat::from_rows({{qn(1), CycNum::zeta(5)}, {qn(0), qn(1)}});
  CHECK(star_check(conjugated(t, p)));
}

TEST_CASE("irreducibility") {
  MonodromyTuple diag =
      make_tuple(mat2(1, 0, 0, 2), mat2(3, 0, 0, 4), mat2(5, 0, 0, 6));
  CHECK_FALSE(is_irreducible(diag));
  CHECK(is_irreducible(third_third()));
  CHECK(is_irreducible(one_one()));
  // shared fixed line: all upper triangular
  MonodromyTuple tri =
      make_tuple(mat2(1, 1, 0, 1), mat2(1, 3, 0, 1), mat2(1, -2, 0, 1));
  CHECK_FALSE(is_irreducible(tri));
  // rank 1 is vacuously irreducible
  CMat one = CMat::from_rows({{qn(5)}});
  CHECK(is_irreducible(make_tuple(one, one, one)));
}

TEST_CASE("trace coordinates of pinned tuples") {
  TraceCoordinates c = trace_coordinates(third_third());
  CHECK(c.a0.eq(qn(2)));
  CHECK(c.a1.eq(qn(2)));
  CHECK(c.alambda.eq(qn(2)));
  CHECK(c.ainf.eq(qn(-2)));
  CHECK(c.x.eq(qn(1)));
  CHECK(c.y.eq(qn(1)));
  CHECK(c.z.eq(qn(1)));

  TraceCoordinates d = trace_coordinates(one_one());
  CHECK(d.ainf.eq(qn(-2)));
  CHECK(d.x.eq(qn(-2)));
  CHECK(d.y.eq(qn(-2)));
  CHECK(d.z.eq(qn(-2)));

  CMat id = CMat::identity(2, qn(0));
  TraceCoordinates e = trace_coordinates(make_tuple(id, id, id));
  CHECK(e.a0.eq(qn(2)));
  CHECK(e.ainf.eq(qn(2)));
  CHECK(e.x.eq(qn(2)));
}

TEST_CASE("trace coordinates are conjugation invariant") {
  MonodromyTuple t = third_third();
  TraceCoordinates base = trace_coordinates(t);
  CHECK(trace_coordinates(conjugated(t, mat2(1, 2, 3, 7))) == base);
  CMat p = CMat::from_rows({{qn(1), CycNum::zeta(8)}, {CycNum::zeta(8) * qn(-1), qn(1)}});
  CHECK(trace_coordinates(conjugated(t, p)) == base);
}

TEST_CASE("conjugacy decision") {
  MonodromyTuple t = third_third();
  CHECK(is_conjugate(t, conjugated(t, mat2(2, 1, 1, 1))));
  CHECK_FALSE(is_conjugate(t, one_one()));
  CMat id = CMat::identity(2, qn(0));
  MonodromyTuple trivial = make_tuple(id, id, id);
  CHECK_THROWS_AS(is_conjugate(trivial, t), ParameterError);
}

TEST_CASE("conjugacy is an equivalence on samples") {
  MonodromyTuple a = third_third();
  MonodromyTuple b = conjugated(a, mat2(1, 1, 1, 2));
  MonodromyTuple c = conjugated(a, mat2(3, 2, 1, 1));
  CHECK(is_conjugate(a, a));
  CHECK(is_conjugate(a, b));
  CHECK(is_conjugate(b, a));
  CHECK(is_conjugate(b, c));
  CHECK(is_conjugate(a, c));
}

TEST_CASE("finite image orders") {
  CMat id = CMat::identity(2, qn(0));
  CHECK(finite_image(make_tuple(id, id, id), 10) == 1);
  CHECK(finite_image(make_tuple(mat2(1, 0, 0, -1), id, id), 10) == 2);
  // dihedral pair: a swap and a rotation by a quarter turn
  MonodromyTuple dih = make_tuple(mat2(0, 1, 1, 0), mat2(0, -1, 1, 0), id);
  CHECK(finite_image(dih, 100) == 8);
  // scalar of order 6 mixed in, keys must stay canonical across orders
  CMat z6 = CMat::from_rows({{CycNum::zeta(6), qn(0)}, {qn(0), CycNum::zeta(6)}});
  CHECK(finite_image(make_tuple(z6, id, id), 100) == 6);
  // unipotent generator has infinite order
  CHECK_FALSE(finite_image(third_third(), 500).has_value());
}
