#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mc4p/convolution.hpp"

using namespace mc4p;

namespace {

CycNum qn(long p, long q = 1) { return CycNum(rat(p, q)); }

CMat mat2(long a, long b, long c, long d) {
  return CMat::from_rows({{qn(a), qn(b)}, {qn(c), qn(d)}});
}

CMat antidiag(const CycNum& up, const CycNum& down) {
  return CMat::from_rows({{qn(0), up}, {down, qn(0)}});
}

MonodromyTuple cayley_third() {
  return make_tuple(mat2(2, -1, 1, 0), mat2(1, -1, 0, 1), mat2(1, 0, 1, 1));
}

}  // namespace

TEST_CASE("convolution scalar validation") {
  CHECK_THROWS_AS(ConvolutionScalar(qn(1)), ParameterError);
  CHECK_THROWS_AS(ConvolutionScalar(qn(2)), ParameterError);
  CHECK_THROWS_AS(ConvolutionScalar(CycNum::zeta(5) + qn(1)), ParameterError);
  CHECK(ConvolutionScalar::minus_one().order() == 2);
  CHECK(ConvolutionScalar(CycNum::zeta(5)).order() == 5);
  CHECK(ConvolutionScalar(CycNum::zeta(8) * CycNum::zeta(8)).order() == 4);
}

TEST_CASE("cover character normalization and order") {
  CoverCharacter chi(6, -1, 10);
  CHECK(chi.a() == 5);
  CHECK(chi.b() == 4);
  CHECK(chi.exact_order() == 6);
  CHECK(CoverCharacter(6, 2, 4).exact_order() == 3);
  CHECK(CoverCharacter(4, 2, 2).exact_order() == 2);
  CHECK(CoverCharacter(5, 0, 0).exact_order() == 1);
  CHECK(CoverCharacter(5, 0, 0).is_trivial());
  CHECK_FALSE(CoverCharacter(2, 1, 0).is_trivial());
  CHECK_THROWS_AS(CoverCharacter(0, 1, 1), ParameterError);
}

TEST_CASE("pushforward matches the closed form") {
  // the rewriting must reproduce swap matrices with character entries:
  // M0 = [[0,1],[1,0]], M1 = [[0, z^-a],[z^a, 0]], Ml = [[0, z^-b],[z^b, 0]],
  // and the derived Minf = [[0, z^(a-b)],[z^(b-a), 0]]
  const long cases[][3] = {{1, 0, 0}, {2, 1, 0}, {2, 1, 1}, {3, 1, 0},
                           {4, 1, 2}, {5, 2, 3}, {12, 5, 8}};
  for (auto [m, a, b] : cases) {
    CAPTURE(m);
    CAPTURE(a);
    CAPTURE(b);
    MonodromyTuple t = induced_pushforward(CoverCharacter(m, a, b));
    CHECK(t.M0() == antidiag(qn(1), qn(1)));
    CHECK(t.M1() == antidiag(CycNum::zeta_pow(m, -a), CycNum::zeta_pow(m, a)));
    CHECK(t.Mlambda() == antidiag(CycNum::zeta_pow(m, -b), CycNum::zeta_pow(m, b)));
    CHECK(t.Minf() == antidiag(CycNum::zeta_pow(m, a - b), CycNum::zeta_pow(m, b - a)));
    TraceCoordinates tc = trace_coordinates(t);
    CHECK(tc.a0.is_zero());
    CHECK(tc.a1.is_zero());
    CHECK(tc.alambda.is_zero());
    CHECK(tc.ainf.is_zero());
  }
}

TEST_CASE("pushforward image sizes") {
  // trivial character: both sheets swap, image is the two-element group
  CHECK(finite_image(induced_pushforward(CoverCharacter(1, 0, 0)), 10) == 2);
  // order-2 characters land in a group of order dividing 8
  for (auto [a, b] : {std::pair<long, long>{1, 0}, {0, 1}, {1, 1}}) {
    auto ord = finite_image(induced_pushforward(CoverCharacter(2, a, b)), 50);
    REQUIRE(ord.has_value());
    CHECK(8 % *ord == 0);
  }
  // an order-3 character generates a small dihedral-type group
  auto ord3 = finite_image(induced_pushforward(CoverCharacter(3, 1, 0)), 200);
  REQUIRE(ord3.has_value());
  CHECK(*ord3 == 6);
}

TEST_CASE("pushforward irreducibility splits at order two") {
  // characters fixed by the sheet flip (the 2-torsion ones) extend to the
  // base and the induced tuple splits; all others are irreducible
  CHECK_FALSE(is_irreducible(induced_pushforward(CoverCharacter(2, 1, 0))));
  CHECK_FALSE(is_irreducible(induced_pushforward(CoverCharacter(2, 1, 1))));
  CHECK_FALSE(is_irreducible(induced_pushforward(CoverCharacter(4, 2, 2))));
  CHECK(is_irreducible(induced_pushforward(CoverCharacter(3, 1, 0))));
  CHECK(is_irreducible(induced_pushforward(CoverCharacter(4, 1, 0))));
  CHECK(is_irreducible(induced_pushforward(CoverCharacter(5, 2, 3))));
}

TEST_CASE("convolution of the order-two pushforward, pinned") {
  // worked 6x6 example: K is 3-dimensional, L is the line spanned by
  // (-1,-1,1,1,1,1), the complement picks e0 and e4, and the quotient
  // matrices come out as below (middle slot collapses to the identity
  // because this character extends to the base and the input splits)
  ConvolutionDetail detail;
  MonodromyTuple out = middle_convolve(induced_pushforward(CoverCharacter(2, 1, 0)),
                                       ConvolutionScalar::minus_one(), &detail);
  CHECK(detail.dim_k == 3);
  CHECK(detail.dim_l == 1);
  CHECK(detail.out_rank == 2);
  CHECK(out.rank() == 2);
  CHECK(out.M0() == mat2(1, -2, 0, 1));
  CHECK(out.M1() == mat2(1, 0, 0, 1));
  CHECK(out.Mlambda() == mat2(1, 0, 2, 1));
  CHECK(out.Minf() == mat2(1, 2, -2, -3));
  CHECK_FALSE(star_check(out));
  TraceCoordinates tc = trace_coordinates(out);
  CHECK(tc.x.eq(qn(2)));
  CHECK(tc.y.eq(qn(2)));
  CHECK(tc.z.eq(qn(-2)));
}

TEST_CASE("convolution satisfies the rank and Jordan laws beyond order two") {
  const long cases[][3] = {{3, 1, 0}, {3, 1, 1}, {4, 1, 0}, {4, 1, 2}, {5, 2, 3},
                           {6, 1, 1}, {7, 3, 5}, {8, 1, 6}, {12, 5, 8}};
  for (auto [m, a, b] : cases) {
    CAPTURE(m);
    CAPTURE(a);
    CAPTURE(b);
    ConvolutionDetail detail;
    MonodromyTuple out = middle_convolve(induced_pushforward(CoverCharacter(m, a, b)),
                                         ConvolutionScalar::minus_one(), &detail);
    CHECK(detail.dim_k == 3);
    CHECK(detail.dim_l == 1);
    CHECK(out.rank() == 2);
    CHECK(star_check(out));
    CHECK(is_irreducible(out));
    TraceCoordinates tc = trace_coordinates(out);
    CHECK(tc.a0.eq(qn(2)));
    CHECK(tc.ainf.eq(qn(-2)));
    // the coordinates must land on the relative character variety
    CycNum r = tc.x * tc.x + tc.y * tc.y + tc.z * tc.z + tc.x * tc.y * tc.z - qn(4);
    CHECK(r.is_zero());
  }
}

TEST_CASE("convolution is involutive on star tuples") {
  ConvolutionScalar mo = ConvolutionScalar::minus_one();
  MonodromyTuple seed = cayley_third();
  MonodromyTuple once = middle_convolve(seed, mo);
  CHECK(once.rank() == 2);
  CHECK(star_check(once) == false);  // intermediate is the pushforward type
  TraceCoordinates mid = trace_coordinates(once);
  CHECK(mid.a0.is_zero());
  MonodromyTuple twice = middle_convolve(once, mo);
  CHECK(twice.rank() == 2);
  CHECK(star_check(twice));
  CHECK(is_conjugate(twice, seed));

  for (auto [m, a, b] : {std::tuple<long, long, long>{3, 1, 0}, {5, 1, 2}, {8, 3, 1}}) {
    CAPTURE(m);
    MonodromyTuple push = induced_pushforward(CoverCharacter(m, a, b));
    MonodromyTuple star = middle_convolve(push, mo);
    MonodromyTuple back = middle_convolve(star, mo);
    MonodromyTuple star2 = middle_convolve(back, mo);
    CHECK(star_check(star));
    CHECK(is_conjugate(star2, star));
  }
}

TEST_CASE("convolution commutes with conjugation") {
  MonodromyTuple t = induced_pushforward(CoverCharacter(5, 1, 3));
  CMat p = mat2(1, 2, 1, 3);
  CMat pi = mat_inv(p);
  MonodromyTuple tc =
      make_tuple(pi * t.M0() * p, pi * t.M1() * p, pi * t.Mlambda() * p);
  ConvolutionScalar mo = ConvolutionScalar::minus_one();
  CHECK(trace_coordinates(middle_convolve(t, mo)) ==
        trace_coordinates(middle_convolve(tc, mo)));
}

TEST_CASE("degenerate input is rejected") {
  CMat id = CMat::identity(2, qn(0));
  CHECK_THROWS_AS(middle_convolve(make_tuple(id, id, id), ConvolutionScalar::minus_one()),
                  DegenerateError);
}
