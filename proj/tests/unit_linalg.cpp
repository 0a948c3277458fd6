#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "mc4p/matrix.hpp"

using namespace mc4p;

namespace {

using CM = Matrix<CycNum>;

CycNum qn(long p, long q = 1) { return CycNum(rat(p, q)); }

CM mat2(long a, long b, long c, long d) {
  return CM::from_rows({{qn(a), qn(b)}, {qn(c), qn(d)}});
}

// independent oracle: characteristic polynomial by cofactor expansion of
// det(tI - A) over the polynomial ring (exponential, fine for n <= 4)
Poly<CycNum> charpoly_by_minors(const CM& a) {
  long n = a.rows();
  CycNum zero = qn(0), one = qn(1);
  using PP = Poly<CycNum>;
  // build tI - A as a matrix of polynomials
  std::vector<std::vector<PP>> m(n, std::vector<PP>(n, PP(zero)));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      std::vector<CycNum> c{-a.at(i, j)};
      if (i == j) c.push_back(one);
      m[i][j] = PP(zero, c);
    }
  // recursive Laplace expansion on column 0
  std::function<PP(std::vector<std::vector<PP>>)> det =
      [&](std::vector<std::vector<PP>> sub) -> PP {
    long k = (long)sub.size();
    if (k == 1) return sub[0][0];
    PP acc(zero);
    for (long i = 0; i < k; ++i) {
      std::vector<std::vector<PP>> minor;
      for (long r = 0; r < k; ++r) {
        if (r == i) continue;
        std::vector<PP> row(sub[r].begin() + 1, sub[r].end());
        minor.push_back(std::move(row));
      }
      PP term = sub[i][0] * det(minor);
      acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  return det(m);
}

}  // namespace

TEST_CASE("product, identity, trace") {
  CM a = mat2(2, -1, 1, 0), b = mat2(1, -1, 0, 1);
  CM ab = a * b;
  CHECK(ab == mat2(2, -3, 1, -1));
  CHECK(CM::identity(2, qn(0)) * a == a);
  CHECK(a.trace().eq(qn(2)));
  CHECK_THROWS_AS(a * CM(3, 3, qn(0)), DimensionError);
}

TEST_CASE("rank of pinned examples") {
  CHECK(rank(mat2(-2, 2, -2, 2)) == 1);
  CHECK(rank(mat2(1, 0, 0, 1)) == 2);
  CHECK(rank(CM(2, 2, qn(0))) == 0);
  // rank over a genuinely cyclotomic matrix: rows [1, z], [z, z^2] are dependent
  CycNum z = CycNum::zeta(5);
  CM m = CM::from_rows({{qn(1), z}, {z, z * z}});
  CHECK(rank(m) == 1);
}

TEST_CASE("kernel basis annihilates and has complementary dimension") {
  CM zero33(3, 3, qn(0));
  auto basis = kernel_basis(zero33);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0][0].eq(qn(1)));  // standard basis in ascending free-column order
  CHECK(basis[1][1].eq(qn(1)));

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 12; ++trial) {
    long n = 3 + (trial % 2), r = 1 + (trial % 3);
    // A = B*C with inner dimension r forces rank <= r
    CM b(n, r, qn(0)), c(r, n, qn(0));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < r; ++j) b.at(i, j) = qn(entry(rng));
    for (long i = 0; i < r; ++i)
      for (long j = 0; j < n; ++j) c.at(i, j) = qn(entry(rng));
    CM a = b * c;
    long rk = rank(a);
    CHECK(rk <= r);
    auto ker = kernel_basis(a);
    CHECK((long)ker.size() == n - rk);  // rank-nullity
    for (auto& v : ker) {
      for (long i = 0; i < n; ++i) {
        CycNum dot = qn(0);
        for (long j = 0; j < n; ++j) dot += a.at(i, j) * v[j];
        CHECK(dot.is_zero());
      }
    }
  }
}

TEST_CASE("inverse round-trips and rejects singular input") {
  CM a = mat2(2, -1, 1, 0);
  CHECK(mat_inv(a) * a == CM::identity(2, qn(0)));
  CHECK(a * mat_inv(a) == CM::identity(2, qn(0)));
  CHECK_THROWS_AS(mat_inv(mat2(1, 2, 2, 4)), SingularError);

  CycNum z = CycNum::zeta(8);
  CM c = CM::from_rows({{qn(1), z}, {qn(0), qn(1)}});
  CHECK(mat_inv(c) * c == CM::identity(2, qn(0)));
}

TEST_CASE("char_poly on pinned examples") {
  // [[2,-1],[1,0]] has char poly t^2 - 2t + 1
  Poly<CycNum> p = char_poly(mat2(2, -1, 1, 0));
  REQUIRE(p.degree() == 2);
  CHECK(p.coeff(0).eq(qn(1)));
  CHECK(p.coeff(1).eq(qn(-2)));
  CHECK(p.coeff(2).eq(qn(1)));

  Poly<CycNum> q = char_poly(mat2(1, 0, 0, -1));  // t^2 - 1
  CHECK(q.coeff(0).eq(qn(-1)));
  CHECK(q.coeff(1).eq(qn(0)));
  CHECK(q.coeff(2).eq(qn(1)));

  CHECK_THROWS_AS(char_poly(CM(13, 13, qn(0))), DimensionError);
}

TEST_CASE("char_poly matches cofactor-expansion oracle and Cayley-Hamilton") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    long n = 2 + trial % 3;
    CM a(n, n, qn(0));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        a.at(i, j) = qn(entry(rng));
        if (trial % 2) a.at(i, j) += CycNum::zeta(3) * CycNum(rat(entry(rng)));
      }
    Poly<CycNum> p = char_poly(a);
    CHECK(p == charpoly_by_minors(a));
    // Cayley-Hamilton: p(A) = 0
    CM acc(n, n, qn(0));
    CM power = CM::identity(n, qn(0));
    for (long k = 0; k <= p.degree(); ++k) {
      acc = acc + power.scaled(p.coeff(k));
      if (k < p.degree()) power = power * a;
    }
    CHECK(acc == CM(n, n, qn(0)));
    // conjugation invariance
    CM s = CM::identity(n, qn(0));
    s.at(0, n - 1) = qn(3);
    if (n > 1) s.at(1, 0) = qn(-1);
    CHECK(char_poly(mat_inv(s) * a * s) == p);
  }
}

TEST_CASE("jordan_type distinguishes unipotent block shapes") {
  std::vector<CycNum> pm{qn(1), qn(-1)};

  // J(1,2): one block of size 2
  JordanType j = jordan_type(mat2(1, 1, 0, 1), pm);
  REQUIRE(j.size() == 1);
  CHECK(j[0].size == 2);
  CHECK(j[0].eigenvalue.eq(qn(1)));

  // identity: two blocks of size 1
  JordanType id = jordan_type(CM::identity(2, qn(0)), pm);
  REQUIRE(id.size() == 2);
  CHECK(id[0].size == 1);
  CHECK(id[1].size == 1);

  // [[-1,3],[0,-1]] is J(-1,2)
  JordanType jm = jordan_type(mat2(-1, 3, 0, -1), pm);
  REQUIRE(jm.size() == 1);
  CHECK(jm[0].size == 2);
  CHECK(jm[0].eigenvalue.eq(qn(-1)));

  // diag(1,-1): one block each
  JordanType d = jordan_type(mat2(1, 0, 0, -1), pm);
  REQUIRE(d.size() == 2);

  // 4x4 mixed: J(1,2) + J(1,1) + J(-1,1)
  CM m4(4, 4, qn(0));
  m4.at(0, 0) = qn(1); m4.at(0, 1) = qn(1);
  m4.at(1, 1) = qn(1);
  m4.at(2, 2) = qn(1);
  m4.at(3, 3) = qn(-1);
  JordanType t4 = jordan_type(m4, pm);
  REQUIRE(t4.size() == 3);
  long total = 0;
  for (auto& blk : t4) total += blk.size;
  CHECK(total == 4);

  // eigenvalue outside candidates
  CHECK_THROWS_AS(jordan_type(mat2(2, 0, 0, 2), pm), EigenvalueError);

  // candidates may include values that do not occur
  std::vector<CycNum> extra{qn(1), qn(-1), CycNum::zeta(4)};
  CHECK(jordan_type(mat2(1, 1, 0, 1), extra) == j);

  // conjugation invariance
  CM s = mat2(1, 2, -1, 3);
  CHECK(jordan_type(mat_inv(s) * mat2(1, 1, 0, 1) * s, pm) == j);
}

TEST_CASE("matrix powers") {
  CM a = mat2(1, 1, 0, 1);
  CHECK(a.pow(5) == mat2(1, 5, 0, 1));
  CHECK(a.pow(0) == CM::identity(2, qn(0)));
  CHECK(a.pow(-2) == mat2(1, -2, 0, 1));
}
