#include "mc4p/convolution.hpp"

#include <numeric>
#include <utility>

#include "mc4p/errors.hpp"

namespace mc4p {

namespace {
CycNum cyc(long v) { return CycNum(Rat(v)); }
}

ConvolutionScalar::ConvolutionScalar(const CycNum& c) : c_(c), order_(0) {
  auto ord = c.root_of_unity_order();
  if (!ord) throw ParameterError("convolution scalar must be a root of unity");
  if (*ord == 1) throw ParameterError("convolution scalar 1 is excluded");
  order_ = *ord;
}

MonodromyTuple middle_convolve(const MonodromyTuple& t, const ConvolutionScalar& sc,
                               ConvolutionDetail* detail) {
  const long n = t.rank();
  const long N = 3 * n;
  const CycNum c = sc.value();
  const CycNum zero = cyc(0);
  const std::vector<CMat> A = {t.M0(), t.M1(), t.Mlambda()};
  const CMat id_n = CMat::identity(n, zero);

  // Block matrix for slot k: identity outside the k-th block row.  Within
  // that row the diagonal slot carries c*A_k, slots to its left c*(A_j - I),
  // slots to its right (A_j - I).
  auto block = [&](long k) {
    CMat b = CMat::identity(N, zero);
    for (long j = 0; j < 3; ++j) {
      CMat cell = (j == k) ? A[k].scaled(c) : CMat(A[j] - id_n);
      if (j < k) cell = cell.scaled(c);
      for (long r = 0; r < n; ++r)
        for (long col = 0; col < n; ++col) b.at(k * n + r, j * n + col) = cell.at(r, col);
    }
    return b;
  };
  const std::vector<CMat> B = {block(0), block(1), block(2)};

  // K: in each block slot, the fixed vectors of that slot's input matrix.
  RowSpan<CycNum> span;
  std::vector<std::vector<CycNum>> columns;
  long dim_k = 0;
  for (long k = 0; k < 3; ++k) {
    for (const std::vector<CycNum>& v : kernel_basis(A[k] - id_n)) {
      ++dim_k;
      std::vector<CycNum> emb(N, zero);
      for (long i = 0; i < n; ++i) emb[k * n + i] = v[i];
      if (span.add(emb)) columns.push_back(std::move(emb));
    }
  }

  // L: common fixed vectors of the three block matrices, via one stacked
  // kernel computation.
  CMat stacked(3 * N, N, zero);
  for (long k = 0; k < 3; ++k) {
    CMat diff = B[k] - CMat::identity(N, zero);
    for (long r = 0; r < N; ++r)
      for (long col = 0; col < N; ++col) stacked.at(k * N + r, col) = diff.at(r, col);
  }
  std::vector<std::vector<CycNum>> lbasis = kernel_basis(stacked);
  const long dim_l = (long)lbasis.size();
  for (std::vector<CycNum>& v : lbasis)
    if (span.add(v)) columns.push_back(std::move(v));

  const long dim_kl = span.dim();
  const long q = N - dim_kl;
  if (q == 0) throw DegenerateError("convolution quotient has dimension zero");

  // Complete to a basis with the earliest standard vectors, in index order.
  for (long j = 0; j < N && (long)columns.size() < N; ++j) {
    std::vector<CycNum> e(N, zero);
    e[j] = cyc(1);
    if (span.add(e)) columns.push_back(std::move(e));
  }

  CMat s(N, N, zero);
  for (long j = 0; j < N; ++j)
    for (long i = 0; i < N; ++i) s.at(i, j) = columns[j][i];
  const CMat s_inv = mat_inv(s);

  std::vector<CMat> out;
  for (const CMat& b : B) {
    CMat conj = s_inv * b * s;
    // the split-off span must be invariant, i.e. no leakage into the
    // complement rows; anything else means the block convention is broken
    for (long r = dim_kl; r < N; ++r)
      for (long col = 0; col < dim_kl; ++col)
        if (!conj.at(r, col).is_zero())
          throw ParameterError("convolution invariant subspace leaked");
    CMat quot(q, q, zero);
    for (long r = 0; r < q; ++r)
      for (long col = 0; col < q; ++col) quot.at(r, col) = conj.at(dim_kl + r, dim_kl + col);
    out.push_back(std::move(quot));
  }

  if (detail) *detail = ConvolutionDetail{dim_k, dim_l, q};
  return make_tuple(out[0], out[1], out[2]);
}

CoverCharacter::CoverCharacter(long m, long a, long b) : m_(m), a_(a), b_(b) {
  if (m < 1) throw ParameterError("character modulus must be positive");
  a_ = ((a % m) + m) % m;
  b_ = ((b % m) + m) % m;
}

long CoverCharacter::exact_order() const {
  return m_ / std::gcd(m_, std::gcd(a_, b_));
}

namespace {

// Loops around 0, 1, lambda are letters 0, 1, 2; a word is a signed letter
// sequence.  The subgroup of the double cover is the even-length words;
// its Schreier transversal is {identity, g0}.
struct SLetter {
  int gen;
  int sign;
};

// Value of the rewritten word in the cover's first homology, in coordinates
// on the basis ([g0*g1], [g0*glambda]).  The rewriting works over the fixed
// generator list u=g0^2, v=g0*g1, w=g0*glambda, s=g1*g0^-1, t=glambda*g0^-1;
// the puncture squares map to zero, which forces [u]=0, [s]=-[v], [t]=-[w].
std::pair<long, long> homology_class(const std::vector<SLetter>& word) {
  static const std::pair<long, long> cls[2][3] = {
      {{0, 0}, {-1, 0}, {0, -1}},  // from coset e: trivial, s, t
      {{0, 0}, {1, 0}, {0, 1}},    // from coset g0: u, v, w
  };
  long x = 0, y = 0;
  int coset = 0;
  for (const SLetter& l : word) {
    if (l.sign > 0) {
      x += cls[coset][l.gen].first;
      y += cls[coset][l.gen].second;
      coset ^= 1;
    } else {
      coset ^= 1;
      x -= cls[coset][l.gen].first;
      y -= cls[coset][l.gen].second;
    }
  }
  if (coset != 0) throw ParameterError("word does not lie in the even subgroup");
  return {x, y};
}

}  // namespace

MonodromyTuple induced_pushforward(const CoverCharacter& chi) {
  const long m = chi.modulus();
  auto chi_of = [&](std::pair<long, long> cl) {
    return CycNum::zeta_pow(m, cl.first * chi.a() + cl.second * chi.b());
  };
  // Induced action on the two sheets: each loop flips the sheet, and the
  // entry is the character value of the rewritten word t_dst^-1 * g * t_src.
  auto gen_matrix = [&](int g) {
    CMat mat(2, 2, cyc(0));
    for (int src = 0; src < 2; ++src) {
      int dst = src ^ 1;
      std::vector<SLetter> word;
      if (dst == 1) word.push_back({0, -1});
      word.push_back({g, +1});
      if (src == 1) word.push_back({0, +1});
      mat.at(dst, src) = chi_of(homology_class(word));
    }
    return mat;
  };
  return make_tuple(gen_matrix(0), gen_matrix(1), gen_matrix(2));
}

}  // namespace mc4p
