#include "doctest.h"

#include <random>
#include <set>

#include "dca/config.hpp"
#include "dca/matrix.hpp"

using namespace dca;

TEST_CASE("solve: identity and zero systems") {
  const Gf& F = Gf::get(3, 1);
  Mat I = Mat::identity(F, 3);
  auto s = solve_linear(I, {1, 2, 0});
  REQUIRE(s.has_value());
  CHECK(s->particular == std::vector<fel>{1, 2, 0});
  CHECK(s->kernel.rows() == 0);

  Mat Z(F, 2, 4);
  auto s2 = solve_linear(Z, {0, 0});
  REQUIRE(s2.has_value());
  CHECK(s2->kernel.rows() == 4);  // kernel = ambient
}

TEST_CASE("solve: rank-1 system over GF(3) has a 1-dim solution coset") {
  // A = [1 2; 2 1], rows proportional (2*row1 = row2), b = (1, 2):
  // solutions x with x1 + 2 x2 = 1 -> particular (1,0), kernel dim 1.
  const Gf& F = Gf::get(3, 1);
  Mat A(F, 2, 2);
  A.at(0, 0) = 1; A.at(0, 1) = 2;
  A.at(1, 0) = 2; A.at(1, 1) = 1;
  auto s = solve_linear(A, {1, 2});
  REQUIRE(s.has_value());
  CHECK(s->kernel.rows() == 1);
  // verify A x = b exactly
  auto bx = A.apply(s->particular);
  CHECK(bx == std::vector<fel>{1, 2});
  // inconsistent right-hand side
  CHECK_FALSE(solve_linear(A, {1, 0}).has_value());
}

TEST_CASE("RREF canonicalization under random change of basis") {
  const Gf& F = Gf::get(5, 1);
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    int d = 5, k = 2 + (int)(rng() % 2);
    Mat B(F, k, d);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < d; ++j) B.at(i, j) = fel(rng() % 5);
    Subspace S1(B, d);
    if (S1.dim() != k) continue;
    // random invertible change of basis
    Mat T(F, k, k);
    do {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) T.at(i, j) = fel(rng() % 5);
    } while (T.rank() != k);
    Subspace S2(T * B, d);
    CHECK(S1 == S2);
  }
}

TEST_CASE("enumerations: lines, vectors, hyperplanes") {
  const Gf& F3 = Gf::get(3, 1);
  int count = 0;
  enumerate_lines(F3, 1, 1000, [&](const Subspace&) { ++count; });
  CHECK(count == 1);  // 1-dim space has exactly one line

  count = 0;
  std::set<Subspace> seen;
  enumerate_lines(F3, 2, 1000, [&](const Subspace& L) {
    ++count;
    seen.insert(L);
  });
  CHECK(count == 4);  // (3^2-1)/(3-1) = 4
  CHECK(seen.size() == 4);

  const Gf& F4 = Gf::get(2, 2);
  count = 0;
  enumerate_vectors(F4, 2, 1000, [&](const std::vector<fel>&) { ++count; });
  CHECK(count == 16);  // q^d

  count = 0;
  enumerate_hyperplanes(F3, 3, 1000, [&](const Subspace& H) {
    CHECK(H.dim() == 2);
    ++count;
  });
  CHECK(count == 13);  // (27-1)/2
}

TEST_CASE("enumeration caps fail loudly") {
  const Gf& F = Gf::get(5, 1);
  CHECK_THROWS_AS(enumerate_vectors(F, 20, 1000, [](const std::vector<fel>&) {}), cap_exceeded);
  CHECK_THROWS_AS(enumerate_lines(F, 10, 10, [](const Subspace&) {}), cap_exceeded);
}

TEST_CASE("subspace enumeration over a fixed lower subspace") {
  const Gf& F = Gf::get(3, 1);
  // subspaces of F^3 of dim 2 containing a fixed line: (3^2-1)/2 = 4
  Mat line(F, 1, 3);
  line.at(0, 0) = 1;
  Subspace L(line, 3);
  int count = 0;
  enumerate_subspaces_over(F, 3, 2, L, 1000, [&](const Subspace& S) {
    CHECK(S.dim() == 2);
    CHECK(S.contains(L));
    ++count;
  });
  CHECK(count == 4);
  // total 2-dim subspaces of F^3: Gaussian binomial [3 2]_3 = 13
  count = 0;
  enumerate_subspaces_over(F, 3, 2, Subspace(F, 3), 1000,
                           [&](const Subspace&) { ++count; });
  CHECK(count == 13);
  CHECK(gauss_binom(3, 3, 2) == 13);
}

TEST_CASE("kernel and inverse") {
  const Gf& F = Gf::get(7, 1);
  Mat A(F, 2, 3);
  A.at(0, 0) = 1; A.at(0, 1) = 2; A.at(0, 2) = 3;
  A.at(1, 0) = 0; A.at(1, 1) = 1; A.at(1, 2) = 5;
  Mat K = A.kernel();
  CHECK(K.rows() == 1);
  CHECK((A * K.transpose()).is_zero());

  Mat M(F, 2, 2);
  M.at(0, 0) = 2; M.at(0, 1) = 1;
  M.at(1, 0) = 3; M.at(1, 1) = 4;
  Mat Mi = M.inverse();
  CHECK(M * Mi == Mat::identity(F, 2));
}

TEST_CASE("empty matrices compose as identities") {
  const Gf& F = Gf::get(3, 1);
  Mat a(F, 0, 3), b(F, 3, 0);
  Mat ab = b * a;  // 3x3 zero
  CHECK(ab.rows() == 3);
  CHECK(ab.is_zero());
  Mat ba = a * b;  // 0x0
  CHECK(ba.rows() == 0);
  CHECK(ba.cols() == 0);
}
