#include <doctest.h>

#include <random>

#include "czc/errors.hpp"
#include "czc/intlin.hpp"
#include "support.hpp"

using namespace czc;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  IntMatrix A(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) A(r, c) = support::uniform(rng, lo, hi);
  return A;
}

// Product of random elementary row operations.
IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix U = IntMatrix::identity(n);
  for (int step = 0; step < 6 && n > 1; ++step) {
    const auto i = static_cast<std::size_t>(support::uniform(rng, 0, static_cast<int>(n) - 1));
    auto j = static_cast<std::size_t>(support::uniform(rng, 0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    const int k = support::uniform(rng, -2, 2);
    for (std::size_t c = 0; c < n; ++c) U(i, c) += k * U(j, c);
    if (support::uniform(rng, 0, 3) == 0)
      for (std::size_t c = 0; c < n; ++c) std::swap(U(i, c), U(j, c));
  }
  return U;
}

// Whether some x in [-box, box]^n solves A x = b.
bool brute_force_feasible(const IntMatrix& A, const IntVector& b, int box) {
  const std::size_t n = A.cols();
  std::vector<int> x(n, -box);
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < A.rows() && ok; ++r) {
      Integer s = 0;
      for (std::size_t c = 0; c < n; ++c) s += A(r, c) * x[c];
      ok = s == b[r];
    }
    if (ok) return true;
    std::size_t pos = 0;
    while (pos < n && x[pos] == box) x[pos++] = -box;
    if (pos == n) return false;
    ++x[pos];
  }
}

void check_hnf_shape(const HermiteResult& h) {
  std::size_t last_pivot = 0;
  for (std::size_t r = 0; r < h.H.rows(); ++r) {
    if (r >= h.rank) {
      for (const auto& v : h.H.row(r)) CHECK(v == 0);
      continue;
    }
    const std::size_t p = h.pivot_columns[r];
    if (r > 0) CHECK(p > last_pivot);
    last_pivot = p;
    CHECK(h.H(r, p) > 0);
    for (std::size_t c = 0; c < p; ++c) CHECK(h.H(r, c) == 0);
    for (std::size_t above = 0; above < r; ++above) {
      CHECK(h.H(above, p) >= 0);
      CHECK(h.H(above, p) < h.H(r, p));
    }
  }
}

}  // namespace

TEST_SUITE("intlin") {

TEST_CASE("hermite normal form examples") {
  const auto id = hermite_normal_form(IntMatrix::identity(4));
  CHECK(id.H == IntMatrix::identity(4));
  CHECK(id.rank == 4);

  const IntMatrix zero(3, 2);
  const auto z = hermite_normal_form(zero);
  CHECK(z.H == zero);
  CHECK(z.rank == 0);

  const IntMatrix A{{2, 2, 0, 2}, {0, 4, 0, 0}, {0, 0, 2, 2}, {0, 0, 0, 4}};
  const auto h = hermite_normal_form(A);
  Integer index = 1;
  for (std::size_t i = 0; i < 4; ++i) index *= h.H(i, i);
  CHECK(index == 64);
  CHECK(abs(determinant(A)) == 64);
  check_hnf_shape(h);
}

TEST_CASE("determinant by elimination") {
  CHECK(determinant(IntMatrix{{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}}) == 16);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("hermite transform is unimodular and exact") {
  std::mt19937 rng(2101);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(support::uniform(rng, 1, 5));
    const auto cols = static_cast<std::size_t>(support::uniform(rng, 1, 5));
    const IntMatrix A = random_matrix(rng, rows, cols, -4, 4);
    const auto h = hermite_normal_form(A);
    CHECK(h.U * A == h.H);
    CHECK(abs(determinant(h.U)) == 1);
    check_hnf_shape(h);
  }
}

TEST_CASE("hermite form is a lattice invariant") {
  std::mt19937 rng(2102);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(support::uniform(rng, 1, 4));
    const IntMatrix A = random_matrix(rng, n, static_cast<std::size_t>(support::uniform(rng, 1, 4)), -3, 3);
    const IntMatrix V = random_unimodular(rng, n);
    CHECK(hermite_normal_form(V * A).H == hermite_normal_form(A).H);
  }
}

TEST_CASE("diophantine examples") {
  const IntVector b{5, -3, 7};
  const auto r = solve_diophantine(IntMatrix::identity(3), b);
  REQUIRE(r.feasible);
  CHECK(*r.solution == b);
  CHECK(r.kernel_basis.empty());

  // Columns are the listed lattice generators.
  const IntMatrix L = IntMatrix{{2, 2, 0, 2}, {0, 4, 0, 0}, {0, 0, 2, 2}, {0, 0, 0, 4}}.transpose();
  CHECK_FALSE(solve_diophantine(L, {-2, -2, 0, 0}).feasible);
  CHECK(solve_diophantine(L, {2, 6, 0, 2}).feasible);

  CHECK_FALSE(solve_diophantine(IntMatrix{{4}}, {-2}).feasible);
  const auto k = solve_diophantine(IntMatrix{{4}}, {-8});
  REQUIRE(k.feasible);
  CHECK(*k.solution == IntVector{-2});

  CHECK_THROWS_AS(solve_diophantine(IntMatrix::identity(2), {1, 2, 3}), DimensionMismatch);
}

TEST_CASE("diophantine agrees with bounded brute force") {
  std::mt19937 rng(2103);
  int feasible_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto rows = static_cast<std::size_t>(support::uniform(rng, 1, 4));
    const auto cols = static_cast<std::size_t>(support::uniform(rng, 1, 4));
    const IntMatrix A = random_matrix(rng, rows, cols, -3, 3);
    IntVector b(rows);
    if (trial % 2 == 0) {
      IntVector x0(cols);
      for (auto& v : x0) v = support::uniform(rng, -3, 3);
      b = A * x0;
    } else {
      for (auto& v : b) v = support::uniform(rng, -6, 6);
    }
    const auto r = solve_diophantine(A, b);
    const bool brute = brute_force_feasible(A, b, 10);
    if (brute) CHECK(r.feasible);
    if (r.feasible) {
      ++feasible_seen;
      REQUIRE(r.solution);
      CHECK(A * *r.solution == b);
    }
    const auto rank = hermite_normal_form(A).rank;
    CHECK(r.kernel_basis.size() == cols - rank);
    for (const auto& v : r.kernel_basis) CHECK(A * v == IntVector(rows, 0));
  }
  CHECK(feasible_seen > 40);
}

TEST_CASE("lattice membership examples") {
  const auto empty = lattice_membership({}, IntVector{});
  CHECK(empty.member);
  REQUIRE(empty.coeffs);
  CHECK(empty.coeffs->empty());

  CHECK_FALSE(lattice_membership({{4}}, {-2}).member);
  const auto unit = lattice_membership({{1}}, {-2});
  CHECK(unit.member);
  CHECK(*unit.coeffs == IntVector{-2});

  const std::vector<IntVector> gens{{2, 2, 0, 2}, {0, 4, 0, 0}, {0, 0, 2, 2}, {0, 0, 0, 4}};
  CHECK_FALSE(lattice_membership(gens, {-2, -2, 0, 0}).member);
  CHECK_THROWS_AS(lattice_membership({{1, 2}}, {1}), DimensionMismatch);
}

TEST_CASE("lattice membership is invariant under unimodular change of generators") {
  std::mt19937 rng(2104);
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = static_cast<std::size_t>(support::uniform(rng, 1, 4));
    const auto n = static_cast<std::size_t>(support::uniform(rng, 1, 4));
    const IntMatrix G = random_matrix(rng, k, n, -3, 3);
    const IntMatrix G2 = random_unimodular(rng, k) * G;
    IntVector target(n);
    for (auto& v : target) v = support::uniform(rng, -5, 5);
    const auto a = lattice_membership(G.row_list(), target);
    const auto b = lattice_membership(G2.row_list(), target);
    CHECK(a.member == b.member);
    for (const auto* m : {&a, &b}) {
      if (!m->member) continue;
      const auto& gens = m == &a ? G : G2;
      IntVector sum(n, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < n; ++c) sum[c] += (*m->coeffs)[i] * gens(i, c);
      CHECK(sum == target);
    }
  }
}

TEST_CASE("matrix construction checks dimensions") {
  CHECK_THROWS_AS(IntMatrix(2, 2, {1, 2, 3}), DimensionMismatch);
  CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), DimensionMismatch);
  CHECK(IntMatrix::from_rows({}, 3).cols() == 3);
  CHECK(IntMatrix{{1, 2}, {3, 4}}.to_string() == "[[1,2],[3,4]]");
}

}  // TEST_SUITE
