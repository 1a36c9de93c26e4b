#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "quandle/errors.hpp"
#include "quandle/integer_linalg.hpp"

using namespace quandle;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> entry(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

std::vector<std::vector<mpz_class>> nested(const IntMatrix& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

bool is_smith_form(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < k) {
      if (d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
      if (d(i, i) != 0 && !mpz_divisible_p(d(i + 1, i + 1).get_mpz_t(), d(i, i).get_mpz_t())) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("mult_order") {
  CHECK(mult_order(1, 7) == 1);
  CHECK(mult_order(3, 4) == 2);
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(0, 1) == 1);
  CHECK_THROWS_AS(mult_order(2, 4), DomainError);
  for (std::int64_t n = 1; n <= 30; ++n)
    for (std::int64_t t = 0; t < n; ++t)
      if (std::gcd(t, n) == 1) CHECK(mult_order(t, n) == oracle::mult_order(t, n));
}

TEST_CASE("smith normal form: small examples") {
  CHECK(smith_normal_form(IntMatrix::identity(2)) == IntMatrix::identity(2));
  CHECK(smith_normal_form(IntMatrix(3, 2)) == IntMatrix(3, 2));
  CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}) == IntMatrix{{2, 0}, {0, 4}});
  CHECK(smith_normal_form(IntMatrix{{0, -3}}) == IntMatrix{{3, 0}});
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}) == IntMatrix{{1, 0}, {0, 6}});
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    const IntMatrix m = random_matrix(rng, dim(rng), dim(rng), -6, 6);
    CHECK(invariant_factors(m) == oracle::invariant_factors_by_minors(nested(m)));
  }
}

TEST_CASE("smith decomposition recomposes exactly") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 9);
    const IntMatrix m = random_matrix(rng, dim(rng), dim(rng), -9, 9);
    const SmithDecomposition s = smith_decomposition(m);
    CHECK(is_smith_form(s.diagonal));
    CHECK(s.left * m * s.right == s.diagonal);
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
  }
}

TEST_CASE("entry growth beyond machine words stays exact") {
  // Products of large entries overflow 64 bits during elimination.
  IntMatrix m{{1000000007, 998244353}, {1000000009, 1000000021}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(i, j) *= Integer("1000000000000");
  const auto factors = invariant_factors(m);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0] * factors[1] == abs(determinant(m)));
  CHECK(factors[0] == Integer("1000000000000"));
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{2, 1}, {7, 4}}) == 1);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, 4, -5, 5);
    CHECK(determinant(m) == oracle::det(nested(m)));
  }
}

TEST_CASE("abelian invariants normalization") {
  CHECK(AbelianInvariants::from_cyclic(0, {}) == AbelianInvariants{});
  CHECK(AbelianInvariants::from_cyclic(1, {1, 1}) == AbelianInvariants{1, {}});
  CHECK(AbelianInvariants::from_cyclic(0, {2, 3}) == AbelianInvariants{0, {6}});
  CHECK(AbelianInvariants::from_cyclic(0, {4, 6}) == AbelianInvariants{0, {2, 12}});
  CHECK(AbelianInvariants::from_cyclic(0, {0, 5}) == AbelianInvariants{1, {5}});
  CHECK(power(AbelianInvariants{1, {3}}, 3) == AbelianInvariants{3, {3, 3, 3}});
  CHECK(direct_sum(AbelianInvariants{1, {2}}, AbelianInvariants{0, {3}}) == AbelianInvariants{1, {6}});
}

TEST_CASE("homology_invariants") {
  SUBCASE("free") {
    const std::size_t k = 3;
    CHECK(homology_invariants(IntMatrix(1, k), IntMatrix(k, 1)) == AbelianInvariants{k, {}});
  }
  SUBCASE("Z/2") { CHECK(homology_invariants(IntMatrix(1, 1), IntMatrix{{2}}) == AbelianInvariants{0, {2}}); }
  SUBCASE("kernel of a surjection") {
    // Z^2 -> Z, (x, y) -> x + y; image generated by 3 (1, -1)
    CHECK(homology_invariants(IntMatrix{{1, 1}}, IntMatrix{{3}, {-3}}) == AbelianInvariants{0, {3}});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(homology_invariants(IntMatrix{{1}}, IntMatrix{{1}}), DomainError);
    CHECK_THROWS_AS(homology_invariants(IntMatrix(1, 2), IntMatrix(3, 1)), DomainError);
    try {
      homology_invariants(IntMatrix{{1}}, IntMatrix{{1}});
    } catch (const DomainError& e) {
      CHECK(e.kind() == "NotAComplex");
    }
  }
  SUBCASE("invariant under change of basis") {
    const IntMatrix d_low{{1, 2, -1}};
    const IntMatrix d_high{{2, 1}, {-1, 0}, {0, 1}};
    REQUIRE((d_low * d_high).is_zero());
    const AbelianInvariants base = homology_invariants(d_low, d_high);
    const IntMatrix change{{1, 0, 0}, {3, 1, 0}, {-2, 5, 1}};  // unimodular
    const IntMatrix change_inv{{1, 0, 0}, {-3, 1, 0}, {17, -5, 1}};
    REQUIRE(change * change_inv == IntMatrix::identity(3));
    const IntMatrix outer{{1, 4}, {0, 1}};
    CHECK(homology_invariants(d_low * change_inv, change * d_high * outer) == base);
    CHECK(homology_invariants(IntMatrix{{-1, -2, 1}}, d_high) == base);
  }
}

TEST_CASE("hermite normal form and lattice equality") {
  const IntMatrix a{{-3, 3, 0}, {-1, -1, 2}};
  const IntMatrix b{{-3, 3, 0}, {-4, 2, 2}};
  CHECK(same_lattice(a, b));
  CHECK(same_lattice(a, IntMatrix{{-3, 3, 0}, {2, -4, 2}}));
  CHECK_FALSE(same_lattice(a, IntMatrix{{-3, 3, 0}, {1, -2, 1}}));
  CHECK(hermite_normal_form(IntMatrix{{4, 6}, {6, 9}}) == IntMatrix{{2, 3}});
  CHECK(hermite_normal_form(IntMatrix(2, 2)).rows() == 0);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, 3, -7, 7);
    const IntMatrix h = hermite_normal_form(m);
    // echelon with positive pivots and reduced entries above them
    std::size_t last = 0;
    for (std::size_t r = 0; r < h.rows(); ++r) {
      std::size_t c = 0;
      while (h(r, c) == 0) ++c;
      if (r > 0) CHECK(c > last);
      CHECK(h(r, c) > 0);
      for (std::size_t above = 0; above < r; ++above) CHECK((h(above, c) >= 0 && h(above, c) < h(r, c)));
      last = c;
    }
    // a unimodular mix of the rows spans the same lattice
    const IntMatrix mix{{1, 2, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}};
    CHECK(hermite_normal_form(mix * m) == h);
  }
}
