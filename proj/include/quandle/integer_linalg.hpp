#pragma once

// Exact linear algebra over the integers: Smith and Hermite normal forms and
// the homology of a two-step integer chain complex.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace quandle {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Matrix product. Throws DomainError("ShapeMismatch") on non-conforming shapes.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

std::string to_string(const IntMatrix& m);

/// Finitely generated abelian group Z^rank + Z/t_1 + ... + Z/t_k with
/// t_i >= 2 and t_i | t_{i+1}. Equal values <=> isomorphic groups.
struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  /// Canonical form of Z^rank + (+)_i Z/orders_i. Orders 0 count as free
  /// summands, orders 1 vanish.
  static AbelianInvariants from_cyclic(std::size_t rank, const std::vector<Integer>& orders);

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants direct_sum(const AbelianInvariants& a, const AbelianInvariants& b);
AbelianInvariants power(const AbelianInvariants& a, std::size_t copies);
std::string to_string(const AbelianInvariants& g);

/// Smallest d >= 1 with t^d = 1 mod n. Throws NotAUnit when gcd(t, n) != 1.
std::int64_t mult_order(std::int64_t t, std::int64_t n);

struct SmithDecomposition {
  IntMatrix diagonal;  // same shape as the input
  IntMatrix left;      // unimodular, rows x rows
  IntMatrix right;     // unimodular, cols x cols
};

/// D with non-negative diagonal d_1 | d_2 | ... and zeros elsewhere.
IntMatrix smith_normal_form(const IntMatrix& m);

/// D together with unimodular U, V such that U * M * V = D.
SmithDecomposition smith_decomposition(const IntMatrix& m);

/// Nonzero diagonal entries of the Smith form (the invariant factors,
/// including 1s), in divisibility order.
std::vector<Integer> invariant_factors(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Exact determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of m:
/// echelon rows with positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// True iff the rows of a and b span the same sublattice of Z^cols.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

/// Ker(d_low) / Im(d_high) for the complex  . --d_high--> . --d_low--> .
/// (column convention: d_low * d_high must vanish).
AbelianInvariants homology_invariants(const IntMatrix& d_low, const IntMatrix& d_high);

}  // namespace quandle
