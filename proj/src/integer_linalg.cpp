#include "quandle/integer_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "quandle/errors.hpp"
#include "quandle/modular.hpp"

namespace quandle {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ShapeMismatch", "ragged matrix literal");
    for (long x : row) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DomainError("ShapeMismatch", "cannot multiply " + std::to_string(a.rows()) + "x" +
                                           std::to_string(a.cols()) + " by " +
                                           std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return c;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Abelian invariants

AbelianInvariants AbelianInvariants::from_cyclic(std::size_t rank, const std::vector<Integer>& orders) {
  AbelianInvariants g;
  g.rank = rank;
  std::vector<Integer> finite;
  for (const Integer& o : orders) {
    Integer a = abs(o);
    if (a == 0) {
      ++g.rank;
    } else if (a != 1) {
      finite.push_back(a);
    }
  }
  if (finite.empty()) return g;
  IntMatrix diag(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
  for (const Integer& f : invariant_factors(diag)) {
    if (f != 1) g.torsion.push_back(f);
  }
  return g;
}

AbelianInvariants direct_sum(const AbelianInvariants& a, const AbelianInvariants& b) {
  std::vector<Integer> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  return AbelianInvariants::from_cyclic(a.rank + b.rank, orders);
}

AbelianInvariants power(const AbelianInvariants& a, std::size_t copies) {
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < copies; ++i) orders.insert(orders.end(), a.torsion.begin(), a.torsion.end());
  return AbelianInvariants::from_cyclic(a.rank * copies, orders);
}

std::string to_string(const AbelianInvariants& g) {
  std::ostringstream os;
  os << "Z^" << g.rank;
  for (const Integer& t : g.torsion) os << " + Z/" << t.get_str();
  return os.str();
}

std::int64_t mult_order(std::int64_t t, std::int64_t n) {
  if (n < 1) throw DomainError("NotAUnit", "modulus must be positive");
  if (gcd(mod(t, n), n) != 1) throw not_a_unit(t, n);
  const Residue one = mod(1, n);
  Residue acc = mod(t, n);
  std::int64_t d = 1;
  while (acc != one) {
    acc = mul_mod(acc, t, n);
    ++d;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
int cmpabs(const Integer& a, unsigned long b) { return mpz_cmpabs_ui(a.get_mpz_t(), b); }

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) mpz_swap(a(i, c).get_mpz_t(), a(j, c).get_mpz_t());
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) mpz_swap(a(r, i).get_mpz_t(), a(r, j).get_mpz_t());
}

// row_dst -= q * row_src, restricted to columns >= from
void sub_row(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q, std::size_t from = 0) {
  for (std::size_t c = from; c < a.cols(); ++c) {
    if (a(src, c) != 0) mpz_submul(a(dst, c).get_mpz_t(), q.get_mpz_t(), a(src, c).get_mpz_t());
  }
}

void sub_col(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q, std::size_t from = 0) {
  for (std::size_t r = from; r < a.rows(); ++r) {
    if (a(r, src) != 0) mpz_submul(a(r, dst).get_mpz_t(), q.get_mpz_t(), a(r, src).get_mpz_t());
  }
}

void negate_row(IntMatrix& a, std::size_t r) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = -a(r, c);
}

// Reduces a in place to Smith form; u and v (when given) accumulate the row
// and column operations so that u * a_in * v = a_out.
void smith_in_place(IntMatrix& a, IntMatrix* u, IntMatrix* v) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t diag = std::min(rows, cols);
  Integer q;

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // smallest nonzero |entry| of the trailing block
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          const Integer& x = a(i, j);
          if (x == 0) continue;
          if (pi == rows || cmpabs(x, a(pi, pj)) < 0) {
            pi = i;
            pj = j;
          }
        }
        if (pi != rows && cmpabs(a(pi, pj), 1UL) == 0) break;
      }
      if (pi == rows) return;  // trailing block is zero

      swap_rows(a, t, pi);
      if (u) swap_rows(*u, t, pi);
      swap_cols(a, t, pj);
      if (v) swap_cols(*v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0) {
          sub_row(a, i, t, q, t);
          if (u) sub_row(*u, i, t, q);
        }
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0) {
          sub_col(a, j, t, q, t);
          if (v) sub_col(*v, j, t, q);
        }
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // the pivot must divide the whole trailing block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      const Integer minus_one = -1;
      sub_row(a, t, bad, minus_one, t);
      if (u) sub_row(*u, t, bad, minus_one);
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      if (u) negate_row(*u, t);
    }
  }
}

}  // namespace

IntMatrix smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  smith_in_place(d, nullptr, nullptr);
  return d;
}

SmithDecomposition smith_decomposition(const IntMatrix& m) {
  SmithDecomposition out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  smith_in_place(out.diagonal, &out.left, &out.right);
  return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  const IntMatrix d = smith_normal_form(m);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (d(i, i) == 0) break;
    out.push_back(d(i, i));
  }
  return out;
}

std::size_t rank(const IntMatrix& m) { return invariant_factors(m).size(); }

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("ShapeMismatch", "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          swap_with = i;
          break;
        }
      }
      if (swap_with == n) return 0;
      swap_rows(a, k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer x = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = x;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Hermite normal form

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  std::size_t pivot = 0;
  Integer q;
  for (std::size_t col = 0; col < a.cols() && pivot < rows; ++col) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = pivot; i < rows; ++i) {
        if (a(i, col) != 0 && (best == rows || cmpabs(a(i, col), a(best, col)) < 0)) best = i;
      }
      if (best == rows) break;
      swap_rows(a, pivot, best);
      bool clean = true;
      for (std::size_t i = pivot + 1; i < rows; ++i) {
        if (a(i, col) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(pivot, col).get_mpz_t());
        sub_row(a, i, pivot, q);
        if (a(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(pivot, col) == 0) continue;
    if (a(pivot, col) < 0) negate_row(a, pivot);
    for (std::size_t r = 0; r < pivot; ++r) {
      mpz_fdiv_q(q.get_mpz_t(), a(r, col).get_mpz_t(), a(pivot, col).get_mpz_t());
      if (q != 0) sub_row(a, r, pivot, q);
    }
    ++pivot;
  }
  IntMatrix out(pivot, a.cols());
  for (std::size_t r = 0; r < pivot; ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  return out;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw DomainError("ShapeMismatch", "lattices live in different ambient ranks");
  return hermite_normal_form(a) == hermite_normal_form(b);
}

// ---------------------------------------------------------------------------
// Homology

AbelianInvariants homology_invariants(const IntMatrix& d_low, const IntMatrix& d_high) {
  if (d_low.cols() != d_high.rows()) {
    throw DomainError("ShapeMismatch", "boundary maps do not compose: " + std::to_string(d_low.cols()) +
                                           " columns vs " + std::to_string(d_high.rows()) + " rows");
  }
  if (!(d_low * d_high).is_zero()) throw DomainError("NotAComplex", "d_low * d_high != 0");

  const std::size_t kernel_rank = d_low.cols() - rank(d_low);
  const std::vector<Integer> factors = invariant_factors(d_high);
  // Ker(d_low) is saturated in Z^k, so the torsion of Ker/Im equals that of Z^k/Im.
  return AbelianInvariants::from_cyclic(kernel_rank - factors.size(), factors);
}

}  // namespace quandle
