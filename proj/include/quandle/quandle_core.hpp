#pragma once

// Finite quandles stored as operation tables: table[a][b] = a |> b, elements
// 0..n-1, row = left operand.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "quandle/modular.hpp"

namespace quandle {

using Table = std::vector<std::vector<std::int64_t>>;

/// First axiom failure found by `validate`.
struct AxiomViolation {
  enum class Axiom { Range, Idempotence, RightTranslation, SelfDistributivity };
  Axiom axiom;
  std::vector<std::int64_t> witness;  // (a), (b) or (a, b, c)

  std::string axiom_name() const;
  std::string describe() const;
};

class FiniteQuandle {
 public:
  /// Validates the axioms; throws DomainError("InvalidQuandle") on failure.
  explicit FiniteQuandle(Table table);

  std::size_t size() const noexcept { return table_.size(); }
  std::int64_t op(std::int64_t a, std::int64_t b) const { return table_[a][b]; }
  /// Inverse right translation: the unique x with x |> b = a.
  std::int64_t op_inverse(std::int64_t a, std::int64_t b) const { return inverse_[b][a]; }
  const Table& table() const noexcept { return table_; }

  friend bool operator==(const FiniteQuandle& x, const FiniteQuandle& y) { return x.table_ == y.table_; }

 private:
  Table table_;
  Table inverse_;  // inverse_[b][a] = tau_b^{-1}(a)
};

/// Linear Alexander quandle data: M = Z/n, T = multiplication by t, with
/// gcd(t, n) = 1. Derived quantities (T^{-1}, number of orbits m, order of
/// T) are cached.
class LinearAlexanderParams {
 public:
  /// Throws NotAUnit unless n >= 1 and gcd(t, n) = 1.
  LinearAlexanderParams(std::int64_t n, std::int64_t t);

  std::int64_t n() const noexcept { return n_; }
  Residue t() const noexcept { return t_; }
  Residue t_inverse() const noexcept { return t_inv_; }
  /// m = gcd(n, 1 - t), the number of orbits; im(1 - T) = m Z/n.
  std::int64_t orbit_count() const noexcept { return m_; }
  /// Multiplicative order of t modulo n.
  std::int64_t t_order() const noexcept { return order_; }

  Residue reduce(std::int64_t x) const { return mod(x, n_); }
  /// T^k x for any integer k.
  Residue apply_power(std::int64_t k, Residue x) const;
  Residue t_power(std::int64_t k) const { return apply_power(k, reduce(1)); }
  /// q_k(T) = 1 + T + ... + T^{k-1} (k >= 0), extended by q_{k+1} = q_k + T^k.
  Residue q(std::int64_t k) const;
  /// (1 - T) x.
  Residue one_minus_t(Residue x) const { return reduce(x - mul_mod(t_, x, n_)); }
  /// Some c with (1 - T) c = delta; delta must lie in m Z/n.
  Residue solve_one_minus_t(Residue delta) const;
  /// Orbit index r in 0..m-1 (the representative of x's orbit).
  std::int64_t orbit_of(Residue x) const { return mod(x, m_); }

  friend bool operator==(const LinearAlexanderParams& a, const LinearAlexanderParams& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

 private:
  std::int64_t n_;
  Residue t_;
  Residue t_inv_;
  std::int64_t m_;
  std::int64_t order_;
  Residue q_period_;  // q_{order}(T)
};

FiniteQuandle build_alexander(const LinearAlexanderParams& p);
FiniteQuandle build_takasaki(std::int64_t n);
/// Conjugation quandle g |> h = h^{-1} g h. Throws NotAGroup for an invalid table.
FiniteQuandle build_conj(const Table& group);
/// Core quandle g |> h = h g^{-1} h. Throws NotAGroup for an invalid table.
FiniteQuandle build_core(const Table& group);
FiniteQuandle build_trivial(std::size_t n);

std::variant<FiniteQuandle, AxiomViolation> validate(const Table& table);

/// Orbits of the right-translation action, each sorted, ordered by least element.
std::vector<std::vector<std::int64_t>> orbits(const FiniteQuandle& q);
bool is_connected(const FiniteQuandle& q);
std::int64_t orbit_count_linear(const LinearAlexanderParams& p);

/// Plain text: first line n, then n rows of n integers. Throws ParseError for
/// malformed input or entries outside 0..n-1 (before any axiom check).
Table parse_table(std::istream& in);
Table read_table_file(const std::string& path);
std::string format_table(const Table& table);

}  // namespace quandle
