#pragma once

// The 2-cocycle phi of the central extension K(X) -> As(X) -> Z x| Z/n
// attached to the section s(k, a) = e_0^{k-1} e_a, for linear Alexander
// quandles. Elements of K(X) are carried by their abelianization vector.

#include <cstdint>
#include <vector>

#include "quandle/integer_linalg.hpp"
#include "quandle/structure_group.hpp"

namespace quandle {

/// Element of K(X): abelianization v with sum(v) = 0 and
/// sum(r v_r) = 0 mod m. Addition is componentwise (K(X) is central).
struct KernelVector {
  std::vector<std::int64_t> v;

  KernelVector operator+(const KernelVector& o) const;
  KernelVector operator-(const KernelVector& o) const;
  KernelVector operator-() const;
  bool is_zero() const;
  friend bool operator==(const KernelVector&, const KernelVector&) = default;
};

/// The word s(alpha) s(beta) s(alpha beta)^{-1}.
Word phi_word(const LinearAlexanderParams& p, const SemidirectZ& alpha, const SemidirectZ& beta);

KernelVector phi(const LinearAlexanderParams& p, const SemidirectZ& alpha, const SemidirectZ& beta);
KernelVector phi0(const LinearAlexanderParams& p, Residue a, Residue b);
/// phi0(y, x) - phi0(x, y).
KernelVector lambda_form(const LinearAlexanderParams& p, Residue x, Residue y);

/// Packs a kernel vector as the central element (v, 0).
PackedElement as_packed(const KernelVector& k);

/// A basis of {v in Z^m : sum v = 0, sum r v_r = 0 mod m}, the image of K(X)
/// under abelianization. Empty when m = 1.
std::vector<KernelVector> kernel_lattice_basis(const LinearAlexanderParams& p);

/// Rows = vectors; for Hermite-form lattice comparisons.
IntMatrix as_matrix(const std::vector<KernelVector>& vectors, std::size_t width);

}  // namespace quandle
