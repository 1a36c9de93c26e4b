#include "quandle/cocycle.hpp"

#include <stdexcept>

namespace quandle {

KernelVector KernelVector::operator+(const KernelVector& o) const {
  KernelVector out = *this;
  for (std::size_t i = 0; i < v.size(); ++i) out.v[i] += o.v[i];
  return out;
}

KernelVector KernelVector::operator-(const KernelVector& o) const { return *this + (-o); }

KernelVector KernelVector::operator-() const {
  KernelVector out = *this;
  for (auto& x : out.v) x = -x;
  return out;
}

bool KernelVector::is_zero() const {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

Word phi_word(const LinearAlexanderParams& p, const SemidirectZ& alpha, const SemidirectZ& beta) {
  return section(p, alpha) + section(p, beta) + inverse(section(p, sd_mul(p, alpha, beta)));
}

KernelVector phi(const LinearAlexanderParams& p, const SemidirectZ& alpha, const SemidirectZ& beta) {
  const PackedElement x = word_eval(p, phi_word(p, alpha, beta));
  if (x.degree() != 0 || x.a != 0) throw std::logic_error("phi left the kernel of f");
  return {x.v};
}

KernelVector phi0(const LinearAlexanderParams& p, Residue a, Residue b) {
  return phi(p, {0, p.reduce(a)}, {0, p.reduce(b)});
}

KernelVector lambda_form(const LinearAlexanderParams& p, Residue x, Residue y) {
  return phi0(p, y, x) - phi0(p, x, y);
}

PackedElement as_packed(const KernelVector& k) { return {k.v, 0}; }

std::vector<KernelVector> kernel_lattice_basis(const LinearAlexanderParams& p) {
  const std::int64_t m = p.orbit_count();
  std::vector<KernelVector> basis;
  if (m == 1) return basis;
  const auto width = static_cast<std::size_t>(m);
  // m (e_1 - e_0), then e_r - e_0 - r (e_1 - e_0) for r >= 2
  KernelVector first{std::vector<std::int64_t>(width, 0)};
  first.v[0] = -m;
  first.v[1] = m;
  basis.push_back(first);
  for (std::int64_t r = 2; r < m; ++r) {
    KernelVector b{std::vector<std::int64_t>(width, 0)};
    b.v[0] = r - 1;
    b.v[1] = -r;
    b.v[static_cast<std::size_t>(r)] = 1;
    basis.push_back(b);
  }
  return basis;
}

IntMatrix as_matrix(const std::vector<KernelVector>& vectors, std::size_t width) {
  IntMatrix out(vectors.size(), width);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) out(i, j) = static_cast<long>(vectors[i].v.at(j));
  return out;
}

}  // namespace quandle
