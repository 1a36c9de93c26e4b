#include "quandle/homology.hpp"

namespace quandle {

BoundaryPair boundary_matrices(const FiniteQuandle& q) {
  const auto n = static_cast<std::int64_t>(q.size());
  BoundaryPair out;

  std::vector<std::int64_t> index2(static_cast<std::size_t>(n * n), -1);
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y)
      if (x != y) {
        index2[static_cast<std::size_t>(x * n + y)] = static_cast<std::int64_t>(out.basis2.size());
        out.basis2.push_back({x, y});
      }
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y)
      for (std::int64_t z = 0; z < n; ++z)
        if (x != y && y != z) out.basis3.push_back({x, y, z});

  out.d2 = IntMatrix(static_cast<std::size_t>(n), out.basis2.size());
  for (std::size_t col = 0; col < out.basis2.size(); ++col) {
    const auto [x, y] = out.basis2[col];
    out.d2(static_cast<std::size_t>(x), col) += 1;
    out.d2(static_cast<std::size_t>(q.op(x, y)), col) -= 1;
  }

  out.d3 = IntMatrix(out.basis2.size(), out.basis3.size());
  auto add = [&](std::int64_t a, std::int64_t b, std::size_t col, long sign) {
    const std::int64_t row = index2[static_cast<std::size_t>(a * n + b)];
    if (row >= 0) out.d3(static_cast<std::size_t>(row), col) += sign;
  };
  for (std::size_t col = 0; col < out.basis3.size(); ++col) {
    const auto [x, y, z] = out.basis3[col];
    add(x, z, col, +1);
    add(q.op(x, y), z, col, -1);
    add(x, y, col, -1);
    add(q.op(x, z), q.op(y, z), col, +1);
  }
  return out;
}

AbelianInvariants h2_brute_force(const FiniteQuandle& q) {
  const BoundaryPair b = boundary_matrices(q);
  return homology_invariants(b.d2, b.d3);
}

AbelianInvariants h2_closed_form(const LinearAlexanderParams& p) {
  const std::int64_t m = p.orbit_count();
  const std::int64_t g = gcd(m, p.n() / m);
  const auto copies = static_cast<std::size_t>(m);
  return AbelianInvariants::from_cyclic(copies * (copies - 1), std::vector<Integer>(copies, Integer(g)));
}

AbelianInvariants stabilizer_pullback(const LinearAlexanderParams& p) {
  const std::int64_t n = p.n();
  const std::int64_t m = p.orbit_count();
  // Coordinates (w_1, ..., w_{m-1}, A) in Z^m, A an integer lift of a in Z/n.
  // Congruences:  A = 0 mod n/m            (a in Ker(1-T) = (n/m)Z/n)
  //               sum i w_i - A = 0 mod m  (omega-bar(w) = p(a))
  // The lattice L they cut out is Ker([C^T | -diag(q)]) after adjoining one
  // slack coordinate per congruence; the pullback is L / <(0, ..., 0, n)>.
  const auto k = static_cast<std::size_t>(m);
  const std::size_t congruences = 2;
  const std::int64_t moduli[2] = {n / m, m};

  IntMatrix relations(congruences, k + congruences);
  relations(0, k - 1) = 1;
  for (std::size_t i = 1; i < k; ++i) relations(1, i - 1) = static_cast<long>(i);
  relations(1, k - 1) = -1;
  for (std::size_t j = 0; j < congruences; ++j) relations(j, k + j) = static_cast<long>(-moduli[j]);

  // lift of (0, ..., 0, n): slack y_j = (C x)_j / q_j
  IntMatrix lift(k + congruences, 1);
  lift(k - 1, 0) = static_cast<long>(n);
  lift(k, 0) = static_cast<long>(n / moduli[0]);
  lift(k + 1, 0) = static_cast<long>(-n / moduli[1]);

  return homology_invariants(relations, lift);
}

AbelianInvariants h2_eisermann(const LinearAlexanderParams& p) {
  return power(stabilizer_pullback(p), static_cast<std::size_t>(p.orbit_count()));
}

}  // namespace quandle
