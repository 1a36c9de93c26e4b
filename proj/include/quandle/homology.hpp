#pragma once

// Second quandle homology H_2^Q, by three independent routes.

#include <array>
#include <cstdint>
#include <vector>

#include "quandle/integer_linalg.hpp"
#include "quandle/quandle_core.hpp"

namespace quandle {

/// Boundary maps of the normalized quandle complex in degrees 2 and 3
/// (column convention: d2 is n x |basis2|, d3 is |basis2| x |basis3|).
/// Tuples with two equal consecutive entries are identified to zero.
struct BoundaryPair {
  IntMatrix d2;
  IntMatrix d3;
  std::vector<std::array<std::int64_t, 2>> basis2;  // (x, y), x != y
  std::vector<std::array<std::int64_t, 3>> basis3;  // (x, y, z), x != y != z
};

/// d(x, y)    = (x) - (x|>y)
/// d(x, y, z) = (x, z) - (x|>y, z) - (x, y) + (x|>z, y|>z)
BoundaryPair boundary_matrices(const FiniteQuandle& q);

/// Ker d2 / Im d3 by Smith normal form. Works for any finite quandle.
AbelianInvariants h2_brute_force(const FiniteQuandle& q);

/// Z^{m(m-1)} + (Z/g)^m with g = gcd(m, n/m).
AbelianInvariants h2_closed_form(const LinearAlexanderParams& p);

/// m copies of the pullback Z^{m-1} x_{Z/m} Ker(1-T), each evaluated by
/// Smith normal form on its defining congruences.
AbelianInvariants h2_eisermann(const LinearAlexanderParams& p);

/// One factor of h2_eisermann.
AbelianInvariants stabilizer_pullback(const LinearAlexanderParams& p);

}  // namespace quandle
