#pragma once

// Residue arithmetic modulo a small modulus n (n < 2^62). Residues are kept
// in [0, n).

#include <cstdint>
#include <numeric>
#include <optional>

namespace quandle {

using Residue = std::int64_t;

inline Residue mod(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

__extension__ typedef __int128 WideInt;

inline Residue mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return mod(static_cast<std::int64_t>((static_cast<WideInt>(a) * b) % n), n);
}

/// gcd with the convention gcd(n, 0) = n.
inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

/// Floor division for a positive divisor.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Multiplicative inverse of t modulo n, if gcd(t, n) = 1.
inline std::optional<Residue> inverse_mod(std::int64_t t, std::int64_t n) {
  std::int64_t old_r = mod(t, n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1 && n != 1) return std::nullopt;
  return mod(old_s, n);
}

/// t^e mod n for e >= 0.
inline Residue pow_mod(std::int64_t t, std::uint64_t e, std::int64_t n) {
  Residue base = mod(t, n);
  Residue acc = mod(1, n);
  while (e > 0) {
    if (e & 1U) acc = mul_mod(acc, base, n);
    base = mul_mod(base, base, n);
    e >>= 1U;
  }
  return acc;
}

}  // namespace quandle
