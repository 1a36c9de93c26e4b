#pragma once

// Structure group As(X) of a linear Alexander quandle X = Al(Z/n, T).
//
// Elements are written as words in the generators e_a. The map
//   u : As(X) -> Z^m x| Z/n,  g |-> (Ab(g), omega(g))
// is injective, so PackedElement is a faithful carrier: two words are equal
// in As(X) iff they pack to the same value.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/quandle_core.hpp"

namespace quandle {

/// e_color^exponent.
struct Letter {
  Residue color = 0;
  std::int64_t exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Product of letters, left to right. Empty = identity.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> ls) : letters(ls) {}
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  bool empty() const noexcept { return letters.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

Word operator+(const Word& a, const Word& b);  // concatenation
Word inverse(const Word& w);
Word power(Residue color, std::int64_t exponent);
/// Free reduction: merges adjacent letters of equal color and drops zero
/// exponents.
Word free_reduce(const Word& w);

/// `e1 e0^-2 e3`; exponent 1 is written without `^`.
std::string format_word(const Word& w);
/// Inverse of format_word. Throws ParseError on malformed tokens or zero
/// exponents.
Word parse_word(std::string_view text);
/// Throws DomainError("ColorOutOfRange") if a color is outside 0..n-1.
void check_word(const LinearAlexanderParams& p, const Word& w);

/// (v, a) in Z^m x| Z/n; v indexed by orbit representative 0..m-1.
struct PackedElement {
  std::vector<std::int64_t> v;
  Residue a = 0;

  std::int64_t degree() const;
  friend bool operator==(const PackedElement&, const PackedElement&) = default;
};

PackedElement pack_identity(const LinearAlexanderParams& p);
/// (v, a)(w, b) = (v + w, T^{|w|} a + b).
PackedElement pack_mul(const LinearAlexanderParams& p, const PackedElement& x, const PackedElement& y);

/// Element (degree, weight) of Z x| Z/n.
struct SemidirectZ {
  std::int64_t k = 0;
  Residue a = 0;

  friend bool operator==(const SemidirectZ&, const SemidirectZ&) = default;
};

SemidirectZ sd_mul(const LinearAlexanderParams& p, const SemidirectZ& x, const SemidirectZ& y);
SemidirectZ sd_inv(const LinearAlexanderParams& p, const SemidirectZ& x);
/// by^{-1} x by.
SemidirectZ sd_conj(const LinearAlexanderParams& p, const SemidirectZ& x, const SemidirectZ& by);

PackedElement word_eval(const LinearAlexanderParams& p, const Word& w);
/// f = (epsilon, omega).
SemidirectZ f_map(const LinearAlexanderParams& p, const Word& w);

/// The weight contributed by the non-zero orbits of a canonical word:
/// sum_{r=1}^{m-1} q_{v_r}(T) T^{v_0 + ... + v_{r-1}} r.
Residue b_of(const LinearAlexanderParams& p, const std::vector<std::int64_t>& v);

/// Unique word e_{m-1}^{v_{m-1}} ... e_1^{v_1} e_0^{v_0-1} e_d,
/// d = a - b_of(v) in (1-T)Z/n, after free reduction. Throws NotInImage
/// when d is outside (1-T)Z/n.
Word canonical_word(const LinearAlexanderParams& p, const PackedElement& x);

/// Right action x . g = T^{eps(g)} x + (1 - T) omega(g).
Residue act(const LinearAlexanderParams& p, Residue x, const Word& w);

/// Smallest d >= 1 with e_x^d central for all x; equals the order of t.
std::int64_t central_power_degree(const LinearAlexanderParams& p);

/// s(k, a) = e_0^{k-1} e_a (unreduced).
Word section(const LinearAlexanderParams& p, std::int64_t k, Residue a);
inline Word section(const LinearAlexanderParams& p, const SemidirectZ& x) { return section(p, x.k, x.a); }

enum class RewriteRule {
  FreeReduction,        // merge equal neighbours, drop zero powers
  Braiding,             // e_a^k e_b^j -> e_b^j e_{a.e_b^j}^k
  CentralInsertion,     // split off a central power e_x^{-c d} = e_r^{-c d}
  LinearRelation,       // e_a e_b -> e_{a-(1-T)g} e_{b+(1-T)T g}
  CentralCancellation,  // merge a central power back into its orbit block
};

std::string_view rule_name(RewriteRule rule);

struct RewriteStep {
  RewriteRule rule;
  Word word;           // the whole word after this step
  std::string detail;  // e.g. the gamma of a linear-relation step
};

struct RewriteResult {
  Word word;
  std::vector<RewriteStep> trace;
};

/// Rewrites w into its canonical word using only group relations: sort into
/// orbit blocks by braidings, make every power positive with central powers,
/// sweep the linear relation left to right, then cancel the central powers.
RewriteResult rewrite_trace(const LinearAlexanderParams& p, const Word& w);

}  // namespace quandle
