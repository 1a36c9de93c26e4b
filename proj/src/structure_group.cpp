#include "quandle/structure_group.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "quandle/errors.hpp"

namespace quandle {

// ---------------------------------------------------------------------------
// Words

Word operator+(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back({it->color, -it->exponent});
  return out;
}

Word power(Residue color, std::int64_t exponent) {
  if (exponent == 0) return {};
  return Word{{color, exponent}};
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters) {
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().color == l.color) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

std::string format_word(const Word& w) {
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += 'e';
    out += std::to_string(l.color);
    if (l.exponent != 1) {
      out += '^';
      out += std::to_string(l.exponent);
    }
  }
  return out;
}

namespace {

template <typename Int>
Int parse_int(std::string_view s, std::string_view token) {
  Int value{};
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad word token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string_view token = text.substr(i, j - i);
    i = j;

    if (token.size() < 2 || token.front() != 'e') throw ParseError("bad word token '" + std::string(token) + "'");
    const std::string_view body = token.substr(1);
    if (body.front() == '-' || body.front() == '+') throw ParseError("bad word token '" + std::string(token) + "'");
    const std::size_t caret = body.find('^');
    Letter l;
    if (caret == std::string_view::npos) {
      l.color = parse_int<Residue>(body, token);
    } else {
      l.color = parse_int<Residue>(body.substr(0, caret), token);
      l.exponent = parse_int<std::int64_t>(body.substr(caret + 1), token);
    }
    if (l.exponent == 0) throw ParseError("zero exponent in word token '" + std::string(token) + "'");
    w.letters.push_back(l);
  }
  return w;
}

void check_word(const LinearAlexanderParams& p, const Word& w) {
  for (const Letter& l : w.letters) {
    if (l.color < 0 || l.color >= p.n()) {
      throw DomainError("ColorOutOfRange",
                        "generator e" + std::to_string(l.color) + " outside 0.." + std::to_string(p.n() - 1));
    }
  }
}

// ---------------------------------------------------------------------------
// Packed elements and Z x| Z/n

std::int64_t PackedElement::degree() const {
  std::int64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

PackedElement pack_identity(const LinearAlexanderParams& p) {
  return {std::vector<std::int64_t>(static_cast<std::size_t>(p.orbit_count()), 0), 0};
}

PackedElement pack_mul(const LinearAlexanderParams& p, const PackedElement& x, const PackedElement& y) {
  if (x.v.size() != y.v.size()) throw DomainError("LengthMismatch", "packed elements of different rank");
  PackedElement out = x;
  for (std::size_t i = 0; i < y.v.size(); ++i) out.v[i] += y.v[i];
  out.a = p.reduce(p.apply_power(y.degree(), x.a) + y.a);
  return out;
}

SemidirectZ sd_mul(const LinearAlexanderParams& p, const SemidirectZ& x, const SemidirectZ& y) {
  return {x.k + y.k, p.reduce(p.apply_power(y.k, x.a) + y.a)};
}

SemidirectZ sd_inv(const LinearAlexanderParams& p, const SemidirectZ& x) {
  return {-x.k, p.reduce(-p.apply_power(-x.k, x.a))};
}

SemidirectZ sd_conj(const LinearAlexanderParams& p, const SemidirectZ& x, const SemidirectZ& by) {
  return {x.k, p.reduce(p.apply_power(by.k, x.a) + by.a - p.apply_power(x.k, by.a))};
}

PackedElement word_eval(const LinearAlexanderParams& p, const Word& w) {
  check_word(p, w);
  PackedElement acc = pack_identity(p);
  for (const Letter& l : w.letters) {
    // e_x^k packs to (k * unit_{orbit(x)}, q_k(T) x)
    acc.a = p.reduce(p.apply_power(l.exponent, acc.a) + mul_mod(p.q(l.exponent), l.color, p.n()));
    acc.v[static_cast<std::size_t>(p.orbit_of(l.color))] += l.exponent;
  }
  return acc;
}

SemidirectZ f_map(const LinearAlexanderParams& p, const Word& w) {
  const PackedElement x = word_eval(p, w);
  return {x.degree(), x.a};
}

Residue b_of(const LinearAlexanderParams& p, const std::vector<std::int64_t>& v) {
  if (static_cast<std::int64_t>(v.size()) != p.orbit_count()) {
    throw DomainError("LengthMismatch", "vector of length " + std::to_string(v.size()) + ", expected " +
                                            std::to_string(p.orbit_count()));
  }
  Residue b = 0;
  std::int64_t prefix = v[0];
  for (std::size_t r = 1; r < v.size(); ++r) {
    b = p.reduce(b + p.apply_power(prefix, mul_mod(p.q(v[r]), static_cast<std::int64_t>(r), p.n())));
    prefix += v[r];
  }
  return b;
}

Word canonical_word(const LinearAlexanderParams& p, const PackedElement& x) {
  const Residue d = p.reduce(x.a - b_of(p, x.v));
  if (d % p.orbit_count() != 0) {
    throw DomainError("NotInImage", "weight " + std::to_string(x.a) + " is not reachable with this abelianization");
  }
  Word w;
  for (std::size_t r = x.v.size(); r-- > 1;) w.letters.push_back({static_cast<Residue>(r), x.v[r]});
  w.letters.push_back({0, x.v[0] - 1});
  w.letters.push_back({d, 1});
  return free_reduce(w);
}

Residue act(const LinearAlexanderParams& p, Residue x, const Word& w) {
  const SemidirectZ f = f_map(p, w);
  return p.reduce(p.apply_power(f.k, p.reduce(x)) + p.one_minus_t(f.a));
}

std::int64_t central_power_degree(const LinearAlexanderParams& p) { return p.t_order(); }

Word section(const LinearAlexanderParams& p, std::int64_t k, Residue a) {
  Word w;
  if (k - 1 != 0) w.letters.push_back({0, k - 1});
  w.letters.push_back({p.reduce(a), 1});
  return w;
}

// ---------------------------------------------------------------------------
// Rewriting

std::string_view rule_name(RewriteRule rule) {
  switch (rule) {
    case RewriteRule::FreeReduction: return "free-reduction";
    case RewriteRule::Braiding: return "braiding";
    case RewriteRule::CentralInsertion: return "central-insertion";
    case RewriteRule::LinearRelation: return "linear-relation";
    case RewriteRule::CentralCancellation: return "central-cancellation";
  }
  return "unknown";
}

namespace {

// Word state during rewriting: central factors e_r^{front[r]} kept at the
// front, followed by the body being normalized.
class Rewriter {
 public:
  Rewriter(const LinearAlexanderParams& p, std::vector<RewriteStep>& trace)
      : p_(p), trace_(trace), front_(static_cast<std::size_t>(p.orbit_count()), 0) {}

  std::int64_t orbit(Residue x) const { return p_.orbit_of(x); }

  Word current() const {
    Word w;
    for (std::size_t r = 0; r < front_.size(); ++r)
      if (front_[r] != 0) w.letters.push_back({static_cast<Residue>(r), front_[r]});
    for (const Letter& l : body_)
      if (l.exponent != 0) w.letters.push_back(l);
    return w;
  }

  void record(RewriteRule rule, std::string detail = {}) { trace_.push_back({rule, current(), std::move(detail)}); }

  void reduce_body() {
    const Word reduced = free_reduce(Word(body_));
    if (reduced.letters != body_) {
      body_ = reduced.letters;
      record(RewriteRule::FreeReduction);
    }
  }

  // Step 1: blocks of decreasing orbit index via e_a^k e_b^j = e_b^j e_{a.e_b^j}^k.
  void sort_into_orbit_blocks() {
    for (std::size_t i = 1; i < body_.size(); ++i) {
      for (std::size_t j = i; j > 0 && orbit(body_[j - 1].color) < orbit(body_[j].color); --j) {
        const Letter left = body_[j - 1];
        const Letter right = body_[j];
        const Residue moved = p_.reduce(p_.apply_power(right.exponent, left.color) + right.color -
                                        p_.apply_power(right.exponent, right.color));
        body_[j - 1] = right;
        body_[j] = {moved, left.exponent};
        record(RewriteRule::Braiding);
      }
    }
    reduce_body();
  }

  // Step 2: e_x^eta (eta < 0) = e_r^{-xi d} e_x^{eta + xi d}, the first factor
  // being central and equal to e_r^{-xi d} for the representative r.
  void positivize(std::int64_t d) {
    for (std::size_t i = 0; i < body_.size(); ++i) {
      Letter& l = body_[i];
      if (l.exponent >= 0) continue;
      const std::int64_t xi = (-l.exponent + d - 1) / d;
      l.exponent += xi * d;
      front_[static_cast<std::size_t>(orbit(l.color))] -= xi * d;
      record(RewriteRule::CentralInsertion, "e" + std::to_string(orbit(l.color)) + "^" + std::to_string(-xi * d));
    }
    std::erase_if(body_, [](const Letter& l) { return l.exponent == 0; });
    bool has_orbit_zero = false;
    for (const Letter& l : body_) has_orbit_zero = has_orbit_zero || orbit(l.color) == 0;
    if (!has_orbit_zero) {
      // e_0^{-d} e_0^{d} = 1 keeps a trailing orbit-0 letter for the sweep
      body_.push_back({0, d});
      front_[0] -= d;
      record(RewriteRule::CentralInsertion, "e0^" + std::to_string(-d) + " e0^" + std::to_string(d));
    }
    reduce_body();
  }

  // Step 3: every letter but the last becomes its orbit representative.
  void sweep_linear_relation() {
    std::vector<Residue> singles;
    for (const Letter& l : body_)
      for (std::int64_t k = 0; k < l.exponent; ++k) singles.push_back(l.color);
    for (std::size_t i = 0; i + 1 < singles.size(); ++i) {
      const Residue r = orbit(singles[i]);
      if (singles[i] == r) continue;
      const Residue delta = p_.reduce(singles[i] - r);
      const Residue gamma = p_.solve_one_minus_t(delta);
      singles[i] = r;
      singles[i + 1] = p_.reduce(singles[i + 1] + mul_mod(p_.t(), delta, p_.n()));
      body_ = compress(singles);
      record(RewriteRule::LinearRelation, "gamma=" + std::to_string(gamma));
    }
    body_ = compress(singles);
  }

  // Step 4: merge each central factor into the block of its orbit.
  void cancel_central_factors() {
    for (std::size_t r = 0; r < front_.size(); ++r) {
      if (front_[r] == 0) continue;
      const auto rr = static_cast<std::int64_t>(r);
      std::size_t pos = 0;
      while (pos < body_.size() && orbit(body_[pos].color) > rr) ++pos;
      if (pos < body_.size() && body_[pos].color == rr) {
        body_[pos].exponent += front_[r];
        if (body_[pos].exponent == 0) body_.erase(body_.begin() + static_cast<std::ptrdiff_t>(pos));
      } else {
        body_.insert(body_.begin() + static_cast<std::ptrdiff_t>(pos), Letter{rr, front_[r]});
      }
      front_[r] = 0;
      record(RewriteRule::CentralCancellation, "e" + std::to_string(r));
    }
    reduce_body();
  }

  void set_body(std::vector<Letter> body) { body_ = std::move(body); }

 private:
  static std::vector<Letter> compress(const std::vector<Residue>& singles) {
    std::vector<Letter> out;
    for (Residue c : singles) {
      if (!out.empty() && out.back().color == c) {
        ++out.back().exponent;
      } else {
        out.push_back({c, 1});
      }
    }
    return out;
  }

  const LinearAlexanderParams& p_;
  std::vector<RewriteStep>& trace_;
  std::vector<std::int64_t> front_;
  std::vector<Letter> body_;
};

}  // namespace

RewriteResult rewrite_trace(const LinearAlexanderParams& p, const Word& w) {
  const Word target = canonical_word(p, word_eval(p, w));
  if (w == target) return {w, {}};

  RewriteResult result;
  Rewriter rw(p, result.trace);
  rw.set_body(w.letters);
  rw.reduce_body();
  rw.sort_into_orbit_blocks();
  rw.positivize(central_power_degree(p));
  rw.sweep_linear_relation();
  rw.cancel_central_factors();
  result.word = rw.current();

  if (result.word != target) {
    throw std::logic_error("rewriting of '" + format_word(w) + "' ended at '" + format_word(result.word) +
                           "', expected '" + format_word(target) + "'");
  }
  return result;
}

}  // namespace quandle
