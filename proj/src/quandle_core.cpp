#include "quandle/quandle_core.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "quandle/errors.hpp"

namespace quandle {

std::string AxiomViolation::axiom_name() const {
  switch (axiom) {
    case Axiom::Range: return "range";
    case Axiom::Idempotence: return "idempotence";
    case Axiom::RightTranslation: return "right-translation";
    case Axiom::SelfDistributivity: return "self-distributivity";
  }
  return "unknown";
}

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  os << axiom_name() << " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
  os << ')';
  return os.str();
}

namespace {

std::optional<AxiomViolation> find_violation(const Table& table) {
  using Axiom = AxiomViolation::Axiom;
  const auto n = static_cast<std::int64_t>(table.size());
  for (std::int64_t a = 0; a < n; ++a) {
    if (static_cast<std::int64_t>(table[a].size()) != n) return AxiomViolation{Axiom::Range, {a}};
    for (std::int64_t b = 0; b < n; ++b) {
      if (table[a][b] < 0 || table[a][b] >= n) return AxiomViolation{Axiom::Range, {a, b}};
    }
  }
  for (std::int64_t a = 0; a < n; ++a) {
    if (table[a][a] != a) return AxiomViolation{Axiom::Idempotence, {a}};
  }
  for (std::int64_t b = 0; b < n; ++b) {
    std::vector<bool> hit(n, false);
    for (std::int64_t a = 0; a < n; ++a) {
      if (hit[table[a][b]]) return AxiomViolation{Axiom::RightTranslation, {b}};
      hit[table[a][b]] = true;
    }
  }
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[table[a][c]][table[b][c]])
          return AxiomViolation{Axiom::SelfDistributivity, {a, b, c}};
      }
  return std::nullopt;
}

}  // namespace

FiniteQuandle::FiniteQuandle(Table table) : table_(std::move(table)) {
  if (auto v = find_violation(table_)) throw DomainError("InvalidQuandle", "not a quandle: " + v->describe());
  const std::size_t n = table_.size();
  inverse_.assign(n, std::vector<std::int64_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) inverse_[b][table_[a][b]] = static_cast<std::int64_t>(a);
}

std::variant<FiniteQuandle, AxiomViolation> validate(const Table& table) {
  if (auto v = find_violation(table)) return *v;
  return FiniteQuandle(table);
}

// ---------------------------------------------------------------------------

LinearAlexanderParams::LinearAlexanderParams(std::int64_t n, std::int64_t t) : n_(n) {
  if (n < 1) throw DomainError("NotAUnit", "modulus must be at least 1, got " + std::to_string(n));
  t_ = mod(t, n);
  auto inv = inverse_mod(t_, n);
  if (gcd(t_, n) != 1 || !inv) throw not_a_unit(t, n);
  t_inv_ = *inv;
  m_ = gcd(n, mod(1 - t_, n));
  order_ = 1;
  for (Residue acc = t_; acc != mod(1, n); acc = mul_mod(acc, t_, n)) ++order_;
  q_period_ = 0;
  for (std::int64_t i = 0; i < order_; ++i) q_period_ = mod(q_period_ + pow_mod(t_, i, n), n);
}

Residue LinearAlexanderParams::apply_power(std::int64_t k, Residue x) const {
  return mul_mod(pow_mod(t_, static_cast<std::uint64_t>(mod(k, order_)), n_), x, n_);
}

Residue LinearAlexanderParams::q(std::int64_t k) const {
  const std::int64_t periods = floor_div(k, order_);
  const std::int64_t rest = k - periods * order_;
  Residue acc = mul_mod(mod(periods, n_), q_period_, n_);
  Residue power = reduce(1);
  for (std::int64_t i = 0; i < rest; ++i) {
    acc = reduce(acc + power);
    power = mul_mod(power, t_, n_);
  }
  return acc;
}

Residue LinearAlexanderParams::solve_one_minus_t(Residue delta) const {
  delta = reduce(delta);
  if (delta % m_ != 0) {
    throw DomainError("NotInImage", std::to_string(delta) + " is not in (1-T)Z/" + std::to_string(n_));
  }
  const std::int64_t reduced_modulus = n_ / m_;
  if (reduced_modulus == 1) return 0;
  const Residue u = mod(1 - t_, n_) / m_;
  const Residue inv = *inverse_mod(u, reduced_modulus);
  return mul_mod(delta / m_, inv, reduced_modulus);
}

// ---------------------------------------------------------------------------

FiniteQuandle build_alexander(const LinearAlexanderParams& p) {
  const std::int64_t n = p.n();
  Table table(n, std::vector<std::int64_t>(n));
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      table[a][b] = p.reduce(mul_mod(p.t(), a, n) + p.one_minus_t(b));
  return FiniteQuandle(std::move(table));
}

FiniteQuandle build_takasaki(std::int64_t n) { return build_alexander(LinearAlexanderParams(n, n - 1)); }

FiniteQuandle build_trivial(std::size_t n) {
  Table table(n, std::vector<std::int64_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<std::int64_t>(a);
  return FiniteQuandle(std::move(table));
}

namespace {

struct CheckedGroup {
  const Table& mul;
  std::vector<std::int64_t> inverse;
};

CheckedGroup check_group(const Table& g) {
  const auto n = static_cast<std::int64_t>(g.size());
  auto fail = [](const std::string& why) { return DomainError("NotAGroup", "not a group table: " + why); };
  if (n == 0) throw fail("empty table");
  for (const auto& row : g) {
    if (static_cast<std::int64_t>(row.size()) != n) throw fail("table is not square");
    for (auto x : row)
      if (x < 0 || x >= n) throw fail("entry out of range");
  }
  std::int64_t identity = -1;
  for (std::int64_t e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (std::int64_t x = 0; x < n && ok; ++x) ok = g[e][x] == x && g[x][e] == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw fail("no identity element");
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        if (g[g[a][b]][c] != g[a][g[b][c]])
          throw fail("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(c) + ")");
  std::vector<std::int64_t> inverse(n, -1);
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b)
      if (g[a][b] == identity && g[b][a] == identity) inverse[a] = b;
    if (inverse[a] < 0) throw fail("element " + std::to_string(a) + " has no inverse");
  }
  return {g, std::move(inverse)};
}

}  // namespace

FiniteQuandle build_conj(const Table& group) {
  const CheckedGroup g = check_group(group);
  const std::size_t n = group.size();
  Table table(n, std::vector<std::int64_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t h = 0; h < n; ++h) table[x][h] = g.mul[g.mul[g.inverse[h]][x]][h];
  return FiniteQuandle(std::move(table));
}

FiniteQuandle build_core(const Table& group) {
  const CheckedGroup g = check_group(group);
  const std::size_t n = group.size();
  Table table(n, std::vector<std::int64_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t h = 0; h < n; ++h) table[x][h] = g.mul[g.mul[h][g.inverse[x]]][h];
  return FiniteQuandle(std::move(table));
}

// ---------------------------------------------------------------------------

std::vector<std::vector<std::int64_t>> orbits(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ra = find(a);
      const std::size_t rc = find(static_cast<std::size_t>(q.op(a, b)));
      if (ra != rc) parent[std::max(ra, rc)] = std::min(ra, rc);
    }
  }
  std::map<std::size_t, std::vector<std::int64_t>> blocks;
  for (std::size_t a = 0; a < n; ++a) blocks[find(a)].push_back(static_cast<std::int64_t>(a));
  std::vector<std::vector<std::int64_t>> out;
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  return out;
}

bool is_connected(const FiniteQuandle& q) { return orbits(q).size() == 1; }

std::int64_t orbit_count_linear(const LinearAlexanderParams& p) { return p.orbit_count(); }

// ---------------------------------------------------------------------------

Table parse_table(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 1) throw ParseError("table: first line must be a positive size");
  Table table(n, std::vector<std::int64_t>(n));
  for (long long a = 0; a < n; ++a) {
    for (long long b = 0; b < n; ++b) {
      long long x = 0;
      if (!(in >> x)) {
        throw ParseError("table: expected " + std::to_string(n * n) + " entries, input ended at row " +
                         std::to_string(a));
      }
      if (x < 0 || x >= n) {
        throw ParseError("table: entry " + std::to_string(x) + " at (" + std::to_string(a) + "," +
                         std::to_string(b) + ") outside 0.." + std::to_string(n - 1));
      }
      table[a][b] = x;
    }
  }
  std::string extra;
  if (in >> extra) throw ParseError("table: trailing data '" + extra + "'");
  return table;
}

Table read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open table file " + path);
  return parse_table(in);
}

std::string format_table(const Table& table) {
  std::ostringstream os;
  os << table.size() << '\n';
  for (const auto& row : table) {
    for (std::size_t b = 0; b < row.size(); ++b) os << (b ? " " : "") << row[b];
    os << '\n';
  }
  return os.str();
}

}  // namespace quandle
