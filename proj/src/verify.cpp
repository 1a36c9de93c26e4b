#include "quandle/verify.hpp"

#include <future>
#include <random>
#include <thread>

#include "quandle/cocycle.hpp"
#include "quandle/homology.hpp"
#include "quandle/structure_group.hpp"

namespace quandle {

void CheckTally::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    if (failures == 0) first_failure = what;
    ++failures;
  }
}

std::size_t CaseResult::checks() const {
  std::size_t s = 0;
  for (const auto& suite : suites) s += suite.checks;
  return s;
}

std::size_t CaseResult::failures() const {
  std::size_t s = 0;
  for (const auto& suite : suites) s += suite.failures;
  return s;
}

std::vector<std::int64_t> units_mod(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t t = 0; t < n; ++t)
    if (gcd(t, n) == 1) out.push_back(t);
  return out;
}

namespace {

std::string tag(std::int64_t n, std::int64_t t) { return "(n=" + std::to_string(n) + ",t=" + std::to_string(t) + ")"; }

CheckTally check_quandle(const LinearAlexanderParams& p) {
  CheckTally tally{"quandle"};
  const auto valid = validate(build_alexander(p).table());
  tally.expect(std::holds_alternative<FiniteQuandle>(valid), "axioms " + tag(p.n(), p.t()));
  const auto blocks = orbits(build_alexander(p));
  tally.expect(static_cast<std::int64_t>(blocks.size()) == orbit_count_linear(p), "orbit count");
  for (const auto& block : blocks)
    for (auto x : block) tally.expect(p.orbit_of(x) == p.orbit_of(block.front()), "orbit blocks are residues mod m");
  return tally;
}

CheckTally check_homology(const LinearAlexanderParams& p) {
  CheckTally tally{"h2-equivalence"};
  const AbelianInvariants closed = h2_closed_form(p);
  const AbelianInvariants pullback = h2_eisermann(p);
  const AbelianInvariants chain = h2_brute_force(build_alexander(p));
  tally.expect(closed == chain, "closed form " + to_string(closed) + " vs chain complex " + to_string(chain));
  tally.expect(pullback == chain, "pullback " + to_string(pullback) + " vs chain complex " + to_string(chain));
  tally.expect(chain.rank == static_cast<std::size_t>(p.orbit_count() * (p.orbit_count() - 1)), "free rank m(m-1)");
  return tally;
}

CheckTally check_central_power(const LinearAlexanderParams& p) {
  CheckTally tally{"central-power"};
  const std::int64_t d = central_power_degree(p);
  for (std::int64_t x = 0; x < p.n(); ++x) {
    const Word central = power(x, d);
    for (std::int64_t y = 0; y < p.n(); ++y) {
      tally.expect(act(p, y, central) == y, "e_x^d acts trivially");
      tally.expect(word_eval(p, central + power(y, 1)) == word_eval(p, power(y, 1) + central), "e_x^d commutes");
    }
  }
  for (std::int64_t e = 1; e < d; ++e) {
    bool moves_something = false;
    for (std::int64_t y = 0; y < p.n() && !moves_something; ++y) moves_something = act(p, y, power(0, e)) != y;
    tally.expect(moves_something, "d is minimal");
  }
  return tally;
}

CheckTally check_cocycle(const LinearAlexanderParams& p) {
  CheckTally tally{"cocycle"};
  const std::int64_t n = p.n();
  std::vector<SemidirectZ> elements;
  for (std::int64_t k = -1; k <= 1; ++k)
    for (std::int64_t a = 0; a < n; ++a) elements.push_back({k, a});

  for (const auto& al : elements)
    for (const auto& be : elements) {
      const KernelVector pab = phi(p, al, be);
      tally.expect(pab == phi(p, {al.k, p.apply_power(1, al.a)}, {be.k, p.apply_power(1, be.a)}), "T-invariance");
      tally.expect(pab == phi(p, {1, al.a}, be), "degree-1 reduction (left)");
      tally.expect(pab == phi(p, al, {1, p.apply_power(1 - be.k, be.a)}), "degree-1 reduction (right)");
      tally.expect(pab == phi(p, {be.k, p.apply_power(1 - al.k, be.a)},
                              {al.k, p.reduce(p.apply_power(be.k, al.a) + p.one_minus_t(be.a))}),
                   "braided symmetry");
      for (const auto& ga : elements) {
        const KernelVector sum =
            phi(p, be, ga) - phi(p, sd_mul(p, al, be), ga) + phi(p, al, sd_mul(p, be, ga)) - pab;
        tally.expect(sum.is_zero(), "cocycle identity");
      }
    }

  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b) {
      tally.expect(phi0(p, a, b) == phi0(p, p.apply_power(1, b), p.reduce(a + p.one_minus_t(b))), "phi0 braiding");
      tally.expect(lambda_form(p, a, b).is_zero(), "lambda vanishes");
      tally.expect(lambda_form(p, a, b) == phi0(p, p.one_minus_t(b), a), "lambda via phi0");
      for (std::int64_t g = 0; g < n; ++g) {
        const Word lhs{{a, 1}, {b, 1}};
        const Word rhs{{p.reduce(a - p.one_minus_t(g)), 1}, {p.reduce(b + p.apply_power(1, p.one_minus_t(g))), 1}};
        tally.expect(word_eval(p, lhs) == word_eval(p, rhs), "linear relation");
      }
    }
  return tally;
}

CheckTally check_kernel_generation(const LinearAlexanderParams& p) {
  CheckTally tally{"kernel-generation"};
  const auto width = static_cast<std::size_t>(p.orbit_count());
  std::vector<KernelVector> images;
  for (std::int64_t a = 0; a < p.n(); ++a)
    for (std::int64_t b = 0; b < p.n(); ++b) images.push_back(phi(p, {1, a}, {1, b}));
  tally.expect(same_lattice(as_matrix(images, width), as_matrix(kernel_lattice_basis(p), width)),
               "<im phi> equals the kernel lattice");
  return tally;
}

Word random_word(const LinearAlexanderParams& p, std::mt19937_64& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> length(0, max_length);
  std::uniform_int_distribution<std::int64_t> color(0, p.n() - 1);
  std::uniform_int_distribution<std::int64_t> exponent(-3, 3);
  Word w;
  for (std::size_t i = length(rng); i > 0; --i) {
    std::int64_t e = 0;
    while (e == 0) e = exponent(rng);
    w.letters.push_back({color(rng), e});
  }
  return w;
}

CheckTally check_normal_form(const LinearAlexanderParams& p, std::mt19937_64& rng, std::size_t count) {
  CheckTally tally{"normal-form"};
  for (std::size_t i = 0; i < count; ++i) {
    const Word w1 = random_word(p, rng, 8);
    const Word w2 = random_word(p, rng, 8);
    const PackedElement x1 = word_eval(p, w1);
    tally.expect(word_eval(p, w1 + w2) == pack_mul(p, x1, word_eval(p, w2)), "word_eval is multiplicative");
    const Word canonical = canonical_word(p, x1);
    tally.expect(word_eval(p, canonical) == x1, "canonical word round trip");
    const RewriteResult rewritten = rewrite_trace(p, w1);
    tally.expect(rewritten.word == canonical, "rewriting reaches the canonical word");
    bool steps_preserve = true;
    for (const auto& step : rewritten.trace) steps_preserve = steps_preserve && word_eval(p, step.word) == x1;
    tally.expect(steps_preserve, "rewrite steps preserve the element");
    const Residue x = static_cast<Residue>(i) % p.n();
    tally.expect(word_eval(p, power(x, 1) + w1) == word_eval(p, w1 + power(act(p, x, w1), 1)), "e_x g = g e_{x.g}");
  }
  return tally;
}

CheckTally check_weight_and_action(const LinearAlexanderParams& p) {
  CheckTally tally{"weight-action"};
  const FiniteQuandle q = build_alexander(p);
  std::vector<Letter> alphabet;
  for (std::int64_t a = 0; a < p.n(); ++a) {
    alphabet.push_back({a, 1});
    alphabet.push_back({a, -1});
  }
  for (const Letter& l1 : alphabet)
    for (const Letter& l2 : alphabet)
      for (const Letter& l3 : alphabet) {
        const Word head{l1}, tail{l2, l3};
        const SemidirectZ fh = f_map(p, head), ft = f_map(p, tail), fw = f_map(p, head + tail);
        tally.expect(fw.a == p.reduce(p.apply_power(ft.k, fh.a) + ft.a), "weight 1-cocycle law");
        for (std::int64_t x = 0; x < p.n(); ++x) {
          std::int64_t y = x;
          for (const Letter& l : {l1, l2, l3}) y = l.exponent > 0 ? q.op(y, l.color) : q.op_inverse(y, l.color);
          tally.expect(act(p, x, head + tail) == y, "action formula");
        }
      }
  return tally;
}

}  // namespace

CaseResult verify_case(const LinearAlexanderParams& p, std::uint64_t seed, std::size_t random_words) {
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(p.n()) << 32U) ^ static_cast<std::uint64_t>(p.t()));
  CaseResult result{p.n(), p.t(), {}};
  result.suites.push_back(check_quandle(p));
  result.suites.push_back(check_homology(p));
  result.suites.push_back(check_central_power(p));
  result.suites.push_back(check_cocycle(p));
  result.suites.push_back(check_kernel_generation(p));
  result.suites.push_back(check_normal_form(p, rng, random_words));
  result.suites.push_back(check_weight_and_action(p));
  return result;
}

std::vector<CaseResult> run_verification(const VerifyOptions& options) {
  std::vector<std::pair<std::int64_t, std::int64_t>> cases;
  for (std::int64_t n = 2; n <= options.n_max; ++n)
    for (std::int64_t t : units_mod(n)) cases.emplace_back(n, t);

  std::vector<CaseResult> results(cases.size());
  const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  std::size_t next = 0;
  while (next < cases.size()) {
    std::vector<std::future<void>> batch;
    for (std::size_t w = 0; w < workers && next < cases.size(); ++w, ++next) {
      batch.push_back(std::async(std::launch::async, [&, i = next] {
        results[i] = verify_case(LinearAlexanderParams(cases[i].first, cases[i].second), options.seed,
                                 options.random_words);
      }));
    }
    for (auto& f : batch) f.get();
  }
  return results;
}

}  // namespace quandle
