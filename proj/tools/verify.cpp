#include <chrono>
#include <functional>
#include <sstream>

#include "cli.hpp"
#include "hgkit/errors.hpp"
#include "hgkit/extremal.hpp"
#include "hgkit/generators.hpp"
#include "hgkit/kernel.hpp"
#include "hgkit/sunflower.hpp"
#include "hgkit/transversal.hpp"

namespace hgkit::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Check {
  std::string name;
  Json params;
  std::function<Outcome(Rng&, SearchBudget&)> body;
};

Outcome kernel_formula(Rng&, SearchBudget& budget) {
  Outcome o;
  int cases = 0;
  for (int r = 1; r <= 4; ++r)
    for (int k = 1; k <= r; ++k)
      for (int n = std::max(r, 2 * k - 1); n <= 14; ++n) {
        budget.charge();
        KernelParams p{n, r, k};
        ++cases;
        if (kernel_edge_count(p) != BigInt(build_kernel_system(p).size()))
          o.fail("mismatch at n=" + std::to_string(n) + " r=" + std::to_string(r) +
                 " k=" + std::to_string(k));
      }
  if (o.ok) o.detail = std::to_string(cases) + " parameter triples";
  return o;
}

Outcome uniformity(Rng& rng, SearchBudget& budget) {
  Outcome o;
  for (int i = 0; i < 1000; ++i) {
    budget.charge();
    const int r = 2 + i % 3;
    const int n = std::uniform_int_distribution<int>(r, 12)(rng);
    Hypergraph h = random_intersecting(n, r, rng);
    if (!uniformity_bound_check(h).holds) o.fail("codegree exceeds r on " + to_string(h));
  }
  if (o.ok) o.detail = "1000 random intersecting hypergraphs";
  return o;
}

Outcome greedy_bound(Rng& rng, SearchBudget& budget) {
  Outcome o;
  const std::pair<int, int> cases[] = {{2, 3}, {3, 2}, {3, 3}};
  for (auto [r, p] : cases) {
    const auto m = static_cast<std::size_t>(factorial(r) * power(p - 1, r));
    int n = r;
    while (binomial(n, r) < BigInt(m)) ++n;
    for (int i = 0; i < 300; ++i) {
      budget.charge();
      const int nn = std::uniform_int_distribution<int>(n, std::max(n, 12))(rng);
      Hypergraph h = random_hypergraph(nn, r, m, rng);
      auto s = erdos_rado_greedy(h, p);
      if (!s || s->petal_count() < static_cast<std::size_t>(p) || !is_sunflower_of(*s, h))
        o.fail("no valid sunflower in " + to_string(h));
    }
  }
  if (o.ok) o.detail = "900 hypergraphs at the Erdos-Rado size";
  return o;
}

Outcome sharpness(Rng&, SearchBudget& budget) {
  Outcome o;
  Hypergraph h = containing_set(9, 3, VertexSet{0, 1});
  for (int p = 2; p <= 4; ++p) {
    budget.charge();
    if (find_sunflower_exact(h, p, 1)) o.fail("exact finder, p=" + std::to_string(p));
    auto g = erdos_rado_greedy(h, p);
    if (g && g->core.size() <= 1) o.fail("greedy finder, p=" + std::to_string(p));
    if (extract_small_core(h, p, 1)) o.fail("small-core extraction, p=" + std::to_string(p));
  }
  if (o.ok) o.detail = "all finders return none";
  return o;
}

std::vector<Hypergraph> codegree_corpus(Rng& rng, SearchBudget& budget) {
  std::vector<Hypergraph> corpus;
  for (int r = 2; r <= 3; ++r)
    for (int k = 1; k <= r; ++k)
      for (int n = std::max(r, 2 * k - 1); n <= 9; ++n) corpus.push_back(build_kernel_system({n, r, k}));
  for (int i = 0; i < 200; ++i) {
    budget.charge();
    const int r = 2 + i % 2;
    const int n = std::uniform_int_distribution<int>(r + 1, 9)(rng);
    Hypergraph h = random_intersecting(n, r, rng);
    const int k = std::uniform_int_distribution<int>(1, r)(rng);
    Hypergraph core = codegree_core(h, k);
    if (!core.empty()) corpus.push_back(std::move(core));
  }
  return corpus;
}

Outcome large_sunflower_core(Rng& rng, SearchBudget& budget) {
  Outcome o;
  auto corpus = codegree_corpus(rng, budget);
  for (const auto& h : corpus) {
    budget.charge();
    const auto k = static_cast<int>(min_positive_codegree(h));
    if (k >= 1 && find_sunflower_exact(h, h.r() + 1, k - 1))
      o.fail("sunflower with r+1 petals and small core in " + to_string(h));
  }
  if (o.ok) o.detail = std::to_string(corpus.size()) + " hypergraphs";
  return o;
}

Outcome tau_bound(Rng&, SearchBudget& budget) {
  Outcome o;
  std::vector<Hypergraph> corpus;
  for (int n = 3; n <= 7; ++n) {
    MaximalFamilyOptions opts;
    enumerate_maximal_intersecting(n, 3, [&](const Hypergraph& h) { corpus.push_back(h); }, opts,
                                   budget);
  }
  for (int n = 3; n <= 10; ++n)
    for (int k = 1; k <= 3 && 2 * k - 1 <= n; ++k) corpus.push_back(build_kernel_system({n, 3, k}));
  for (int n = 3; n <= 10; ++n) corpus.push_back(star(n, 3));
  for (const auto& h : corpus) {
    budget.charge();
    if (!check_tau_bound(h)) o.fail("bound violated on " + to_string(h));
    const int t = tau(h);
    CoveringFamily f = covering_family(h, t);
    if (BigInt(f.members.size()) > power(h.r(), t) || !covers(f, h))
      o.fail("covering family invalid on " + to_string(h));
  }
  if (o.ok) o.detail = std::to_string(corpus.size()) + " hypergraphs";
  return o;
}

Outcome cross_pairs(Rng&, SearchBudget& budget) {
  Outcome o;
  std::ostringstream detail;
  const std::pair<int, int> cases[] = {{6, 1}, {6, 2}, {7, 2}};
  for (auto [N, a] : cases) {
    CrossPairReport rep = max_cross_pair(N, a, budget);
    detail << "(" << N << "," << a << ")=" << rep.max_value << " ";
    if (rep.max_value != rep.bound || BigInt(rep.bound) != binomial(N, a))
      o.fail("value mismatch at N=" + std::to_string(N) + " a=" + std::to_string(a));
    if (!rep.all_optimizers_match_equality_cases)
      o.fail("unexpected optimizer at N=" + std::to_string(N) + " a=" + std::to_string(a));
  }
  if (o.ok) o.detail = detail.str();
  return o;
}

struct SmallCase {
  int n, r, k;
};

constexpr SmallCase kKernelCases[] = {{7, 3, 2}, {6, 3, 3}, {7, 3, 3}};

std::string case_tag(const SmallCase& c) {
  return "(" + std::to_string(c.n) + "," + std::to_string(c.r) + "," + std::to_string(c.k) + ")";
}

Outcome star_cases(Rng&, SearchBudget& budget) {
  Outcome o;
  std::ostringstream detail;
  for (int n = 6; n <= 8; ++n) {
    SearchOptions opts;
    opts.iso = true;
    opts.budget = budget;
    SearchReport rep = max_intersecting_with_codegree(n, 3, 1, opts);
    detail << "n=" << n << ":" << rep.max_edges << " ";
    if (BigInt(rep.max_edges) != binomial(n - 1, 2))
      o.fail("maximum differs from C(n-1,2) at n=" + std::to_string(n));
  }
  if (o.ok) o.detail = detail.str();
  return o;
}

Outcome kernel_cases(Rng&, SearchBudget& budget, bool tau_only) {
  Outcome o;
  std::ostringstream detail;
  for (const auto& c : kKernelCases) {
    SearchOptions opts;
    opts.iso = true;
    opts.budget = budget;
    SearchReport rep = max_intersecting_with_codegree(c.n, c.r, c.k, opts);
    const std::string tag = case_tag(c);
    if (tau_only) {
      if (!rep.matches_kernel) continue;
      if (!check_tau_equals_k(c.n, c.r, c.k, rep.optimizer)) o.fail("tau differs from k at " + tag);
      detail << tag << " ";
      continue;
    }
    detail << tag << "=" << rep.max_edges << (rep.matches_kernel ? "(kernel) " : " ");
    if (!rep.kernel_count || BigInt(rep.max_edges) < *rep.kernel_count)
      o.fail("below the kernel count at " + tag);
    if (rep.matches_kernel && (!rep.kernel_covered || !rep.unique_up_to_iso.value_or(false)))
      o.fail("optimizer at " + tag + " is not a unique kernel system");
  }
  if (o.ok) o.detail = detail.str();
  return o;
}

Outcome oracle_agreement(Rng&, SearchBudget& budget) {
  Outcome o;
  int cases = 0;
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k <= 3; ++k) {
      SearchOptions opts;
      opts.budget = budget;
      SearchReport rep = max_intersecting_with_codegree(n, 3, k, opts);
      NaiveResult naive = max_intersecting_naive(n, 3, k, false, budget);
      ++cases;
      if (naive.max_edges != rep.max_edges)
        o.fail("disagreement at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  if (o.ok) o.detail = std::to_string(cases) + " instances";
  return o;
}

std::vector<Check> all_checks() {
  return {
      {"kernel-formula", Json{{"r_max", 4}, {"n_max", 14}}, kernel_formula},
      {"star-maximum", Json{{"r", 3}, {"k", 1}, {"n", {6, 7, 8}}}, star_cases},
      {"kernel-small-cases", Json{{"cases", {{7, 3, 2}, {6, 3, 3}, {7, 3, 3}}}},
       [](Rng& rng, SearchBudget& b) { return kernel_cases(rng, b, false); }},
      {"uniformity-bound", Json{{"samples", 1000}, {"r", {2, 3, 4}}}, uniformity},
      {"greedy-sunflower", Json{{"cases", {{2, 3}, {3, 2}, {3, 3}}}}, greedy_bound},
      {"small-core-sharpness", Json{{"n", 9}, {"r", 3}, {"k", 1}}, sharpness},
      {"large-sunflower-core", Json{{"r", {2, 3}}}, large_sunflower_core},
      {"tau-bound", Json{{"n_max", 7}, {"r", 3}}, tau_bound},
      {"cross-intersecting", Json{{"cases", {{6, 1}, {6, 2}, {7, 2}}}}, cross_pairs},
      {"tau-equals-k", Json{{"r", 3}},
       [](Rng& rng, SearchBudget& b) { return kernel_cases(rng, b, true); }},
      {"oracle-agreement", Json{{"n_max", 6}, {"r", 3}, {"k_max", 3}}, oracle_agreement},
  };
}

}  // namespace

int VerifySummary::exit_status() const {
  bool skipped = false;
  for (const auto& c : checks) {
    if (c.status == "fail") return exit_code::input_error;
    skipped = skipped || c.status == "skipped";
  }
  return skipped ? exit_code::limit : exit_code::ok;
}

VerifySummary verify_all(std::uint64_t seed, double budget_seconds) {
  VerifySummary summary;
  summary.seed = seed;
  summary.budget_seconds = budget_seconds;
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(std::max(budget_seconds, 0.0)));

  std::uint64_t index = 0;
  for (auto& check : all_checks()) {
    CheckResult result{check.name, "skipped", check.params, "", 0};
    const auto start = Clock::now();
    if (budget_seconds > 0 && start < deadline) {
      std::seed_seq seq{seed, index};
      Rng rng(seq);
      SearchBudget budget;
      budget.with_time_limit(deadline - start);
      try {
        Outcome o = check.body(rng, budget);
        result.status = o.ok ? "pass" : "fail";
        result.detail = o.detail;
      } catch (const LimitExceeded& e) {
        result.detail = e.what();
      } catch (const std::exception& e) {
        result.status = "fail";
        result.detail = e.what();
      }
    } else {
      result.detail = "time budget exhausted";
    }
    result.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    summary.checks.push_back(std::move(result));
    ++index;
  }
  return summary;
}

}  // namespace hgkit::cli
