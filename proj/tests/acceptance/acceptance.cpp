#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/hall.hpp"
#include "rainbow/io.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/shifting.hpp"
#include "rainbow/solvers.hpp"
#include "rainbow/verify.hpp"
#include "test_support.hpp"

namespace {

using namespace rainbow;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::string read_fixture(const std::string& name) {
  std::ifstream file(std::string(RAINBOW_FIXTURES_DIR) + "/" + name);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::vector<Hypergraph> shifted_members(const GroundSet& g, std::size_t min_size) {
  std::vector<Hypergraph> out;
  enumerate_shifted(g, min_size, g.universe_size(), [&](const Hypergraph& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

// Calls visit on every ordered k-tuple drawn from pool.
void for_each_tuple(const std::vector<Hypergraph>& pool, std::size_t k,
                    const std::function<void(const std::vector<Hypergraph>&)>& visit) {
  std::vector<Hypergraph> pick;
  std::function<void()> rec = [&] {
    if (pick.size() == k) {
      visit(pick);
      return;
    }
    for (const Hypergraph& h : pool) {
      pick.push_back(h);
      rec();
      pick.pop_back();
    }
  };
  rec();
}

Outcome steal_replay() {
  std::vector<std::string> args{"rainbow", "trace", "--name", "steal", "--q", "3", "--n", "6"};
  std::istringstream in;
  std::ostringstream out, err;
  const int status = cli::run(args, in, out, err);
  if (status != cli::kExitNegative) return fail("trace exit status " + std::to_string(status));
  if (out.str() != read_fixture("steal_q3_n6.trace.txt")) return fail("trace differs from golden");
  const Family f = steal_family(3, 6);
  const auto m = rainbow_exact(f);
  if (!m || !testing::validates(f, *m)) return fail("rainbow_exact found no matching");
  return {true, "golden trace matched, rainbow matching exists"};
}

Outcome hall_exhaustive() {
  std::size_t families = 0;
  std::size_t failures = 0;
  for (int n = 1; n <= 3; ++n) {
    const GroundSet g = GroundSet::partite(2, n);
    const auto pool = shifted_members(g, 0);
    for (std::size_t k = 1; k <= 3; ++k) {
      for_each_tuple(pool, k, [&](const std::vector<Hypergraph>& members) {
        const Family f(g, members);
        if (!check_hall_condition(f).holds) return;
        ++families;
        const AlgoTrace t = hall_size_algorithm(f);
        if (!t.success() || !testing::validates(f, *t.matching)) ++failures;
      });
    }
  }
  if (failures) return fail(std::to_string(failures) + " failures");
  return {true, std::to_string(families) + " families, 0 failures"};
}

Outcome greedy_suite() {
  std::mt19937_64 rng(311);
  std::size_t runs = 0;
  while (runs < 1000) {
    std::uniform_int_distribution<int> n_dist(1, 8);
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> k_dist(1, std::min(n, 4));
    const auto k = static_cast<std::size_t>(k_dist(rng));
    const GroundSet g = GroundSet::partite(2, n);
    const std::size_t bound = (k - 1) * static_cast<std::size_t>(n);
    const Family f = testing::random_family(g, k, bound + 1, g.universe_size(), rng);
    const auto m = greedy_bipartite(f);
    if (!m) return fail("greedy failed on run " + std::to_string(runs));
    if (!testing::validates(f, *m)) return fail("invalid output on run " + std::to_string(runs));
    ++runs;
  }
  for (int n = 1; n <= 4; ++n) {
    for (int k = 2; k <= std::min(3, n + 1); ++k) {
      const Family star = star_family(n, 2, k);
      if (star[0].size() != static_cast<std::size_t>((k - 1) * n)) return fail("star size");
      if (rainbow_exact(star)) return fail("star family has a rainbow matching");
    }
  }
  return {true, "1000/1000 succeeded; stars at (k-1)n have none"};
}

Outcome thresholds() {
  for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 2}, {6, 3}}) {
    const auto exact = compute_threshold_exact(ThresholdMode::f_general, n, 2, k);
    if (exact != f_r2(n, k)) {
      return fail("f(" + std::to_string(n) + ",2," + std::to_string(k) + ") exact " +
                  std::to_string(exact) + " vs " + std::to_string(f_r2(n, k)));
    }
  }
  std::vector<std::tuple<int, int, int>> g_cases{{2, 3, 2}};
  for (int n = 1; n <= 3; ++n) {
    for (int r = 1; r <= 2; ++r) {
      for (int k = 1; k <= std::min(3, n); ++k) g_cases.emplace_back(n, r, k);
    }
  }
  for (auto [n, r, k] : g_cases) {
    const auto exact = compute_threshold_exact(ThresholdMode::g_partite, n, r, k);
    if (exact != g_formula(n, r, k)) {
      return fail("g(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(k) +
                  ") exact " + std::to_string(exact));
    }
  }
  return {true, "4 f values and " + std::to_string(g_cases.size()) + " g values agree"};
}

Outcome r3_suite() {
  std::mt19937_64 rng(1212);
  std::size_t runs = 0;
  while (runs < 200) {
    std::uniform_int_distribution<int> n_dist(1, 4);
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> k_dist(1, std::min(n, 3));
    const int k = k_dist(rng);
    const GroundSet g = GroundSet::partite(3, n);
    const auto bound = static_cast<std::size_t>(g_formula(n, 3, k));
    const Family f = testing::random_family(g, static_cast<std::size_t>(k), bound + 1,
                                            g.universe_size(), rng);
    if (!testing::validates(f, r3_solve(f))) return fail("invalid output on run " + std::to_string(runs));
    ++runs;
  }
  for (int n = 2; n <= 4; ++n) {
    for (int k = 2; k <= std::min(3, n); ++k) {
      const Family star = star_family(n, 3, k);
      if (star[0].size() != g_formula(n, 3, k)) return fail("sharpness family size");
      if (rainbow_exact(star)) return fail("sharpness family has a rainbow matching");
    }
  }
  return {true, "200/200 validated; sharpness families have none"};
}

Outcome pullback_suite() {
  std::mt19937_64 rng(2222);
  const std::vector<GroundSet> grounds{GroundSet::partite(2, 3), GroundSet::partite(2, 4),
                                       GroundSet::partite(3, 3), GroundSet::general(2, 6),
                                       GroundSet::general(3, 6)};
  std::size_t pulled = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const GroundSet& g = grounds[static_cast<std::size_t>(trial) % grounds.size()];
    const std::size_t k = 1 + static_cast<std::size_t>(trial % 3);
    const Family f = testing::random_family(g, k, 1, g.universe_size(), rng);
    const ShiftedFamily s = shifted_closure(f);
    const auto m = rainbow_exact(s.family);
    if (!m) continue;
    if (!testing::validates(f, pullback_rainbow(s.log, f, *m))) {
      return fail("pull-back invalid on trial " + std::to_string(trial));
    }
    ++pulled;
  }

  const GroundSet g2 = GroundSet::partite(2, 2);
  const auto all = g2.universe();
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<Edge> edges;
    for (unsigned i = 0; i < 4; ++i) {
      if (mask >> i & 1) edges.push_back(all[i]);
    }
    const Hypergraph h(g2, edges);
    for (int side = 0; side < 2; ++side) {
      if (nu_exact(shift_hypergraph(h, side, 0, 1).first) > nu_exact(h)) {
        return fail("shift raised nu on [2]^2");
      }
    }
  }
  const GroundSet g3 = GroundSet::partite(2, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const Hypergraph h = testing::random_hypergraph(g3, rng);
    std::uniform_int_distribution<int> side(0, 1), x(0, 1);
    const int sx = x(rng);
    std::uniform_int_distribution<int> y(sx + 1, 2);
    if (nu_exact(shift_hypergraph(h, side(rng), sx, y(rng)).first) > nu_exact(h)) {
      return fail("shift raised nu on [3]^2");
    }
  }
  return {true, std::to_string(pulled) + " pull-backs validated; nu monotone under shifts"};
}

Outcome meshulam_suite() {
  const GroundSet g = GroundSet::general(2, 5);
  const auto pool = shifted_members(g, 5);
  const Edge e1{0, 3};
  const Edge e2{1, 2};
  std::size_t pairs = 0;
  for (const Hypergraph& a : pool) {
    if (!a.contains(e1) || !a.contains(e2)) return fail("shifted member misses (v1,v4) or (v2,v3)");
    for (const Hypergraph& b : pool) {
      const Family f(g, {a, b});
      if (!testing::validates(f, meshulam_r2(f))) return fail("meshulam_r2 output invalid");
      ++pairs;
    }
  }
  Hypergraph star(g);
  for (int v = 1; v < 5; ++v) star.insert(Edge{0, v});
  if (star.size() != f_r2(5, 2)) return fail("star pair is not at the bound");
  if (rainbow_exact(Family(g, {star, star}))) return fail("star pair has a rainbow matching");
  return {true, std::to_string(pool.size()) + " shifted members, " + std::to_string(pairs) +
                    " pairs; star pair at 4 edges has none"};
}

Outcome simple_suite() {
  const GroundSet g = GroundSet::partite(2, 3);
  const auto first = shifted_members(g, 3);
  const auto second = shifted_members(g, 6);
  std::size_t pairs = 0;
  for (const Hypergraph& a : first) {
    for (const Hypergraph& b : second) {
      const Family f(g, {a, b});
      if (!testing::validates(f, simple_algorithm(f))) return fail("simple_algorithm output invalid");
      ++pairs;
    }
  }
  return {true, std::to_string(pairs) + " pairs validated"};
}

Outcome r3_counter() {
  for (int n = 3; n <= 4; ++n) {
    const Family f = r3_counterexample(n);
    std::size_t meeting = 0;
    for (const Edge& e : testing::all_edges(f.ground())) {
      if (e[0] == 0 || e[1] == 0 || e[2] == 0) ++meeting;
    }
    const auto cube = static_cast<std::size_t>(n * n * n);
    const auto enumerated = cube - static_cast<std::size_t>((n - 1) * (n - 1) * (n - 1));
    const auto stated = cube - static_cast<std::size_t>((n - 1) * (n - 1));
    if (f[1].size() != meeting || meeting != enumerated) return fail("|F_2| mismatch");
    if (enumerated == stated) return fail("stated count unexpectedly agrees");
    if (f[0].size() + f[1].size() <= static_cast<std::size_t>(2 * n * n)) return fail("sum too small");
    if (rainbow_exact(f)) return fail("counterexample has a rainbow matching");
  }
  return {true, "|F_2| = n^3-(n-1)^3 (19, 37), differs from n^3-(n-1)^2; no rainbow matching"};
}

Outcome degree_d1() {
  const ConjectureParams p{2, 2, 2, 1};
  const VerifyReport r = random_search(ConjectureId::degree_condition, p, 100, 1);
  const GroundSet g = GroundSet::partite(2, 2);
  const Hypergraph diag(g, {Edge{0, 0}, Edge{1, 1}});
  const Hypergraph anti(g, {Edge{0, 1}, Edge{1, 0}});
  for (const Family& f : r.counterexamples) {
    const bool disjoint_pms = (f[0] == diag && f[1] == anti) || (f[0] == anti && f[1] == diag);
    if (disjoint_pms && !testing::product_rainbow_exists(f)) {
      return {true, std::to_string(r.counterexamples.size()) + " counterexample hits in " +
                        std::to_string(r.instances_checked) + " trials"};
    }
  }
  return fail("two disjoint perfect matchings not found in 100 trials");
}

struct Criterion {
  const char* name;
  std::chrono::seconds limit;
  Outcome (*check)();
};

}  // namespace

// With an argument N, runs criterion N only.
int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  const Criterion criteria[] = {
      {"C1 steal example replay", std::chrono::seconds(1), steal_replay},
      {"C2 Hall-type condition exhaustive (n<=3, k<=3)", std::chrono::seconds(300), hall_exhaustive},
      {"C3 greedy bipartite suite and star sharpness", std::chrono::seconds(60), greedy_suite},
      {"C4 exact thresholds match formulas", std::chrono::seconds(600), thresholds},
      {"C5 r=3 solver suite and sharpness", std::chrono::seconds(120), r3_suite},
      {"C6 pull-back suite and nu monotonicity", std::chrono::seconds(120), pullback_suite},
      {"C7 Meshulam construction on K_5", std::chrono::seconds(60), meshulam_suite},
      {"C8 simple algorithm on shifted pairs in [3]^2", std::chrono::seconds(60), simple_suite},
      {"C9 r=3 counterexample counts", std::chrono::seconds(10), r3_counter},
      {"C10 degree condition fails for d=1", std::chrono::seconds(10), degree_d1},
  };
  int failed = 0;
  int ran = 0;
  for (int i = 0; i < 10; ++i) {
    if (only != 0 && only != i + 1) continue;
    const Criterion& c = criteria[i];
    ++ran;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    if (o.ok && ms > c.limit) o = fail("took " + std::to_string(ms.count()) + " ms");
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << c.name << ": " << o.detail << " ("
              << ms.count() << " ms)" << std::endl;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
