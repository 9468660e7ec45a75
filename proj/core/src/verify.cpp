#include "rainbow/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>
#include <tuple>

#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/shifting.hpp"

namespace rainbow {
namespace {

constexpr std::pair<ConjectureId, std::string_view> kConjectureNames[] = {
    {ConjectureId::rainbow_general, "rainbow_general"},
    {ConjectureId::size_condition, "size_condition"},
    {ConjectureId::degree_condition, "degree_condition"},
    {ConjectureId::simple, "simple"},
    {ConjectureId::matrix, "matrix"},
};

bool admits_shifted_reduction(ConjectureId id) { return id != ConjectureId::degree_condition; }

std::uint64_t general_threshold(int n, int r, int k) {
  if (r == 2 && n >= 2 * k) return f_r2(n, k);
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::uint64_t> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({n, r, k}, 0);
  if (inserted) it->second = compute_threshold_exact(ThresholdMode::f_general, n, r, k);
  return it->second;
}

// Lower bound every single member must exceed (strictly), where one exists.
std::optional<std::uint64_t> member_size_bound(ConjectureId id, const ConjectureParams& p) {
  switch (id) {
    case ConjectureId::rainbow_general:
      return general_threshold(p.n, p.r, p.k);
    case ConjectureId::size_condition:
      return g_formula(p.n, p.r, p.k);
    case ConjectureId::degree_condition:
      return static_cast<std::uint64_t>(p.k - 1) * static_cast<std::uint64_t>(p.d);
    default:
      return std::nullopt;
  }
}

std::vector<std::size_t> sorted_sizes(const Family& f) {
  std::vector<std::size_t> sizes;
  for (const Hypergraph& h : f) sizes.push_back(h.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool prefix_sums_exceed(const std::vector<std::size_t>& ascending, std::uint64_t scale) {
  std::uint64_t sum = 0;
  for (std::size_t j = 1; j <= ascending.size(); ++j) {
    sum += ascending[j - 1];
    if (sum <= scale * j * (j - 1)) return false;
  }
  return true;
}

Hypergraph random_subset(const GroundSet& g, std::size_t size, std::mt19937_64& rng) {
  std::vector<std::size_t> cells(g.universe_size());
  std::iota(cells.begin(), cells.end(), std::size_t{0});
  for (std::size_t i = 0; i < size; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, cells.size() - 1);
    std::swap(cells[i], cells[pick(rng)]);
  }
  CellSet set(g.universe_size());
  for (std::size_t i = 0; i < size; ++i) set.set(cells[i]);
  return Hypergraph::from_cells(g, std::move(set));
}

// Edges in random order, kept while every degree stays within d.
std::optional<Hypergraph> random_bounded_degree(const GroundSet& g, std::size_t size, int d,
                                                std::mt19937_64& rng) {
  std::vector<std::size_t> cells(g.universe_size());
  std::iota(cells.begin(), cells.end(), std::size_t{0});
  std::shuffle(cells.begin(), cells.end(), rng);
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  CellSet set(g.universe_size());
  std::size_t taken = 0;
  for (std::size_t cell : cells) {
    if (taken == size) break;
    const auto verts = g.vertices_of(g.edge_at(cell));
    if (std::any_of(verts.begin(), verts.end(), [&](Vertex v) {
          return deg[static_cast<std::size_t>(g.vertex_id(v))] >= d;
        })) {
      continue;
    }
    for (Vertex v : verts) ++deg[static_cast<std::size_t>(g.vertex_id(v))];
    set.set(cell);
    ++taken;
  }
  if (taken < size) return std::nullopt;
  return Hypergraph::from_cells(g, std::move(set));
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

template <typename Task>
void run_sharded(unsigned workers, const Task& task) {
  workers = std::max(1U, workers);
  if (workers == 1) {
    task(0U, 1U);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&task, w, workers] { task(w, workers); });
}

std::vector<Hypergraph> exhaustive_candidates(ConjectureId id, const ConjectureParams& p,
                                              const GroundSet& g, VerifyMode mode) {
  std::vector<Hypergraph> out;
  const auto bound = member_size_bound(id, p);
  std::size_t min_size = bound ? static_cast<std::size_t>(*bound) + 1 : 1;
  if (id == ConjectureId::simple) min_size = static_cast<std::size_t>(p.n);

  if (mode == VerifyMode::exhaustive_shifted) {
    enumerate_shifted(g, min_size, g.universe_size(), [&](const Hypergraph& h) {
      out.push_back(h);
      return true;
    });
    return out;
  }

  const std::size_t universe = g.universe_size();
  if (universe > VerifyLimits::max_raw_universe) {
    throw PreconditionError("exhaustive raw enumeration refused: edge universe has " +
                            std::to_string(universe) + " cells, limit is " +
                            std::to_string(VerifyLimits::max_raw_universe));
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) < min_size) continue;
    CellSet set(universe, static_cast<unsigned long>(mask));
    Hypergraph h = Hypergraph::from_cells(g, std::move(set));
    if (id == ConjectureId::degree_condition && max_degree(h) > static_cast<std::size_t>(p.d)) {
      continue;
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::uint64_t multiset_count(std::uint64_t c, std::uint64_t k) {
  // C(c + k - 1, k), saturating at max_instances + 1.
  long double value = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * static_cast<long double>(c + k - i) / static_cast<long double>(i);
    if (value > static_cast<long double>(VerifyLimits::max_instances)) {
      return VerifyLimits::max_instances + 1;
    }
  }
  return static_cast<std::uint64_t>(value + 0.5L);
}

struct Found {
  std::vector<std::size_t> rank;
  Family family;
};

}  // namespace

std::string_view to_string(ConjectureId id) {
  for (const auto& [value, name] : kConjectureNames) {
    if (value == id) return name;
  }
  return "unknown";
}

std::string_view to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::exhaustive_shifted: return "exhaustive_shifted";
    case VerifyMode::exhaustive_raw: return "exhaustive_raw";
    case VerifyMode::random: return "random";
  }
  return "unknown";
}

std::optional<ConjectureId> conjecture_from_string(std::string_view name) {
  for (const auto& [value, label] : kConjectureNames) {
    if (label == name) return value;
  }
  return std::nullopt;
}

GroundSet conjecture_ground(ConjectureId id, const ConjectureParams& p) {
  if (p.n < 1 || p.k < 1 || p.r < 1) throw InputError("conjecture parameters need n, r, k >= 1");
  switch (id) {
    case ConjectureId::rainbow_general:
      if (2 * p.r > p.n) throw InputError("rainbow_general needs r <= n/2");
      return GroundSet::general(p.r, p.n);
    case ConjectureId::size_condition:
      return GroundSet::partite(p.r, p.n);
    case ConjectureId::degree_condition:
      if (p.d < 1) throw InputError("degree_condition needs d >= 1");
      [[fallthrough]];
    case ConjectureId::simple:
    case ConjectureId::matrix:
      if (p.r != 2) throw InputError(std::string(to_string(id)) + " is stated for r = 2");
      return GroundSet::partite(2, p.n);
  }
  throw InputError("unknown conjecture");
}

bool hypothesis_holds(ConjectureId id, const ConjectureParams& p, const Family& family) {
  if (!(family.ground() == conjecture_ground(id, p)) ||
      family.k() != static_cast<std::size_t>(p.k)) {
    throw InputError("family does not match the conjecture parameters");
  }
  const auto n = static_cast<std::uint64_t>(p.n);
  if (auto bound = member_size_bound(id, p)) {
    for (const Hypergraph& h : family) {
      if (h.size() <= *bound) return false;
    }
  }
  switch (id) {
    case ConjectureId::degree_condition:
      return std::all_of(family.begin(), family.end(), [&](const Hypergraph& h) {
        return max_degree(h) <= static_cast<std::size_t>(p.d);
      });
    case ConjectureId::simple: {
      const auto sizes = sorted_sizes(family);
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < (i + 1) * n) return false;
      }
      return true;
    }
    case ConjectureId::matrix:
      return p.n >= p.k && prefix_sums_exceed(sorted_sizes(family), n);
    default:
      return true;
  }
}

bool conclusion_holds(ConjectureId id, const Family& family) {
  if (id == ConjectureId::matrix) {
    return check_matrix_conjecture(degree_matrix(family)).permutation.has_value();
  }
  return rainbow_exact(family).has_value();
}

Family sample_family(ConjectureId id, const ConjectureParams& p, std::uint64_t rng_seed) {
  const GroundSet g = conjecture_ground(id, p);
  const std::size_t universe = g.universe_size();
  const auto k = static_cast<std::size_t>(p.k);
  std::mt19937_64 rng(rng_seed);

  std::size_t low = 1;
  std::size_t high = universe;
  if (auto bound = member_size_bound(id, p)) low = static_cast<std::size_t>(*bound) + 1;
  if (id == ConjectureId::simple) low = static_cast<std::size_t>(p.n);
  if (id == ConjectureId::degree_condition) {
    high = std::min(universe, static_cast<std::size_t>(p.n) * static_cast<std::size_t>(p.d));
  }
  if (low > high) {
    throw PreconditionError("hypothesis of " + std::string(to_string(id)) +
                            " cannot be met at these parameters");
  }
  std::uniform_int_distribution<std::size_t> size_dist(low, high);

  for (std::uint64_t attempt = 0; attempt < VerifyLimits::max_sample_attempts; ++attempt) {
    std::vector<Hypergraph> members;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      const std::size_t size = size_dist(rng);
      if (id == ConjectureId::degree_condition) {
        auto h = random_bounded_degree(g, size, p.d, rng);
        ok = h.has_value();
        if (ok) members.push_back(std::move(*h));
      } else {
        members.push_back(random_subset(g, size, rng));
      }
    }
    if (!ok) continue;
    Family family(g, std::move(members));
    if (!hypothesis_holds(id, p, family)) continue;
    if (admits_shifted_reduction(id)) return shifted_closure(family).family;
    return family;
  }
  throw PreconditionError("could not sample a family satisfying the hypothesis of " +
                          std::string(to_string(id)));
}

VerifyReport check_conjecture(ConjectureId id, const ConjectureParams& params, VerifyMode mode,
                              std::uint64_t budget, std::uint64_t seed, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  const GroundSet g = conjecture_ground(id, params);
  if (id == ConjectureId::matrix && static_cast<std::size_t>(params.k) > VerifyLimits::max_matrix_k) {
    throw PreconditionError("matrix conjecture checks are limited to k <= 10");
  }
  if (mode == VerifyMode::exhaustive_shifted && !admits_shifted_reduction(id)) {
    throw PreconditionError(std::string(to_string(id)) +
                            " has no shifted reduction; use exhaustive_raw or random");
  }

  VerifyReport report;
  report.id = id;
  report.params = params;
  report.mode = mode;
  report.seed = seed;

  std::mutex mutex;
  std::vector<Found> found;
  std::uint64_t checked = 0;

  if (mode == VerifyMode::random) {
    run_sharded(workers, [&](unsigned w, unsigned stride) {
      std::uint64_t local_checked = 0;
      std::vector<Found> local;
      for (std::uint64_t t = w; t < budget; t += stride) {
        Family family = sample_family(id, params, trial_seed(seed, t));
        ++local_checked;
        if (!conclusion_holds(id, family)) local.push_back({{static_cast<std::size_t>(t)}, family});
      }
      std::lock_guard lock(mutex);
      checked += local_checked;
      for (Found& f : local) found.push_back(std::move(f));
    });
  } else {
    const std::vector<Hypergraph> candidates = exhaustive_candidates(id, params, g, mode);
    const auto k = static_cast<std::size_t>(params.k);
    if (multiset_count(candidates.size(), k) > VerifyLimits::max_instances) {
      throw PreconditionError("exhaustive check refused: " + std::to_string(candidates.size()) +
                              " candidate members give more than " +
                              std::to_string(VerifyLimits::max_instances) + " families of size " +
                              std::to_string(k));
    }
    run_sharded(workers, [&](unsigned w, unsigned stride) {
      std::uint64_t local_checked = 0;
      std::vector<Found> local;
      std::vector<std::size_t> pick(k, 0);
      std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t depth,
                                                               std::size_t from) {
        if (depth == k) {
          std::vector<Hypergraph> members;
          for (std::size_t i : pick) members.push_back(candidates[i]);
          Family family(g, std::move(members));
          if (!hypothesis_holds(id, params, family)) return;
          ++local_checked;
          if (!conclusion_holds(id, family)) local.push_back({pick, std::move(family)});
          return;
        }
        for (std::size_t i = from; i < candidates.size(); ++i) {
          if (depth == 0 && i % stride != w) continue;
          pick[depth] = i;
          walk(depth + 1, i);
        }
      };
      if (!candidates.empty()) walk(0, 0);
      std::lock_guard lock(mutex);
      checked += local_checked;
      for (Found& f : local) found.push_back(std::move(f));
    });
  }

  std::sort(found.begin(), found.end(),
            [](const Found& a, const Found& b) { return a.rank < b.rank; });
  report.instances_checked = checked;
  for (Found& f : found) report.counterexamples.push_back(std::move(f.family));
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

VerifyReport random_search(ConjectureId id, const ConjectureParams& params, std::uint64_t trials,
                           std::uint64_t seed, unsigned workers) {
  return check_conjecture(id, params, VerifyMode::random, trials, seed, workers);
}

MatrixCheck check_matrix_conjecture(const DegreeMatrix& a) {
  const std::size_t k = a.k;
  if (k > VerifyLimits::max_matrix_k) {
    throw PreconditionError("matrix conjecture checks are limited to k <= 10");
  }
  if (static_cast<std::size_t>(a.n) < k) throw InputError("degree matrix needs n >= k");

  MatrixCheck out;
  std::vector<std::size_t> row_sums;
  for (const auto& row : a.entries) {
    row_sums.push_back(static_cast<std::size_t>(std::accumulate(row.begin(), row.end(), 0)));
  }
  std::sort(row_sums.begin(), row_sums.end());
  out.hypothesis = prefix_sums_exceed(row_sums, static_cast<std::uint64_t>(a.n));

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> picked(k);
  do {
    for (std::size_t i = 0; i < k; ++i) picked[i] = static_cast<std::size_t>(a.entries[i][perm[i]]);
    std::sort(picked.begin(), picked.end());
    if (!out.permutation && prefix_sums_exceed(picked, 1)) out.permutation = perm;
    if (!out.weak_permutation) {
      bool dominates = true;
      for (std::size_t j = 0; j < k; ++j) dominates = dominates && picked[j] >= j + 1;
      if (dominates) out.weak_permutation = perm;
    }
  } while (!(out.permutation && out.weak_permutation) &&
           std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<LargeNScanRow> scan_large_n(int r, int k, int n_min, int n_max, std::size_t trials,
                                        std::uint64_t seed) {
  if (k < 1 || n_min < std::max(1, k - 1) || n_max < n_min) {
    throw InputError("scan_large_n needs k >= 1 and k-1 <= n_min <= n_max");
  }
  std::vector<LargeNScanRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const GroundSet g = GroundSet::partite(r, n);
    const auto bound = static_cast<std::size_t>(g_formula(n, r, k));
    LargeNScanRow row{n, trials, 0};
    if (bound >= g.universe_size()) {
      row.trials = 0;
      rows.push_back(row);
      continue;
    }
    for (std::size_t t = 0; t < trials; ++t) {
      std::mt19937_64 rng(trial_seed(seed ^ (static_cast<std::uint64_t>(n) << 40), t));
      std::uniform_int_distribution<std::size_t> size_dist(bound + 1, g.universe_size());
      std::vector<Hypergraph> members;
      for (int i = 0; i < k; ++i) members.push_back(random_subset(g, size_dist(rng), rng));
      const Family family(g, std::move(members));
      auto m = large_n_procedure(family);
      if (m && is_rainbow_matching(family, *m)) ++row.successes;
    }
    rows.push_back(row);
  }
  return rows;
}

std::optional<int> empirical_n0(const std::vector<LargeNScanRow>& rows) {
  std::optional<int> n0;
  for (const LargeNScanRow& row : rows) {
    if (row.trials > 0 && row.successes == row.trials) {
      if (!n0) n0 = row.n;
    } else {
      n0.reset();
    }
  }
  return n0;
}

}  // namespace rainbow
