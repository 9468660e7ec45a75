#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/hypergraph.hpp"
#include "rainbow/solvers.hpp"

namespace rainbow {

/// Scale guardrails for exhaustive modes.
struct VerifyLimits {
  /// Largest edge universe enumerated as downward-closed sets.
  static constexpr std::size_t max_shifted_universe = 28;
  /// Largest edge universe enumerated as arbitrary subsets.
  static constexpr std::size_t max_raw_universe = 16;
  /// Largest number of member tuples an exhaustive check will visit.
  static constexpr std::uint64_t max_instances = 20'000'000;
  /// Rejection-sampling attempts per random trial.
  static constexpr std::uint64_t max_sample_attempts = 100'000;
  /// Largest k for brute force over permutations.
  static constexpr std::size_t max_matrix_k = 10;
};

/// Visits every downward-closed edge set (shifted set) whose size lies in
/// [min_size, max_size], each exactly once, in lexicographic order of the
/// include/exclude decisions over the cells. The visitor returns false to
/// stop early. Throws PreconditionError beyond VerifyLimits.
void enumerate_shifted(const GroundSet& ground, std::size_t min_size, std::size_t max_size,
                       const std::function<bool(const Hypergraph&)>& visit);

/// All shifted hypergraphs with exactly `size` edges.
std::vector<Hypergraph> enumerate_shifted(const GroundSet& ground, std::size_t size);

enum class ThresholdMode { f_general, g_partite };

/// Largest m such that some hypergraph with m edges has nu < k, found by
/// scanning shifted hypergraphs from the top size down. Shifting does not
/// increase nu, so shifted sets suffice.
std::uint64_t compute_threshold_exact(ThresholdMode mode, int n, int r, int k);

enum class ConjectureId { rainbow_general, size_condition, degree_condition, simple, matrix };
enum class VerifyMode { exhaustive_shifted, exhaustive_raw, random };

std::string_view to_string(ConjectureId id);
std::string_view to_string(VerifyMode mode);
std::optional<ConjectureId> conjecture_from_string(std::string_view name);

struct ConjectureParams {
  int n = 2;
  int r = 2;
  int k = 2;
  int d = 1;  // degree bound, degree_condition only
};

struct VerifyReport {
  ConjectureId id = ConjectureId::size_condition;
  ConjectureParams params;
  VerifyMode mode = VerifyMode::random;
  std::uint64_t seed = 0;
  std::uint64_t instances_checked = 0;
  std::vector<Family> counterexamples;
  std::chrono::milliseconds elapsed{0};
};

/// Ground set the conjecture lives on for these parameters.
GroundSet conjecture_ground(ConjectureId id, const ConjectureParams& params);

/// Whether the family satisfies the conjecture's hypothesis.
bool hypothesis_holds(ConjectureId id, const ConjectureParams& params, const Family& family);

/// Whether the family satisfies the conjecture's conclusion: a rainbow
/// matching exists, or for `matrix` a permutation of the degree matrix does.
bool conclusion_holds(ConjectureId id, const Family& family);

/// Exhaustive modes visit every multiset of candidate members (the
/// hypotheses and conclusions are invariant under reordering). The shifted
/// mode is refused for degree_condition, whose hypothesis is not known to
/// survive shifting. Random mode samples `budget` hypothesis-satisfying
/// families; trial t draws from its own seed derived from (seed, t), so the
/// report does not depend on `workers`.
VerifyReport check_conjecture(ConjectureId id, const ConjectureParams& params, VerifyMode mode,
                              std::uint64_t budget, std::uint64_t seed, unsigned workers = 1);

VerifyReport random_search(ConjectureId id, const ConjectureParams& params, std::uint64_t trials,
                           std::uint64_t seed, unsigned workers = 1);

/// Random family satisfying the hypothesis, drawn from `rng_seed`. Shifted
/// when the conjecture admits the shifted reduction.
Family sample_family(ConjectureId id, const ConjectureParams& params, std::uint64_t rng_seed);

struct MatrixCheck {
  /// Sorted row sums satisfy sum_{i<=j} > j(j-1)n for every j.
  bool hypothesis = false;
  /// perm[i] = column for row i: the selected entries, sorted ascending,
  /// have every prefix sum over j entries above j(j-1).
  std::optional<std::vector<std::size_t>> permutation;
  /// Weaker form: the sorted selected entries dominate (1, 2, ..., k).
  std::optional<std::vector<std::size_t>> weak_permutation;
};

/// Brute force over permutations in lexicographic order; k <= 10.
MatrixCheck check_matrix_conjecture(const DegreeMatrix& a);

struct LargeNScanRow {
  int n = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
};

/// Runs large_n_procedure on `trials` random families with every
/// |F_i| > (k-1)n^(r-1), for each n in [n_min, n_max].
std::vector<LargeNScanRow> scan_large_n(int r, int k, int n_min, int n_max, std::size_t trials,
                                        std::uint64_t seed);

/// Smallest n from which every scanned row succeeded on all trials.
std::optional<int> empirical_n0(const std::vector<LargeNScanRow>& rows);

}  // namespace rainbow
