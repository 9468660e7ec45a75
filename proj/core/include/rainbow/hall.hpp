#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rainbow/hypergraph.hpp"

namespace rainbow {

struct HallCheck {
  bool holds = false;
  /// On failure: original indices (ascending) of a set I with
  /// sum |F_i| <= n |I| (|I| - 1).
  std::vector<std::size_t> violating;
};

/// sum_{i in I} |F_i| > n |I| (|I| - 1) for every nonempty I. Only the k
/// prefixes of the ascending size order need checking. Needs a partite r=2
/// family.
HallCheck check_hall_condition(const Family& family);

/// One iteration of the longest-edge algorithm. Indices are 0-based:
/// a and b are the first uncovered M and W indices, so R_t holds
/// m_0..m_{a-1} and w_0..w_{b-1}.
struct StepRecord {
  int t = 0;                   // 1-based step number
  std::size_t member = 0;      // original index of the member used at step t
  int a = 0;
  int b = 0;
  std::vector<Vertex> covered; // Z_t, ascending
  Edge edge;                   // (m_p, w_q)
  int length = 0;              // |(q - b) - (p - a)|
  Vertex tail;
  Vertex head;
  bool is_short = false;       // contained in the final R
};

struct AlgoTrace {
  int n = 0;
  std::size_t k = 0;
  /// order[t-1] is the original index of the member processed at step t.
  std::vector<std::size_t> order;
  std::vector<StepRecord> steps;
  /// Step at which no edge was available (1-based), if the run halted.
  std::optional<int> halted_at;
  /// a and b defining the final R: R_m at a halt, R_{k+1} on success.
  int final_a = 0;
  int final_b = 0;
  /// Set on success, in original member order.
  std::optional<RainbowMatching> matching;

  bool success() const { return matching.has_value(); }
};

/// The longest-edge algorithm for shifted bipartite families. Members are
/// processed in ascending size order. At step t the edge of F_t avoiding the
/// covered set Z_t with the largest length is chosen; ties prefer the edge
/// through w_b, then lexicographic order.
///
/// Throws PreconditionError unless the family is partite, r = 2 and every
/// member is shifted. Throws TheoremViolation if a chosen edge misses both
/// m_a and w_b, or if an earlier tail falls outside a later R.
AlgoTrace hall_size_algorithm(const Family& family);

}  // namespace rainbow
