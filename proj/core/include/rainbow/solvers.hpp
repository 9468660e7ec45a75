#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rainbow/hall.hpp"
#include "rainbow/hypergraph.hpp"

namespace rainbow {

/// Two-pass greedy for bipartite families. The forward pass picks distinct
/// M-vertices v_i with degree at least k - i + 1 in F_i minus v_1..v_{i-1};
/// the backward pass picks e_k, ..., e_1 with e_i through v_i avoiding the
/// later edges. Guaranteed to succeed when every |F_i| > (k-1)n; returns
/// nullopt when a pass gets stuck.
std::optional<RainbowMatching> greedy_bipartite(const Family& family);

/// The r = 2 construction on K_n: after shifting, e_i = (v_i, v_{2k-i+1})
/// lies in F_i. Needs a general r=2 family, n >= 2k and every
/// |F_i| > max(C(2k-1,2), (k-1)(n-1) - C(k-1,2)).
RainbowMatching meshulam_r2(const Family& family);

/// The 3-partite solver: shift, choose v_1..v_k on side 0 by maximal degree
/// (lowest member index on ties), run hall_size_algorithm on the links and
/// lift. Needs every |F_i| > (k-1)n^2.
RainbowMatching r3_solve(const Family& family);

/// d[i][j] = degree of w_j in F_i.
struct DegreeMatrix {
  std::size_t k = 0;
  int n = 0;
  std::vector<std::vector<int>> entries;

  friend bool operator==(const DegreeMatrix&, const DegreeMatrix&) = default;
};

DegreeMatrix degree_matrix(const Family& family);

/// Perfect matching of rows to columns in a square 0/1 matrix by
/// augmenting paths: result[j] is the row assigned to column j.
std::optional<std::vector<std::size_t>> find_column_permutation(
    const std::vector<std::vector<char>>& allowed);

/// The k x k selection matrix m[i][j] = 1 iff d[i][j] > k - (j + 1).
std::vector<std::vector<char>> simple_selection_matrix(const DegreeMatrix& d);

/// Solver for families with |F_i| >= i n (ascending order) and n > C(k,2):
/// shift, find a permutation pi with m[pi(j)][j] = 1, then match w_k, ...,
/// w_1 greedily in F_{pi(j)}. Throws PreconditionError when the hypothesis
/// fails and TheoremViolation when no permutation exists under it.
RainbowMatching simple_algorithm(const Family& family);

/// The large-n procedure: shift, take A as the first k-1 vertices of every
/// side, pick e_i meeting A in exactly one fresh vertex x_i (i < k), pick e_k
/// avoiding all x_i, then slide each e_i into A. The guarantee only holds
/// for n beyond an unspecified n_0(r, k); nullopt reports a stuck step.
/// Throws PreconditionError unless every |F_i| > (k-1)n^(r-1).
std::optional<RainbowMatching> large_n_procedure(const Family& family);

}  // namespace rainbow
