#include "rainbow/solvers.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/shifting.hpp"

namespace rainbow {
namespace {

void require_partite(const Family& family, int r, const char* who) {
  const GroundSet& g = family.ground();
  if (!g.is_partite() || (r > 0 && g.r() != r)) {
    throw PreconditionError(std::string(who) + " needs a partite family" +
                            (r > 0 ? " with r=" + std::to_string(r) : std::string()));
  }
}

void require_sizes_above(const Family& family, std::uint64_t bound, const char* who) {
  for (std::size_t i = 0; i < family.k(); ++i) {
    if (family[i].size() <= bound) {
      throw PreconditionError(std::string(who) + " needs every |F_i| > " + std::to_string(bound) +
                              "; |F_" + std::to_string(i + 1) +
                              "| = " + std::to_string(family[i].size()));
    }
  }
}

}  // namespace

std::optional<RainbowMatching> greedy_bipartite(const Family& family) {
  require_partite(family, 2, "greedy_bipartite");
  const int n = family.ground().n();
  const std::size_t k = family.k();

  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<int> picked(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : family[i].edges()) {
      if (!removed[static_cast<std::size_t>(e[0])]) ++deg[static_cast<std::size_t>(e[0])];
    }
    const std::size_t needed = k - i;
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (removed[static_cast<std::size_t>(v)] || deg[static_cast<std::size_t>(v)] < needed) continue;
      if (best < 0 || deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(best)]) best = v;
    }
    if (best < 0) return std::nullopt;
    picked[i] = best;
    removed[static_cast<std::size_t>(best)] = 1;
  }

  RainbowMatching m;
  m.choices.resize(k);
  std::vector<char> used_w(static_cast<std::size_t>(n), 0);
  for (std::size_t i = k; i-- > 0;) {
    const auto& edges = family[i].edges();
    auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) {
      return e[0] == picked[i] && !used_w[static_cast<std::size_t>(e[1])];
    });
    if (it == edges.end()) return std::nullopt;
    m.choices[i] = *it;
    used_w[static_cast<std::size_t>((*it)[1])] = 1;
  }
  return m;
}

RainbowMatching meshulam_r2(const Family& family) {
  const GroundSet& g = family.ground();
  if (g.is_partite() || g.r() != 2) {
    throw PreconditionError("meshulam_r2 needs a general r=2 family (subgraphs of K_n)");
  }
  const int k = static_cast<int>(family.k());
  if (g.n() < 2 * k) throw PreconditionError("meshulam_r2 needs n >= 2k");
  require_sizes_above(family, f_r2(g.n(), k), "meshulam_r2");

  const ShiftedFamily shifted = shifted_closure(family, ShiftMode::global);
  RainbowMatching m;
  for (int i = 0; i < k; ++i) {
    Edge e{i, 2 * k - 1 - i};
    if (!shifted.family[static_cast<std::size_t>(i)].contains(e)) {
      throw TheoremViolation("shifted F_" + std::to_string(i + 1) + " misses (v_" +
                             std::to_string(i + 1) + ", v_" + std::to_string(2 * k - i) + ")");
    }
    m.choices.push_back(std::move(e));
  }
  return pullback_rainbow(shifted.log, family, m);
}

RainbowMatching r3_solve(const Family& family) {
  require_partite(family, 3, "r3_solve");
  const int n = family.ground().n();
  const std::size_t k = family.k();
  require_sizes_above(family, g_formula(n, 3, static_cast<int>(k)), "r3_solve");

  const ShiftedFamily shifted = shifted_closure(family, ShiftMode::partite);
  const Family& f = shifted.family;

  std::vector<char> taken(k, 0);
  std::vector<std::size_t> member_at(k);  // member_at[j] = i_j
  for (std::size_t j = 0; j < k; ++j) {
    const Vertex v{0, static_cast<int>(j)};
    std::size_t best = k;
    std::size_t best_degree = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (taken[i]) continue;
      const std::size_t d = degree(f[i], v);
      if (best == k || d > best_degree) {
        best = i;
        best_degree = d;
      }
    }
    member_at[j] = best;
    taken[best] = 1;
  }

  const GroundSet link_ground = GroundSet::partite(2, n);
  std::vector<Hypergraph> links;
  for (std::size_t j = 0; j < k; ++j) {
    Hypergraph link(link_ground);
    for (const Edge& e : f[member_at[j]].edges()) {
      if (e[0] == static_cast<int>(j)) link.insert(Edge{e[1], e[2]});
    }
    links.push_back(std::move(link));
  }
  const Family link_family(link_ground, std::move(links));

  if (!check_hall_condition(link_family).holds) {
    throw TheoremViolation("links of the shifted 3-partite family fail the Hall-type condition");
  }
  const AlgoTrace trace = hall_size_algorithm(link_family);
  if (!trace.success()) {
    throw TheoremViolation("hall_size_algorithm halted on links at t=" +
                           std::to_string(*trace.halted_at));
  }

  RainbowMatching m;
  m.choices.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Edge& link_edge = trace.matching->choices[j];
    m.choices[member_at[j]] = Edge{static_cast<int>(j), link_edge[0], link_edge[1]};
  }
  return pullback_rainbow(shifted.log, family, m);
}

DegreeMatrix degree_matrix(const Family& family) {
  require_partite(family, 2, "degree_matrix");
  DegreeMatrix d;
  d.k = family.k();
  d.n = family.ground().n();
  d.entries.assign(d.k, std::vector<int>(static_cast<std::size_t>(d.n), 0));
  for (std::size_t i = 0; i < d.k; ++i) {
    for (const Edge& e : family[i].edges()) ++d.entries[i][static_cast<std::size_t>(e[1])];
  }
  return d;
}

std::optional<std::vector<std::size_t>> find_column_permutation(
    const std::vector<std::vector<char>>& allowed) {
  const std::size_t k = allowed.size();
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> row_of_col(k, kFree);

  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t row) {
    for (std::size_t col = 0; col < k; ++col) {
      if (!allowed[row][col] || visited[col]) continue;
      visited[col] = 1;
      if (row_of_col[col] == kFree || augment(row_of_col[col])) {
        row_of_col[col] = row;
        return true;
      }
    }
    return false;
  };

  for (std::size_t row = 0; row < k; ++row) {
    visited.assign(k, 0);
    if (!augment(row)) return std::nullopt;
  }
  return row_of_col;
}

std::vector<std::vector<char>> simple_selection_matrix(const DegreeMatrix& d) {
  const std::size_t k = d.k;
  if (static_cast<std::size_t>(d.n) < k) throw PreconditionError("selection matrix needs n >= k");
  std::vector<std::vector<char>> m(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      m[i][j] = d.entries[i][j] > static_cast<int>(k - (j + 1)) ? 1 : 0;
    }
  }
  return m;
}

RainbowMatching simple_algorithm(const Family& family) {
  require_partite(family, 2, "simple_algorithm");
  const int n = family.ground().n();
  const std::size_t k = family.k();
  if (static_cast<std::uint64_t>(n) <= binomial(static_cast<std::int64_t>(k), 2)) {
    throw PreconditionError("simple_algorithm needs n > C(k,2)");
  }
  const std::vector<std::size_t> order = ascending_size_order(family);
  for (std::size_t i = 0; i < k; ++i) {
    if (family[order[i]].size() < (i + 1) * static_cast<std::size_t>(n)) {
      throw PreconditionError("simple_algorithm needs |F_i| >= i*n in ascending order; the " +
                              std::to_string(i + 1) + "-th smallest member has " +
                              std::to_string(family[order[i]].size()) + " edges");
    }
  }

  const ShiftedFamily shifted = shifted_closure(family, ShiftMode::partite);
  std::vector<Hypergraph> relabeled;
  for (std::size_t i : order) relabeled.push_back(shifted.family[i]);
  const Family sorted(family.ground(), std::move(relabeled));

  const auto perm = find_column_permutation(simple_selection_matrix(degree_matrix(sorted)));
  if (!perm) throw TheoremViolation("no permutation pi with m[pi(j)][j] = 1");

  RainbowMatching in_sorted;
  in_sorted.choices.resize(k);
  std::vector<char> used_m(static_cast<std::size_t>(n), 0);
  for (std::size_t j = k; j-- > 0;) {
    const std::size_t row = (*perm)[j];
    const auto& edges = sorted[row].edges();
    auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) {
      return e[1] == static_cast<int>(j) && !used_m[static_cast<std::size_t>(e[0])];
    });
    if (it == edges.end()) {
      throw TheoremViolation("greedy completion found no free edge at w_" + std::to_string(j + 1));
    }
    in_sorted.choices[row] = *it;
    used_m[static_cast<std::size_t>((*it)[0])] = 1;
  }

  RainbowMatching m;
  m.choices.resize(k);
  for (std::size_t pos = 0; pos < k; ++pos) m.choices[order[pos]] = in_sorted.choices[pos];
  return pullback_rainbow(shifted.log, family, m);
}

std::optional<RainbowMatching> large_n_procedure(const Family& family) {
  require_partite(family, 0, "large_n_procedure");
  const GroundSet& g = family.ground();
  const int r = g.r();
  const std::size_t k = family.k();
  require_sizes_above(family, g_formula(g.n(), r, static_cast<int>(k)), "large_n_procedure");

  const ShiftedFamily shifted = shifted_closure(family, ShiftMode::partite);
  const Family& f = shifted.family;
  const int a_size = static_cast<int>(k) - 1;  // |A_s| on every side
  auto in_a = [a_size](int index) { return index < a_size; };

  // e_i meeting A exactly in a fresh x_i, for i < k-1 (0-based).
  std::vector<Edge> first(k - 1);
  std::vector<Vertex> anchor(k - 1);
  std::vector<char> anchor_used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    bool found = false;
    for (const Edge& e : f[i].edges()) {
      int hits = 0;
      Vertex x;
      for (int s = 0; s < r; ++s) {
        if (in_a(e[static_cast<std::size_t>(s)])) {
          ++hits;
          x = {s, e[static_cast<std::size_t>(s)]};
        }
      }
      if (hits != 1 || anchor_used[static_cast<std::size_t>(g.vertex_id(x))]) continue;
      first[i] = e;
      anchor[i] = x;
      anchor_used[static_cast<std::size_t>(g.vertex_id(x))] = 1;
      found = true;
      break;
    }
    if (!found) return std::nullopt;
  }

  // e_k avoiding every x_i, meeting A as little as possible.
  const Edge* last = nullptr;
  int last_hits = r + 1;
  for (const Edge& e : f[k - 1].edges()) {
    int hits = 0;
    bool blocked = false;
    for (int s = 0; s < r; ++s) {
      const int v = e[static_cast<std::size_t>(s)];
      if (!in_a(v)) continue;
      ++hits;
      if (anchor_used[static_cast<std::size_t>(g.vertex_id({s, v}))]) blocked = true;
    }
    if (!blocked && hits < last_hits) {
      last = &e;
      last_hits = hits;
    }
  }
  if (last == nullptr) return std::nullopt;

  // Slide each e_i into A: keep x_i, lower every other coordinate to the
  // least A-vertex on its side not used by e_k, earlier e'_j or later x_j.
  std::vector<char> busy(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int s = 0; s < r; ++s) busy[static_cast<std::size_t>(g.vertex_id({s, (*last)[static_cast<std::size_t>(s)]}))] = 1;
  for (const Vertex& x : anchor) busy[static_cast<std::size_t>(g.vertex_id(x))] = 1;

  RainbowMatching m;
  m.choices.resize(k);
  m.choices[k - 1] = *last;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    Edge slid = first[i];
    for (int s = 0; s < r; ++s) {
      if (s == anchor[i].side) continue;
      int pick = 0;
      while (pick < a_size && busy[static_cast<std::size_t>(g.vertex_id({s, pick}))]) ++pick;
      if (pick == a_size) return std::nullopt;
      slid[static_cast<std::size_t>(s)] = pick;
      busy[static_cast<std::size_t>(g.vertex_id({s, pick}))] = 1;
    }
    if (!f[i].contains(slid)) {
      throw TheoremViolation("slid edge missing from shifted F_" + std::to_string(i + 1));
    }
    m.choices[i] = std::move(slid);
  }
  return pullback_rainbow(shifted.log, family, m);
}

}  // namespace rainbow
