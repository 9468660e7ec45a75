#include "rainbow/extremal.hpp"

#include <algorithm>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return out;
}

std::uint64_t f_r2(int n, int k) {
  if (k < 1) throw InputError("f_r2 needs k >= 1");
  if (n < 2 * k) {
    throw InputError("f_r2 needs n >= 2k, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  const std::uint64_t small = binomial(2 * k - 1, 2);
  const std::uint64_t large = static_cast<std::uint64_t>(k - 1) * static_cast<std::uint64_t>(n - 1) -
                              binomial(k - 1, 2);
  return std::max(small, large);
}

std::uint64_t f_large_n(int n, int r, int k) {
  if (r < 1 || k < 1 || n < r) throw InputError("f_large_n needs k >= 1 and n >= r >= 1");
  return binomial(n, r) - binomial(static_cast<std::int64_t>(n) - k + 1, r);
}

std::uint64_t g_formula(int n, int r, int k) {
  if (n < 1 || r < 1 || k < 1) throw InputError("g_formula needs n, r, k >= 1");
  std::uint64_t power = 1;
  for (int i = 1; i < r; ++i) power *= static_cast<std::uint64_t>(n);
  return static_cast<std::uint64_t>(k - 1) * power;
}

Family star_family(int n, int r, int k) {
  if (k < 1) throw InputError("star_family needs k >= 1");
  if (k - 1 > n) throw InputError("star_family needs k - 1 <= n");
  const GroundSet g = GroundSet::partite(r, n);
  std::vector<Edge> edges;
  for (const Edge& e : g.universe()) {
    if (e[0] < k - 1) edges.push_back(e);
  }
  const Hypergraph star(g, std::move(edges));
  return Family(g, std::vector<Hypergraph>(static_cast<std::size_t>(k), star));
}

Family steal_family(int q, int n) {
  if (q < 3 || q >= n) throw InputError("steal_family needs 3 <= q < n");
  const GroundSet g = GroundSet::partite(2, n);
  Hypergraph first(g);
  Hypergraph rest(g);
  for (const Edge& e : g.universe()) {
    if (e[0] < q && e[1] < q) first.insert(e);
    if (e[0] < q || e[1] == 0) rest.insert(e);
  }
  std::vector<Hypergraph> members{first};
  members.insert(members.end(), static_cast<std::size_t>(q), rest);
  return Family(g, std::move(members));
}

Family r3_counterexample(int n) {
  if (n < 2) throw InputError("r3_counterexample needs n >= 2");
  const GroundSet g = GroundSet::partite(3, n);
  Hypergraph single(g, {Edge{0, 0, 0}});
  Hypergraph meeting(g);
  for (const Edge& e : g.universe()) {
    if (e[0] == 0 || e[1] == 0 || e[2] == 0) meeting.insert(e);
  }
  return Family(g, {single, meeting});
}

Hypergraph ekr_star(int n, int r) {
  if (r < 1 || 2 * r > n) throw InputError("ekr_star needs 1 <= r <= n/2");
  const GroundSet g = GroundSet::general(r, n);
  std::vector<Edge> edges;
  for (const Edge& e : g.universe()) {
    if (e[0] == 0) edges.push_back(e);
  }
  return Hypergraph(g, std::move(edges));
}

}  // namespace rainbow
