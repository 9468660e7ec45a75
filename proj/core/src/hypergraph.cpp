#include "rainbow/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

Hypergraph::Hypergraph(GroundSet ground)
    : ground_(std::move(ground)), cells_(ground_.universe_size()) {}

Hypergraph::Hypergraph(GroundSet ground, std::vector<Edge> edges) : Hypergraph(std::move(ground)) {
  for (const Edge& e : edges) {
    ground_.check_edge(e);
    const std::size_t cell = ground_.rank(e);
    if (cells_.test(cell)) throw InputError("duplicate edge in hypergraph");
    cells_.set(cell);
  }
  rebuild_edges();
}

Hypergraph Hypergraph::from_cells(GroundSet ground, CellSet cells) {
  Hypergraph h(std::move(ground));
  if (cells.size() != h.cells_.size()) throw InputError("cell set size does not match ground set");
  h.cells_ = std::move(cells);
  h.rebuild_edges();
  return h;
}

void Hypergraph::rebuild_edges() {
  edges_.clear();
  edges_.reserve(cells_.count());
  for (auto cell = cells_.find_first(); cell != CellSet::npos; cell = cells_.find_next(cell)) {
    edges_.push_back(ground_.edge_at(cell));
  }
}

bool Hypergraph::contains(const Edge& e) const {
  return ground_.is_valid(e) && cells_.test(ground_.rank(e));
}

bool Hypergraph::insert(const Edge& e) {
  ground_.check_edge(e);
  const std::size_t cell = ground_.rank(e);
  if (cells_.test(cell)) return false;
  cells_.set(cell);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
  return true;
}

bool Hypergraph::erase(const Edge& e) {
  if (!contains(e)) return false;
  cells_.reset(ground_.rank(e));
  edges_.erase(std::lower_bound(edges_.begin(), edges_.end(), e));
  return true;
}

std::size_t degree(const Hypergraph& h, Vertex v) {
  h.ground().check_vertex(v);
  return static_cast<std::size_t>(std::count_if(
      h.edges().begin(), h.edges().end(), [&](const Edge& e) { return h.ground().contains(e, v); }));
}

std::size_t max_degree(const Hypergraph& h) {
  const GroundSet& g = h.ground();
  std::vector<std::size_t> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : h.edges()) {
    for (Vertex v : g.vertices_of(e)) ++deg[static_cast<std::size_t>(g.vertex_id(v))];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

Family::Family(GroundSet ground, std::vector<Hypergraph> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  if (members_.empty()) throw InputError("a family needs at least one member");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!(members_[i].ground() == ground_)) {
      throw InputError("family member " + std::to_string(i + 1) + " has a different ground set");
    }
  }
}

bool is_matching(const GroundSet& ground, std::span<const Edge> edges) {
  std::vector<char> used(static_cast<std::size_t>(ground.vertex_count()), 0);
  for (const Edge& e : edges) ground.check_edge(e);
  for (const Edge& e : edges) {
    for (Vertex v : ground.vertices_of(e)) {
      char& slot = used[static_cast<std::size_t>(ground.vertex_id(v))];
      if (slot) return false;
      slot = 1;
    }
  }
  return true;
}

bool is_rainbow_matching(const Family& family, const RainbowMatching& m) {
  if (m.choices.size() != family.k()) return false;
  for (std::size_t i = 0; i < family.k(); ++i) {
    if (!family[i].contains(m.choices[i])) return false;
  }
  return is_matching(family.ground(), m.choices);
}

std::vector<std::size_t> ascending_size_order(const Family& family) {
  std::vector<std::size_t> order(family.k());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return family[a].size() < family[b].size();
  });
  return order;
}

}  // namespace rainbow
