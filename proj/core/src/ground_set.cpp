#include "rainbow/ground_set.hpp"

#include <algorithm>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

struct GroundSet::Tables {
  std::vector<Edge> universe;
  std::vector<std::int32_t> rank_by_code;  // -1 for tuples that are not edges
  std::vector<std::uint64_t> masks;        // empty when vertex_count > 64
};

namespace {

std::size_t code_space(int r, int n) {
  std::size_t space = 1;
  for (int i = 0; i < r; ++i) {
    if (space > kMaxCodeSpace / static_cast<std::size_t>(n)) {
      throw InputError("ground set too large: n^r exceeds " +
                       std::to_string(kMaxCodeSpace));
    }
    space *= static_cast<std::size_t>(n);
  }
  return space;
}

std::size_t code_of(const Edge& e, int n) {
  std::size_t code = 0;
  for (int v : e) code = code * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
  return code;
}

}  // namespace

GroundSet::GroundSet(GroundKind kind, int r, int n) : kind_(kind), r_(r), n_(n) {
  if (r < 1) throw InputError("uniformity r must be >= 1, got " + std::to_string(r));
  if (n < 1) throw InputError("side size n must be >= 1, got " + std::to_string(n));
  if (kind == GroundKind::general && r > n) {
    throw InputError("general ground set needs r <= n, got r=" + std::to_string(r) +
                     " n=" + std::to_string(n));
  }

  auto tables = std::make_shared<Tables>();
  const std::size_t space = code_space(r, n);
  tables->rank_by_code.assign(space, -1);

  std::vector<int> tuple(static_cast<std::size_t>(r), 0);
  for (std::size_t code = 0; code < space; ++code) {
    std::size_t rest = code;
    for (int i = r - 1; i >= 0; --i) {
      tuple[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(n));
      rest /= static_cast<std::size_t>(n);
    }
    if (kind == GroundKind::general &&
        std::adjacent_find(tuple.begin(), tuple.end(), std::greater_equal<>()) != tuple.end()) {
      continue;
    }
    tables->rank_by_code[code] = static_cast<std::int32_t>(tables->universe.size());
    tables->universe.emplace_back(tuple);
  }

  if (vertex_count() <= 64) {
    tables->masks.reserve(tables->universe.size());
    for (const Edge& e : tables->universe) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        const int side = kind == GroundKind::partite ? static_cast<int>(i) : 0;
        mask |= std::uint64_t{1} << (side * n + e[i]);
      }
      tables->masks.push_back(mask);
    }
  }
  tables_ = std::move(tables);
}

GroundSet GroundSet::partite(int r, int n) { return GroundSet(GroundKind::partite, r, n); }
GroundSet GroundSet::general(int r, int n) { return GroundSet(GroundKind::general, r, n); }

std::size_t GroundSet::universe_size() const { return tables_->universe.size(); }

bool GroundSet::is_valid(const Edge& e) const {
  if (e.size() != static_cast<std::size_t>(r_)) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] >= n_) return false;
    if (kind_ == GroundKind::general && i > 0 && e[i - 1] >= e[i]) return false;
  }
  return true;
}

void GroundSet::check_edge(const Edge& e) const {
  if (e.size() != static_cast<std::size_t>(r_)) {
    throw InputError("edge has " + std::to_string(e.size()) + " vertices, expected r=" +
                     std::to_string(r_));
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] >= n_) {
      throw InputError("vertex index " + std::to_string(e[i] + 1) + " out of range [1, " +
                       std::to_string(n_) + "]");
    }
    if (kind_ == GroundKind::general && i > 0 && e[i - 1] >= e[i]) {
      throw InputError("general edge vertices must be strictly increasing");
    }
  }
}

bool GroundSet::is_valid(Vertex v) const {
  return v.side >= 0 && v.side < side_count() && v.index >= 0 && v.index < n_;
}

void GroundSet::check_vertex(Vertex v) const {
  if (!is_valid(v)) {
    throw InputError("invalid vertex (side " + std::to_string(v.side) + ", index " +
                     std::to_string(v.index + 1) + ")");
  }
}

std::size_t GroundSet::rank(const Edge& e) const {
  return static_cast<std::size_t>(tables_->rank_by_code[code_of(e, n_)]);
}

const Edge& GroundSet::edge_at(std::size_t cell) const { return tables_->universe[cell]; }

const std::vector<Edge>& GroundSet::universe() const { return tables_->universe; }

std::uint64_t GroundSet::vertex_mask(std::size_t cell) const {
  if (!has_vertex_masks()) {
    throw InputError("vertex masks need at most 64 vertices, ground set has " +
                     std::to_string(vertex_count()));
  }
  return tables_->masks[cell];
}

std::uint64_t GroundSet::vertex_mask(const Edge& e) const { return vertex_mask(rank(e)); }

bool GroundSet::contains(const Edge& e, Vertex v) const {
  if (kind_ == GroundKind::partite) {
    return v.side >= 0 && static_cast<std::size_t>(v.side) < e.size() &&
           e[static_cast<std::size_t>(v.side)] == v.index;
  }
  return v.side == 0 && std::binary_search(e.begin(), e.end(), v.index);
}

std::vector<Vertex> GroundSet::vertices_of(const Edge& e) const {
  std::vector<Vertex> out;
  out.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    out.push_back({kind_ == GroundKind::partite ? static_cast<int>(i) : 0, e[i]});
  }
  return out;
}

}  // namespace rainbow
