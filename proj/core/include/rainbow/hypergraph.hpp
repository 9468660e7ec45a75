#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rainbow/ground_set.hpp"

namespace rainbow {

/// Membership bitset indexed by cell rank.
using CellSet = boost::dynamic_bitset<>;

/// An edge set over a ground set. Membership is a dense bitset over the cell
/// universe; edges() is kept in lexicographic (= rank) order for iteration.
class Hypergraph {
 public:
  explicit Hypergraph(GroundSet ground);
  /// Throws InputError on an invalid or duplicate edge.
  Hypergraph(GroundSet ground, std::vector<Edge> edges);
  static Hypergraph from_cells(GroundSet ground, CellSet cells);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  /// False for edges that are not valid in this ground set.
  bool contains(const Edge& e) const;
  bool contains_cell(std::size_t cell) const { return cells_.test(cell); }
  const std::vector<Edge>& edges() const { return edges_; }
  const CellSet& cells() const { return cells_; }

  /// Returns false if already present. Throws InputError if invalid.
  bool insert(const Edge& e);
  /// Returns false if absent.
  bool erase(const Edge& e);

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.ground_ == b.ground_ && a.cells_ == b.cells_;
  }

 private:
  void rebuild_edges();

  GroundSet ground_;
  CellSet cells_;
  std::vector<Edge> edges_;
};

/// Number of edges of `h` containing `v`. Throws InputError for an invalid v.
std::size_t degree(const Hypergraph& h, Vertex v);

/// Largest degree over all vertices of the ground set.
std::size_t max_degree(const Hypergraph& h);

/// An ordered sequence of k >= 1 hypergraphs on one ground set.
class Family {
 public:
  /// Throws InputError if members is empty or a member's ground differs.
  Family(GroundSet ground, std::vector<Hypergraph> members);

  const GroundSet& ground() const { return ground_; }
  std::size_t k() const { return members_.size(); }
  const std::vector<Hypergraph>& members() const { return members_; }
  const Hypergraph& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  GroundSet ground_;
  std::vector<Hypergraph> members_;
};

/// choices[i] is the edge representing member i.
struct RainbowMatching {
  std::vector<Edge> choices;

  friend bool operator==(const RainbowMatching&, const RainbowMatching&) = default;
};

/// True iff the edges are pairwise vertex-disjoint. Throws InputError if an
/// edge is not valid for `ground`.
bool is_matching(const GroundSet& ground, std::span<const Edge> edges);

/// Matching property plus choices[i] in members[i] and one choice per member.
bool is_rainbow_matching(const Family& family, const RainbowMatching& m);

/// Member indices sorted ascending by size, ties by original index.
std::vector<std::size_t> ascending_size_order(const Family& family);

}  // namespace rainbow
