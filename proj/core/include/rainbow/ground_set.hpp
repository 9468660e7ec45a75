#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <vector>

namespace rainbow {

enum class GroundKind { partite, general };

/// A vertex as (side, index). General ground sets have a single side 0.
/// Indices are 0-based; serialized output uses 1-based labels.
struct Vertex {
  int side = 0;
  int index = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// One vertex index per side (partite) or a strictly increasing r-sequence
/// of vertex indices (general).
struct Edge {
  std::vector<int> vertices;

  Edge() = default;
  Edge(std::initializer_list<int> v) : vertices(v) {}
  explicit Edge(std::vector<int> v) : vertices(std::move(v)) {}

  std::size_t size() const { return vertices.size(); }
  int operator[](std::size_t i) const { return vertices[i]; }
  int& operator[](std::size_t i) { return vertices[i]; }
  auto begin() const { return vertices.begin(); }
  auto end() const { return vertices.end(); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// The vertex universe: either r sides of n linearly ordered vertices
/// ([n]^r) or n linearly ordered vertices carrying r-subsets.
///
/// Every possible edge ("cell") has a rank in [0, universe_size()); ranks
/// follow lexicographic order of the vertex tuples, which is a linear
/// extension of the coordinatewise order used by shifting. Lookup tables
/// are shared between copies.
class GroundSet {
 public:
  static GroundSet partite(int r, int n);
  static GroundSet general(int r, int n);

  GroundKind kind() const { return kind_; }
  bool is_partite() const { return kind_ == GroundKind::partite; }
  int r() const { return r_; }
  int n() const { return n_; }
  int side_count() const { return is_partite() ? r_ : 1; }
  int vertex_count() const { return side_count() * n_; }
  std::size_t universe_size() const;

  bool is_valid(const Edge& e) const;
  /// Throws InputError describing why `e` is not an edge of this ground set.
  void check_edge(const Edge& e) const;
  bool is_valid(Vertex v) const;
  void check_vertex(Vertex v) const;

  /// Requires is_valid(e).
  std::size_t rank(const Edge& e) const;
  const Edge& edge_at(std::size_t cell) const;
  const std::vector<Edge>& universe() const;

  /// Global vertex id in [0, vertex_count()).
  int vertex_id(Vertex v) const { return v.side * n_ + v.index; }
  Vertex vertex_of(int id) const { return {id / n_, id % n_}; }

  /// Bit i set iff vertex id i lies on the cell. Only available when
  /// vertex_count() <= 64.
  std::uint64_t vertex_mask(std::size_t cell) const;
  std::uint64_t vertex_mask(const Edge& e) const;
  bool has_vertex_masks() const { return vertex_count() <= 64; }

  bool contains(const Edge& e, Vertex v) const;
  std::vector<Vertex> vertices_of(const Edge& e) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.kind_ == b.kind_ && a.r_ == b.r_ && a.n_ == b.n_;
  }

 private:
  struct Tables;
  GroundSet(GroundKind kind, int r, int n);

  GroundKind kind_ = GroundKind::partite;
  int r_ = 1;
  int n_ = 1;
  std::shared_ptr<const Tables> tables_;
};

/// Largest n^r (dense code space) a ground set will build tables for.
inline constexpr std::size_t kMaxCodeSpace = std::size_t{1} << 24;

}  // namespace rainbow
