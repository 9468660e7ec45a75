#include "rainbow/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

class MatchingSearch {
 public:
  MatchingSearch(const Hypergraph& h, std::size_t target) : g_(h.ground()), target_(target) {
    if (!g_.has_vertex_masks()) {
      throw InputError("exact matching search supports at most 64 vertices");
    }
    incident_.resize(static_cast<std::size_t>(g_.n()));
    for (auto cell = h.cells().find_first(); cell != CellSet::npos;
         cell = h.cells().find_next(cell)) {
      const Edge& e = g_.edge_at(cell);
      // e[0] is the side-0 vertex (partite) or the least vertex (general).
      incident_[static_cast<std::size_t>(e[0])].push_back(g_.vertex_mask(cell));
    }
    const std::uint64_t full =
        g_.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g_.n()) - 1;
    for (int s = 0; s < g_.side_count(); ++s) side_masks_.push_back(full << (s * g_.n()));
    absolute_bound_ = std::min<std::size_t>(h.size(), upper_bound(0));
  }

  std::size_t run() {
    search(0, 0);
    return best_;
  }

 private:
  std::size_t upper_bound(std::uint64_t blocked) const {
    if (g_.is_partite()) {
      std::size_t bound = static_cast<std::size_t>(g_.n());
      for (std::uint64_t side : side_masks_) {
        bound = std::min<std::size_t>(bound, static_cast<std::size_t>(std::popcount(side & ~blocked)));
      }
      return bound;
    }
    return static_cast<std::size_t>(std::popcount(side_masks_[0] & ~blocked)) /
           static_cast<std::size_t>(g_.r());
  }

  bool done() const { return best_ >= target_ || best_ >= absolute_bound_; }

  // `blocked` holds covered vertices plus side-0 vertices decided unmatched.
  void search(std::uint64_t blocked, std::size_t current) {
    best_ = std::max(best_, current);
    if (done()) return;
    if (current + upper_bound(blocked) <= best_) return;

    int v = 0;
    while (v < g_.n() && (blocked >> v & 1U)) ++v;
    if (v == g_.n()) return;

    for (std::uint64_t mask : incident_[static_cast<std::size_t>(v)]) {
      if (mask & blocked) continue;
      search(blocked | mask, current + 1);
      if (done()) return;
    }
    search(blocked | (std::uint64_t{1} << v), current);
  }

  const GroundSet& g_;
  std::size_t target_;
  std::vector<std::vector<std::uint64_t>> incident_;
  std::vector<std::uint64_t> side_masks_;
  std::size_t absolute_bound_ = 0;
  std::size_t best_ = 0;
};

class RainbowSearch {
 public:
  explicit RainbowSearch(const Family& family)
      : family_(family), order_(ascending_size_order(family)) {
    const GroundSet& g = family.ground();
    if (!g.has_vertex_masks()) {
      throw InputError("exact rainbow search supports at most 64 vertices");
    }
    masks_.resize(family.k());
    for (std::size_t pos = 0; pos < order_.size(); ++pos) {
      const Hypergraph& h = family[order_[pos]];
      for (auto cell = h.cells().find_first(); cell != CellSet::npos;
           cell = h.cells().find_next(cell)) {
        masks_[pos].push_back({g.vertex_mask(cell), cell});
      }
    }
    chosen_.resize(family.k());
  }

  std::optional<RainbowMatching> run() {
    if (!search(0, 0)) return std::nullopt;
    RainbowMatching m;
    m.choices.resize(family_.k());
    for (std::size_t pos = 0; pos < order_.size(); ++pos) {
      m.choices[order_[pos]] = family_.ground().edge_at(chosen_[pos]);
    }
    return m;
  }

 private:
  struct Candidate {
    std::uint64_t mask;
    std::size_t cell;
  };

  bool viable(std::size_t from, std::uint64_t used) const {
    for (std::size_t pos = from; pos < masks_.size(); ++pos) {
      const auto& list = masks_[pos];
      if (std::none_of(list.begin(), list.end(),
                       [&](const Candidate& c) { return (c.mask & used) == 0; })) {
        return false;
      }
    }
    return true;
  }

  bool search(std::size_t pos, std::uint64_t used) {
    if (pos == masks_.size()) return true;
    if (!viable(pos, used)) return false;
    for (const Candidate& c : masks_[pos]) {
      if (c.mask & used) continue;
      chosen_[pos] = c.cell;
      if (search(pos + 1, used | c.mask)) return true;
    }
    return false;
  }

  const Family& family_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Candidate>> masks_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::size_t nu_exact(const Hypergraph& h) {
  return MatchingSearch(h, static_cast<std::size_t>(-1)).run();
}

bool has_matching_of_size(const Hypergraph& h, std::size_t k) {
  if (k == 0) return true;
  return MatchingSearch(h, k).run() >= k;
}

std::optional<RainbowMatching> rainbow_exact(const Family& family) {
  return RainbowSearch(family).run();
}

std::vector<std::vector<Edge>> pm_decomposition(int n, int r) {
  if (n < 1 || r < 1) throw InputError("pm_decomposition needs n >= 1 and r >= 1");
  std::size_t count = 1;
  for (int i = 1; i < r; ++i) count *= static_cast<std::size_t>(n);

  std::vector<std::vector<Edge>> matchings;
  matchings.reserve(count);
  std::vector<int> offsets(static_cast<std::size_t>(r), 0);  // offsets[0] stays 0
  for (std::size_t m = 0; m < count; ++m) {
    std::size_t rest = m;
    for (int s = r - 1; s >= 1; --s) {
      offsets[static_cast<std::size_t>(s)] = static_cast<int>(rest % static_cast<std::size_t>(n));
      rest /= static_cast<std::size_t>(n);
    }
    std::vector<Edge> matching;
    matching.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      Edge e;
      e.vertices.reserve(static_cast<std::size_t>(r));
      for (int s = 0; s < r; ++s) e.vertices.push_back((i + offsets[static_cast<std::size_t>(s)]) % n);
      matching.push_back(std::move(e));
    }
    matchings.push_back(std::move(matching));
  }
  return matchings;
}

}  // namespace rainbow
