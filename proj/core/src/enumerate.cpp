#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {
namespace {

// Immediate predecessors of each cell: one coordinate lowered by one. All of
// them precede the cell in rank order.
std::vector<std::vector<std::size_t>> cover_predecessors(const GroundSet& g) {
  std::vector<std::vector<std::size_t>> preds(g.universe_size());
  for (std::size_t cell = 0; cell < g.universe_size(); ++cell) {
    const Edge& e = g.edge_at(cell);
    for (std::size_t p = 0; p < e.size(); ++p) {
      Edge lower = e;
      --lower[p];
      if (g.is_valid(lower)) preds[cell].push_back(g.rank(lower));
    }
  }
  return preds;
}

class ShiftedEnumerator {
 public:
  ShiftedEnumerator(const GroundSet& g, std::size_t min_size, std::size_t max_size,
                    const std::function<bool(const Hypergraph&)>& visit)
      : g_(g),
        preds_(cover_predecessors(g)),
        cells_(g.universe_size()),
        min_(min_size),
        max_(max_size),
        visit_(visit) {}

  void run() { search(0, 0); }

 private:
  void search(std::size_t cell, std::size_t count) {
    if (stopped_) return;
    const std::size_t universe = cells_.size();
    if (count + (universe - cell) < min_) return;
    if (cell == universe || count == max_) {
      if (count >= min_) stopped_ = !visit_(Hypergraph::from_cells(g_, cells_));
      return;
    }
    bool closed = true;
    for (std::size_t p : preds_[cell]) closed = closed && cells_.test(p);
    if (closed) {
      cells_.set(cell);
      search(cell + 1, count + 1);
      cells_.reset(cell);
    }
    search(cell + 1, count);
  }

  const GroundSet& g_;
  std::vector<std::vector<std::size_t>> preds_;
  CellSet cells_;
  std::size_t min_;
  std::size_t max_;
  const std::function<bool(const Hypergraph&)>& visit_;
  bool stopped_ = false;
};

}  // namespace

void enumerate_shifted(const GroundSet& ground, std::size_t min_size, std::size_t max_size,
                       const std::function<bool(const Hypergraph&)>& visit) {
  if (ground.universe_size() > VerifyLimits::max_shifted_universe) {
    throw PreconditionError("exhaustive enumeration refused: edge universe has " +
                            std::to_string(ground.universe_size()) + " cells, limit is " +
                            std::to_string(VerifyLimits::max_shifted_universe));
  }
  if (min_size > max_size || min_size > ground.universe_size()) return;
  ShiftedEnumerator(ground, min_size, max_size, visit).run();
}

std::vector<Hypergraph> enumerate_shifted(const GroundSet& ground, std::size_t size) {
  std::vector<Hypergraph> out;
  enumerate_shifted(ground, size, size, [&](const Hypergraph& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

std::uint64_t compute_threshold_exact(ThresholdMode mode, int n, int r, int k) {
  if (k < 1) throw InputError("threshold needs k >= 1");
  if (mode == ThresholdMode::f_general && 2 * r > n) {
    throw InputError("f(n,r,k) is defined for r <= n/2");
  }
  const GroundSet g =
      mode == ThresholdMode::f_general ? GroundSet::general(r, n) : GroundSet::partite(r, n);
  for (std::size_t size = g.universe_size() + 1; size-- > 0;) {
    bool small_nu = false;
    enumerate_shifted(g, size, size, [&](const Hypergraph& h) {
      small_nu = !has_matching_of_size(h, static_cast<std::size_t>(k));
      return !small_nu;
    });
    if (small_nu) return size;
  }
  return 0;  // unreachable: the empty hypergraph has nu = 0 < k
}

}  // namespace rainbow
