#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/hypergraph.hpp"

namespace rainbow {

enum class ShiftMode { global, partite };

/// Side value used by shifts on general (non-partite) ground sets.
inline constexpr int kGlobalSide = -1;

/// One edge changed by a shift: `from` in member `member` became `to`.
struct EdgeMove {
  std::size_t member = 0;
  Edge from;
  Edge to;

  friend bool operator==(const EdgeMove&, const EdgeMove&) = default;
};

/// s_xy applied to every member of a family (or to a single hypergraph, with
/// member 0). x < y lie on `side` (kGlobalSide for general ground sets).
struct ShiftStep {
  int side = kGlobalSide;
  int x = 0;
  int y = 0;
  std::vector<EdgeMove> moved;

  friend bool operator==(const ShiftStep&, const ShiftStep&) = default;
};

/// Effective shifts in application order. Replaying the moves forward from
/// the original family reproduces the shifted family; each step can be
/// undone from its moves alone.
struct ShiftLog {
  std::vector<ShiftStep> steps;

  friend bool operator==(const ShiftLog&, const ShiftLog&) = default;
};

ShiftMode natural_mode(const GroundSet& ground);

/// e with y replaced by x, if y is in e and x is not; otherwise nullopt.
std::optional<Edge> shift_image(const GroundSet& ground, const Edge& e, int side, int x, int y);

/// Throws InputError unless x < y are valid indices and `side` fits the
/// ground kind.
void check_shift_arguments(const GroundSet& ground, int side, int x, int y);

std::pair<Hypergraph, ShiftStep> shift_hypergraph(const Hypergraph& h, int side, int x, int y);
std::pair<Family, ShiftStep> shift_family(const Family& family, int side, int x, int y);

/// Closed downward: replacing any vertex of any edge by a smaller vertex
/// (on the same side in partite mode) stays inside h. Partite mode needs a
/// partite ground set and global mode a general one.
bool is_shifted(const Hypergraph& h, ShiftMode mode);
bool is_shifted(const Hypergraph& h);
bool is_shifted(const Family& family);

struct ShiftedFamily {
  Family family;
  ShiftLog log;
};

/// Sweeps sides ascending and pairs x < y lexicographically, shifting every
/// member at once, until a sweep changes nothing. Each effective shift
/// lowers the total vertex-index sum, so this terminates.
ShiftedFamily shifted_closure(const Family& family, ShiftMode mode);
ShiftedFamily shifted_closure(const Family& family);

/// Applies the log's moves to `original`. Throws InputError if a move does
/// not apply.
Family replay(const Family& original, const ShiftLog& log);

/// Turns a rainbow matching of replay(original, log) into one of `original`
/// by undoing the shifts last to first. Throws InputError when `m` is not a
/// rainbow matching of the shifted family.
RainbowMatching pullback_rainbow(const ShiftLog& log, const Family& original,
                                 const RainbowMatching& m);

}  // namespace rainbow
