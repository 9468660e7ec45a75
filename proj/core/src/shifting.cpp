#include "rainbow/shifting.hpp"

#include <algorithm>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

Vertex shift_vertex(const GroundSet& g, int side, int index) {
  return {g.is_partite() ? side : 0, index};
}

// e with vertex `from` (on `side`) replaced by `to`; the caller guarantees
// `from` is in e and `to` is not.
Edge replace_vertex(const GroundSet& g, Edge e, int side, int from, int to) {
  if (g.is_partite()) {
    e[static_cast<std::size_t>(side)] = to;
    return e;
  }
  auto it = std::find(e.vertices.begin(), e.vertices.end(), from);
  *it = to;
  std::sort(e.vertices.begin(), e.vertices.end());
  return e;
}

void apply_moves(std::vector<Hypergraph>& members, const ShiftStep& step, bool forward) {
  for (const EdgeMove& mv : step.moved) {
    if (mv.member >= members.size()) throw InputError("shift log names a missing member");
    const Edge& gone = forward ? mv.from : mv.to;
    const Edge& come = forward ? mv.to : mv.from;
    if (!members[mv.member].erase(gone) || !members[mv.member].insert(come)) {
      throw InputError("shift log does not replay on the given family");
    }
  }
}

}  // namespace

ShiftMode natural_mode(const GroundSet& ground) {
  return ground.is_partite() ? ShiftMode::partite : ShiftMode::global;
}

void check_shift_arguments(const GroundSet& g, int side, int x, int y) {
  if (g.is_partite()) {
    if (side < 0 || side >= g.r()) {
      throw InputError("partite shift needs a side in [0, " + std::to_string(g.r()) + ")");
    }
  } else if (side != kGlobalSide) {
    throw InputError("shifts on a general ground set take no side");
  }
  if (x < 0 || y >= g.n()) throw InputError("shift vertex out of range");
  if (x >= y) throw InputError("shift needs x < y");
}

std::optional<Edge> shift_image(const GroundSet& g, const Edge& e, int side, int x, int y) {
  const Vertex vx = shift_vertex(g, side, x);
  const Vertex vy = shift_vertex(g, side, y);
  if (!g.contains(e, vy) || g.contains(e, vx)) return std::nullopt;
  return replace_vertex(g, e, side, y, x);
}

std::pair<Hypergraph, ShiftStep> shift_hypergraph(const Hypergraph& h, int side, int x, int y) {
  auto [family, step] = shift_family(Family(h.ground(), {h}), side, x, y);
  return {family[0], std::move(step)};
}

std::pair<Family, ShiftStep> shift_family(const Family& family, int side, int x, int y) {
  const GroundSet& g = family.ground();
  check_shift_arguments(g, side, x, y);

  ShiftStep step{side, x, y, {}};
  std::vector<Hypergraph> members;
  members.reserve(family.k());
  for (std::size_t i = 0; i < family.k(); ++i) {
    const Hypergraph& h = family[i];
    CellSet cells = h.cells();
    for (const Edge& e : h.edges()) {
      auto image = shift_image(g, e, side, x, y);
      if (!image || h.contains(*image)) continue;
      cells.reset(g.rank(e));
      cells.set(g.rank(*image));
      step.moved.push_back({i, e, std::move(*image)});
    }
    members.push_back(Hypergraph::from_cells(g, std::move(cells)));
  }
  return {Family(g, std::move(members)), std::move(step)};
}

bool is_shifted(const Hypergraph& h, ShiftMode mode) {
  const GroundSet& g = h.ground();
  if (mode == ShiftMode::partite && !g.is_partite()) {
    throw InputError("partite shiftedness needs a partite ground set");
  }
  if (mode == ShiftMode::global && g.is_partite()) {
    throw InputError("global shiftedness needs a general ground set");
  }
  for (const Edge& e : h.edges()) {
    for (std::size_t pos = 0; pos < e.size(); ++pos) {
      const int side = g.is_partite() ? static_cast<int>(pos) : kGlobalSide;
      for (int smaller = 0; smaller < e[pos]; ++smaller) {
        auto image = shift_image(g, e, side, smaller, e[pos]);
        if (image && !h.contains(*image)) return false;
      }
    }
  }
  return true;
}

bool is_shifted(const Hypergraph& h) { return is_shifted(h, natural_mode(h.ground())); }

bool is_shifted(const Family& family) {
  return std::all_of(family.begin(), family.end(),
                     [](const Hypergraph& h) { return is_shifted(h); });
}

ShiftedFamily shifted_closure(const Family& family, ShiftMode mode) {
  const GroundSet& g = family.ground();
  if (mode != natural_mode(g)) {
    throw InputError(mode == ShiftMode::partite
                         ? "partite shifting needs a partite ground set"
                         : "global shifting needs a general ground set");
  }
  ShiftedFamily out{family, {}};
  std::vector<int> sides;
  if (g.is_partite()) {
    for (int s = 0; s < g.r(); ++s) sides.push_back(s);
  } else {
    sides.push_back(kGlobalSide);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (int side : sides) {
      for (int x = 0; x < g.n(); ++x) {
        for (int y = x + 1; y < g.n(); ++y) {
          auto [next, step] = shift_family(out.family, side, x, y);
          if (step.moved.empty()) continue;
          out.family = std::move(next);
          out.log.steps.push_back(std::move(step));
          changed = true;
        }
      }
    }
  }
  return out;
}

ShiftedFamily shifted_closure(const Family& family) {
  return shifted_closure(family, natural_mode(family.ground()));
}

Family replay(const Family& original, const ShiftLog& log) {
  std::vector<Hypergraph> members = original.members();
  for (const ShiftStep& step : log.steps) {
    check_shift_arguments(original.ground(), step.side, step.x, step.y);
    apply_moves(members, step, true);
  }
  return Family(original.ground(), std::move(members));
}

RainbowMatching pullback_rainbow(const ShiftLog& log, const Family& original,
                                 const RainbowMatching& m) {
  const GroundSet& g = original.ground();
  Family shifted = replay(original, log);
  if (!is_rainbow_matching(shifted, m)) {
    throw InputError("matching is not a rainbow matching of the shifted family");
  }

  std::vector<Hypergraph> state = shifted.members();
  RainbowMatching current = m;
  for (auto it = log.steps.rbegin(); it != log.steps.rend(); ++it) {
    const ShiftStep& step = *it;
    apply_moves(state, step, false);

    const Vertex vx = shift_vertex(g, step.side, step.x);
    const Vertex vy = shift_vertex(g, step.side, step.y);
    auto holds = [&](const Vertex& v) {
      return std::find_if(current.choices.begin(), current.choices.end(),
                          [&](const Edge& e) { return g.contains(e, v); });
    };

    auto with_x = holds(vx);
    if (with_x == current.choices.end()) continue;
    const auto i = static_cast<std::size_t>(with_x - current.choices.begin());
    auto moved = std::find_if(step.moved.begin(), step.moved.end(), [&](const EdgeMove& mv) {
      return mv.member == i && mv.to == current.choices[i];
    });
    if (moved == step.moved.end()) continue;  // e_i was already in F_i

    auto with_y = holds(vy);
    if (with_y != current.choices.end()) {
      const auto s = static_cast<std::size_t>(with_y - current.choices.begin());
      // b + y was not shifted, so b + x was already present in F_s.
      Edge swapped = replace_vertex(g, current.choices[s], step.side, step.y, step.x);
      if (!state[s].contains(swapped)) {
        throw TheoremViolation("pull-back: unshifted edge has no pre-existing image");
      }
      current.choices[s] = std::move(swapped);
    }
    current.choices[i] = moved->from;
  }

  if (!is_rainbow_matching(original, current)) {
    throw TheoremViolation("pull-back produced an invalid rainbow matching");
  }
  return current;
}

}  // namespace rainbow
