#include "rainbow/hall.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/shifting.hpp"

namespace rainbow {
namespace {

void require_bipartite(const Family& family, const char* who) {
  const GroundSet& g = family.ground();
  if (!g.is_partite() || g.r() != 2) {
    throw InputError(std::string(who) + " needs a bipartite (partite, r=2) family");
  }
}

bool in_r(const Vertex& v, int a, int b) { return v.side == 0 ? v.index < a : v.index < b; }

}  // namespace

HallCheck check_hall_condition(const Family& family) {
  require_bipartite(family, "check_hall_condition");
  const auto n = static_cast<std::size_t>(family.ground().n());
  const std::vector<std::size_t> order = ascending_size_order(family);

  std::size_t sum = 0;
  for (std::size_t j = 1; j <= order.size(); ++j) {
    sum += family[order[j - 1]].size();
    if (sum <= n * j * (j - 1)) {
      HallCheck out{false, {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(j)}};
      std::sort(out.violating.begin(), out.violating.end());
      return out;
    }
  }
  return {true, {}};
}

AlgoTrace hall_size_algorithm(const Family& family) {
  require_bipartite(family, "hall_size_algorithm");
  for (std::size_t i = 0; i < family.k(); ++i) {
    if (!is_shifted(family[i], ShiftMode::partite)) {
      throw PreconditionError("hall_size_algorithm needs shifted members; F_" +
                              std::to_string(i + 1) + " is not shifted");
    }
  }

  const int n = family.ground().n();
  AlgoTrace trace;
  trace.n = n;
  trace.k = family.k();
  trace.order = ascending_size_order(family);

  std::vector<char> used_m(static_cast<std::size_t>(n), 0);
  std::vector<char> used_w(static_cast<std::size_t>(n), 0);
  auto first_free = [n](const std::vector<char>& used) {
    int i = 0;
    while (i < n && used[static_cast<std::size_t>(i)]) ++i;
    return i;
  };

  std::vector<Edge> chosen;
  for (std::size_t step = 0; step < family.k(); ++step) {
    const int t = static_cast<int>(step) + 1;
    const int a = first_free(used_m);
    const int b = first_free(used_w);

    // Tails of earlier edges lie in R_t.
    for (const StepRecord& rec : trace.steps) {
      if (!in_r(rec.tail, a, b)) {
        throw TheoremViolation("tail of e_" + std::to_string(rec.t) + " is not in R_" +
                               std::to_string(t));
      }
    }

    const Hypergraph& member = family[trace.order[step]];
    const Edge* best = nullptr;
    int best_length = -1;
    bool best_through_wb = false;
    for (const Edge& e : member.edges()) {
      const int p = e[0];
      const int q = e[1];
      if (used_m[static_cast<std::size_t>(p)] || used_w[static_cast<std::size_t>(q)]) continue;
      const int length = std::abs((q - b) - (p - a));
      const bool through_wb = q == b;
      if (length > best_length || (length == best_length && through_wb && !best_through_wb)) {
        best = &e;
        best_length = length;
        best_through_wb = through_wb;
      }
    }

    if (best == nullptr) {
      trace.halted_at = t;
      trace.final_a = a;
      trace.final_b = b;
      break;
    }

    const int p = (*best)[0];
    const int q = (*best)[1];
    if (p != a && q != b) {
      throw TheoremViolation("e_" + std::to_string(t) + " contains neither m_a nor w_b");
    }

    StepRecord rec;
    rec.t = t;
    rec.member = trace.order[step];
    rec.a = a;
    rec.b = b;
    for (int i = 0; i < n; ++i) {
      if (used_m[static_cast<std::size_t>(i)]) rec.covered.push_back({0, i});
    }
    for (int i = 0; i < n; ++i) {
      if (used_w[static_cast<std::size_t>(i)]) rec.covered.push_back({1, i});
    }
    rec.edge = *best;
    rec.length = best_length;
    if (p == a) {
      rec.tail = {0, p};
      rec.head = {1, q};
    } else {
      rec.tail = {1, q};
      rec.head = {0, p};
    }
    trace.steps.push_back(std::move(rec));
    chosen.push_back(*best);
    used_m[static_cast<std::size_t>(p)] = 1;
    used_w[static_cast<std::size_t>(q)] = 1;
  }

  if (!trace.halted_at) {
    trace.final_a = first_free(used_m);
    trace.final_b = first_free(used_w);
    for (const StepRecord& rec : trace.steps) {
      if (!in_r(rec.tail, trace.final_a, trace.final_b)) {
        throw TheoremViolation("tail of e_" + std::to_string(rec.t) + " is not in the final R");
      }
    }
    RainbowMatching m;
    m.choices.resize(family.k());
    for (std::size_t step = 0; step < chosen.size(); ++step) {
      m.choices[trace.order[step]] = chosen[step];
    }
    trace.matching = std::move(m);
  }

  for (StepRecord& rec : trace.steps) {
    rec.is_short = rec.edge[0] < trace.final_a && rec.edge[1] < trace.final_b;
  }
  return trace;
}

}  // namespace rainbow
