#pragma once

#include <cstdint>

#include "rainbow/hypergraph.hpp"

namespace rainbow {

/// C(n, k); zero when k < 0 or k > n.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// f(n,2,k) = max(C(2k-1,2), (k-1)(n-1) - C(k-1,2)). Needs n >= 2k.
std::uint64_t f_r2(int n, int k);

/// C(n,r) - C(n-k+1,r). This is f(n,r,k) only for n beyond an unspecified
/// n_0(r,k); for small n it is just the formula.
std::uint64_t f_large_n(int n, int r, int k);

/// g(n,r,k) = (k-1) n^(r-1).
std::uint64_t g_formula(int n, int r, int k);

/// k copies of all edges of [n]^r meeting the first k-1 vertices of side 0.
/// Each member has g(n,r,k) edges and the family has no rainbow matching.
Family star_family(int n, int r, int k);

/// F_1 = {m_c w_d : c,d <= q}; F_2 = ... = F_{q+1} =
/// {m_c w_d : c <= q} + {m_c w_1 : c <= n}. Needs 3 <= q < n.
Family steal_family(int q, int n);

/// k = 2, r = 3: F_1 = {(1,1,1)}, F_2 = every edge of [n]^3 meeting it.
Family r3_counterexample(int n);

/// All r-subsets of [n] containing vertex 1. Needs r <= n/2.
Hypergraph ekr_star(int n, int r);

}  // namespace rainbow
