#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "spx/graph_io.hpp"
#include "spx/spectral.hpp"
#include "support.hpp"

namespace spx::testing {

struct PropertyResult {
  int trials = 0;
  std::vector<std::string> violations;

  bool ok(int wanted) const { return trials == wanted && violations.empty(); }
};

// Rotating edges from v to u when x_u >= x_v strictly raises rho.
inline PropertyResult edge_rotation_property(int trials, std::uint64_t seed, const SpectralConfig& cfg = {}) {
  Rng rng(seed);
  PropertyResult out;
  while (out.trials < trials) {
    const Graph g = random_connected_graph(rng, uniform_int(rng, 3, 12), 40);
    const PerronData p = perron(g, cfg);
    int u = uniform_int(rng, 0, g.order() - 1);
    int v = uniform_int(rng, 0, g.order() - 1);
    if (u == v) continue;
    if (p.vector[u] < p.vector[v]) std::swap(u, v);
    const Word candidates = g.row(v) & ~g.row(u) & ~bit(u);
    if (candidates == 0) continue;
    Word moved = 0;
    while (moved == 0) {
      for (Word w = candidates; w != 0; w &= w - 1) {
        if (uniform_int(rng, 0, 1) == 1) moved |= w & (~w + 1);
      }
    }
    const Graph shifted = kelmans_shift(g, u, v, VertexSet(moved, g.order()));
    if (!is_connected(shifted)) continue;
    ++out.trials;
    if (!(spectral_radius(shifted, cfg) > p.rho + cfg.comparison_epsilon)) {
      out.violations.push_back(graph6_encode(g) + " u=" + std::to_string(u) + " v=" + std::to_string(v));
    }
  }
  return out;
}

// N(v) - u strictly inside N(u) - v forces x_u > x_v; closed twins get equal entries.
inline PropertyResult perron_entry_property(int trials, std::uint64_t seed, const SpectralConfig& cfg = {}) {
  Rng rng(seed);
  PropertyResult out;
  while (out.trials < trials) {
    const int n = uniform_int(rng, 3, 12);
    const Graph base = random_connected_graph(rng, n, 40);
    const int u = uniform_int(rng, 0, n - 1);
    int v = uniform_int(rng, 0, n - 2);
    if (v >= u) ++v;
    std::vector<Word> rows(base.rows().begin(), base.rows().end());
    const bool twins = out.trials % 2 == 1;
    // Give u everything v has (and the edge uv for twins).
    for (Word w = rows[v] & ~bit(u); w != 0; w &= w - 1) {
      const int x = std::countr_zero(w);
      rows[u] |= bit(x);
      rows[x] |= bit(u);
    }
    if (twins) {
      for (Word w = rows[u] & ~bit(v); w != 0; w &= w - 1) {
        const int x = std::countr_zero(w);
        rows[v] |= bit(x);
        rows[x] |= bit(v);
      }
      rows[u] |= bit(v);
      rows[v] |= bit(u);
    }
    const Graph g = Graph::from_rows(rows);
    const Word nu = g.row(u) & ~bit(v);
    const Word nv = g.row(v) & ~bit(u);
    if (!is_connected(g)) continue;
    if (twins ? nu != nv : (nu == nv || (nv & ~nu) != 0)) continue;
    ++out.trials;
    const PerronData p = perron(g, cfg);
    const bool ok = twins ? std::abs(p.vector[u] - p.vector[v]) <= 10 * cfg.tolerance
                          : p.vector[u] > p.vector[v] + cfg.comparison_epsilon;
    if (!ok) out.violations.push_back(graph6_encode(g) + " u=" + std::to_string(u) + " v=" + std::to_string(v));
  }
  return out;
}

// Deleting a non-bridge edge strictly lowers rho.
inline PropertyResult subgraph_monotonicity_property(int trials, std::uint64_t seed, const SpectralConfig& cfg = {}) {
  Rng rng(seed);
  PropertyResult out;
  while (out.trials < trials) {
    const Graph g = random_connected_graph(rng, uniform_int(rng, 3, 12), 40);
    const std::vector<Edge> edges = g.edges();
    const Edge e = edges[uniform_int(rng, 0, static_cast<int>(edges.size()) - 1)];
    const Graph smaller = toggle_edge(g, e.u, e.v);
    if (!is_connected(smaller)) continue;
    ++out.trials;
    if (!(spectral_radius(smaller, cfg) < spectral_radius(g, cfg) - cfg.comparison_epsilon)) {
      out.violations.push_back(graph6_encode(g) + " edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
  return out;
}

}  // namespace spx::testing
