#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spx/graph.hpp"

namespace spx {

enum class ConnectivityKind { vertex, edge };

/// Whether the order lower bound n >= (lambda + 1)(h + 1)^2 of the edge version is enforced.
/// Relaxed mode exists to probe orders below the bound.
enum class OrderThreshold { enforce, relaxed };

/// (n, r, h, delta, value) where value is the h-extra r-component vertex or edge connectivity.
struct ExtremalParams {
  int n = 0;
  int r = 2;
  int h = 1;
  int delta = 1;
  ConnectivityKind kind = ConnectivityKind::vertex;
  int value = 1;

  /// Throws ParamError naming the first violated inequality.
  ///   both kinds:  r >= 2, h >= 1, delta >= 1, value >= 1, n <= 64
  ///   vertex kind: n >= value + r(h + 1)
  ///   edge kind:   h >= delta, value >= r - 1 and (when enforced) n >= (value + 1)(h + 1)^2
  void validate(OrderThreshold threshold = OrderThreshold::enforce) const;

  static ExtremalParams vertex(int n, int r, int h, int delta, int kappa);
  static ExtremalParams edge(int n, int r, int h, int delta, int lambda);
};

nlohmann::json to_json(const ExtremalParams& p);

struct Block {
  std::string name;
  VertexSet vertices;
};

/// A constructed graph together with its named construction blocks.
struct LabeledFamily {
  Graph graph;
  std::vector<Block> blocks;
  std::string regime;

  /// Nonempty blocks as a vertex partition, in block order.
  std::vector<VertexSet> block_partition() const;
  const Block& block(const std::string& name) const;
};

/// {"blocks": {"name": [vertices...], ...}, "regime": str}, blocks in construction order.
nlohmann::ordered_json blocks_json(const LabeledFamily& f);

/// Extremal graph for the vertex version, in one of three regimes:
///   delta <= kappa:            K_kappa v (K_big u (r-2)K_{h+1} u K_h) u K_1, the outer vertex sending
///                              delta - 1 edges into K_kappa and one edge into K_h
///   kappa < delta < kappa + h: K_kappa v (K_big u (r-2)K_{h+1} u K_h u K_1), plus delta - kappa edges
///                              between that K_1 and K_h
///   delta >= kappa + h:        K_kappa v (K_big u (r-1)K_{delta-kappa+1})
/// Labels: big clique, join set, small blocks in order, outer K_1 last.
LabeledFamily g_kappa(const ExtremalParams& p);

/// Extremal graph for the edge version: (K_rest v K_{lambda-r+2}) u (r-2)K_{h+1} u (K_delta v K_{h-delta})
/// u K_1, with the pendant K_1 joined to all of K_delta, every vertex of K_{lambda-r+2} joined to
/// the first vertex of the first K_{h+1}, and the first vertex of K_{lambda-r+2} joined to the first
/// vertex of each other K_{h+1} and of K_delta. With r = 2 there is no K_{h+1}; the
/// lambda-edge bundle lands on the first vertex of K_delta instead.
LabeledFamily b_lambda(const ExtremalParams& p, OrderThreshold threshold = OrderThreshold::enforce);

/// Cross-edge placement for a member of the K family.
struct KAttachment {
  /// Edges between the pendant vertex and K_h, 1 <= t <= delta.
  int t = 1;
  /// Additional (clique vertex, small vertex) edges; clique vertices index the big clique
  /// [0, n1), small vertices index the (r-1)(h+1) vertices after it (copies, K_h, pendant).
  std::vector<std::pair<int, int>> extra;
};

/// Member of the family built from K_{n1} u (r-2)K_{h+1} u K_h u K_1 (n1 = n - (r-1)(h+1)):
///   - t edges from the pendant K_1 to the first t vertices of K_h,
///   - one edge from clique vertex 0 to the first vertex of every K_{h+1} and of K_h,
///   - delta - t edges from the pendant to clique vertices 0..delta-t-1,
///   - the declared extra edges, exactly lambda - r + 1 - delta + t of them.
/// So there are lambda cross edges in total. Throws ParamError for malformed attachments
/// (wrong count, out-of-range or repeated edges, minimum degree != delta).
LabeledFamily k_family(const ExtremalParams& p, const KAttachment& a,
                       OrderThreshold threshold = OrderThreshold::enforce);

/// K_{n-delta-1} u K_{delta+1} plus lambda edges from the first vertex of K_{delta+1} to the first
/// lambda vertices of K_{n-delta-1}. Requires lambda >= 1, delta >= 1, lambda <= n - delta - 1
/// and n >= 2(delta + 1).
Graph f_lambda(int n, int delta, int lambda);

/// Recomputed parameters of a constructed graph.
struct SelfCheck {
  int order = 0;
  int min_degree = 0;
  /// Conditional connectivity recomputed by the connectivity module; -1 when undefined.
  int connectivity = -1;
  bool passed = false;
};

SelfCheck self_check(const LabeledFamily& f, const ExtremalParams& p);

}  // namespace spx
