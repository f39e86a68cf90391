#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spx {

using Word = std::uint64_t;

inline constexpr int kMaxOrder = 64;

/// Bitset over {0..63}; bit v set means vertex v is a member.
inline constexpr Word bit(int v) { return Word{1} << v; }

/// Mask with the low n bits set (n in [0, 64]).
inline constexpr Word low_bits(int n) { return n >= 64 ? ~Word{0} : (Word{1} << n) - 1; }

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A subset of the vertices of a host graph of order host_order.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(Word members, int host_order);
  static VertexSet of(std::initializer_list<int> vertices, int host_order);
  static VertexSet of(std::span<const int> vertices, int host_order);

  Word bits() const { return members_; }
  int host_order() const { return host_order_; }
  int size() const { return std::popcount(members_); }
  bool empty() const { return members_ == 0; }
  bool contains(int v) const { return v >= 0 && v < 64 && (members_ >> v & 1U); }
  int smallest() const { return members_ == 0 ? -1 : std::countr_zero(members_); }
  std::vector<int> to_vector() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  Word members_ = 0;
  int host_order_ = 0;
};

/// A set of distinct edges over a host graph of order host_order, kept sorted.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::vector<Edge> edges, int host_order);

  const std::vector<Edge>& edges() const { return edges_; }
  int host_order() const { return host_order_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<Edge> edges_;
  int host_order_ = 0;
};

/// Immutable simple undirected graph on at most 64 vertices.
///
/// Each vertex owns one 64-bit adjacency row. Graphs are plain values: every
/// operation that changes structure returns a new Graph.
class Graph {
 public:
  /// Edgeless graph on n vertices (0 <= n <= 64).
  explicit Graph(int n = 0);

  /// Builds from adjacency rows; rows must be symmetric and loop-free.
  static Graph from_rows(std::span<const Word> rows);
  static Graph from_edges(int n, std::span<const Edge> edges);
  /// Decodes an upper-triangle bitmask in graph6 bit order: pair (i, j), i < j,
  /// sits at bit j(j-1)/2 + i.
  static Graph from_mask(int n, std::uint64_t mask);

  int order() const { return n_; }
  int size() const { return m_; }
  Word row(int v) const { return rows_[v]; }
  std::span<const Word> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }
  Word all() const { return low_bits(n_); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  std::vector<Edge> edges() const;
  /// Inverse of from_mask; only valid for n <= 11 (55 pairs).
  std::uint64_t mask() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  int m_ = 0;
  std::array<Word, kMaxOrder> rows_{};
};

/// Number of unordered pairs, n(n-1)/2.
inline constexpr int pair_count(int n) { return n * (n - 1) / 2; }

Graph complete(int n);
Graph empty_graph(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

Graph add_edges(const Graph& g, const EdgeSet& e);
Graph remove_edges(const Graph& g, const EdgeSet& e);

/// Toggles a single vertex pair (no preconditions on presence).
Graph toggle_edge(const Graph& g, int u, int v);

struct InducedSubgraph {
  Graph graph;
  /// label_map[new_label] = original label.
  std::vector<int> label_map;
};

/// Removes the vertices of s; survivors are relabeled in increasing order.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);

/// Vertices of `within` reachable from `seed` inside the subgraph induced on `within`.
Word reach(const Graph& g, Word seed, Word within);

/// Components of the subgraph induced on `within`, as bitmasks ordered by smallest member.
std::vector<Word> component_masks(const Graph& g, Word within);
int count_components(const Graph& g, Word within);
/// True when the induced subgraph on `within` is connected (empty sets count as connected).
bool is_connected_within(const Graph& g, Word within);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

int min_degree(const Graph& g);
int max_degree(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);

/// perm[v] is the new label of vertex v.
Graph relabel(const Graph& g, std::span<const int> perm);

}  // namespace spx
