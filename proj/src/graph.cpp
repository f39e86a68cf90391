#include "spx/graph.hpp"

#include <algorithm>
#include <string>

#include "spx/errors.hpp"

namespace spx {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw ParamError("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

void check_vertex(int v, int n) {
  if (v < 0 || v >= n) {
    throw ParamError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

VertexSet::VertexSet(Word members, int host_order) : members_(members), host_order_(host_order) {
  check_order(host_order);
  if ((members & ~low_bits(host_order)) != 0) {
    throw ParamError("vertex set has members outside its host order");
  }
}

VertexSet VertexSet::of(std::initializer_list<int> vertices, int host_order) {
  return of(std::span<const int>(vertices.begin(), vertices.size()), host_order);
}

VertexSet VertexSet::of(std::span<const int> vertices, int host_order) {
  check_order(host_order);
  Word w = 0;
  for (int v : vertices) {
    check_vertex(v, host_order);
    w |= bit(v);
  }
  return VertexSet(w, host_order);
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (Word w = members_; w != 0; w &= w - 1) out.push_back(std::countr_zero(w));
  return out;
}

EdgeSet::EdgeSet(std::vector<Edge> edges, int host_order)
    : edges_(std::move(edges)), host_order_(host_order) {
  check_order(host_order);
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw ParamError("edge set contains a loop at " + std::to_string(e.u));
    check_vertex(e.u, host_order);
    check_vertex(e.v, host_order);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw ParamError("edge set contains a repeated edge");
  }
}

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_rows(std::span<const Word> rows) {
  Graph g(static_cast<int>(rows.size()));
  const Word all = g.all();
  int bits = 0;
  for (int v = 0; v < g.n_; ++v) {
    const Word r = rows[v];
    if ((r & ~all) != 0) throw ParamError("adjacency row references a vertex outside the graph");
    if (r & bit(v)) throw ParamError("self-loop at vertex " + std::to_string(v));
    g.rows_[v] = r;
    bits += std::popcount(r);
  }
  for (int v = 0; v < g.n_; ++v) {
    for (Word w = g.rows_[v]; w != 0; w &= w - 1) {
      if (!g.adjacent(std::countr_zero(w), v)) throw ParamError("adjacency rows are not symmetric");
    }
  }
  g.m_ = bits / 2;
  return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    check_vertex(e.u, n);
    check_vertex(e.v, n);
    if (e.u == e.v) throw ParamError("self-loop at vertex " + std::to_string(e.u));
    if (g.adjacent(e.u, e.v)) continue;
    g.rows_[e.u] |= bit(e.v);
    g.rows_[e.v] |= bit(e.u);
    ++g.m_;
  }
  return g;
}

Graph Graph::from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  g.m_ = std::popcount(mask);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1U) {
        g.rows_[i] |= bit(j);
        g.rows_[j] |= bit(i);
      }
    }
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (Word w = rows_[u] & ~low_bits(u + 1); w != 0; w &= w - 1) {
      out.emplace_back(u, std::countr_zero(w));
    }
  }
  return out;
}

std::uint64_t Graph::mask() const {
  if (pair_count(n_) > 64) throw ParamError("graph too large for a 64-bit pair mask");
  std::uint64_t mask = 0;
  int k = 0;
  for (int j = 1; j < n_; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (adjacent(i, j)) mask |= std::uint64_t{1} << k;
    }
  }
  return mask;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

Graph complete(int n) {
  if (n < 1 || n > kMaxOrder) throw ParamError("complete graph order must be in [1, 64]");
  std::vector<Word> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = low_bits(n) & ~bit(v);
  return Graph::from_rows(rows);
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle(int n) {
  if (n < 3 || n > kMaxOrder) throw ParamError("cycle order must be in [3, 64]");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph path(int n) {
  if (n < 1 || n > kMaxOrder) throw ParamError("path order must be in [1, 64]");
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph star(int leaves) { return join(complete(1), empty_graph(leaves)); }

Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxOrder) throw ParamError("union exceeds 64 vertices");
  std::vector<Word> rows(n);
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v);
  for (int v = 0; v < h.order(); ++v) rows[g.order() + v] = h.row(v) << g.order();
  return Graph::from_rows(rows);
}

Graph join(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxOrder) throw ParamError("join exceeds 64 vertices");
  const Word left = low_bits(g.order());
  const Word right = low_bits(n) & ~left;
  std::vector<Word> rows(n);
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v) | right;
  for (int v = 0; v < h.order(); ++v) rows[g.order() + v] = (h.row(v) << g.order()) | left;
  return Graph::from_rows(rows);
}

Graph add_edges(const Graph& g, const EdgeSet& e) {
  if (e.host_order() != g.order()) throw ParamError("edge set host order does not match graph");
  std::vector<Word> rows(g.rows().begin(), g.rows().end());
  for (const Edge& x : e.edges()) {
    if (g.adjacent(x.u, x.v)) {
      throw ParamError("edge " + std::to_string(x.u) + "-" + std::to_string(x.v) + " already present");
    }
    rows[x.u] |= bit(x.v);
    rows[x.v] |= bit(x.u);
  }
  return Graph::from_rows(rows);
}

Graph remove_edges(const Graph& g, const EdgeSet& e) {
  if (e.host_order() != g.order()) throw ParamError("edge set host order does not match graph");
  std::vector<Word> rows(g.rows().begin(), g.rows().end());
  for (const Edge& x : e.edges()) {
    if (!g.adjacent(x.u, x.v)) {
      throw ParamError("edge " + std::to_string(x.u) + "-" + std::to_string(x.v) + " not present");
    }
    rows[x.u] &= ~bit(x.v);
    rows[x.v] &= ~bit(x.u);
  }
  return Graph::from_rows(rows);
}

Graph toggle_edge(const Graph& g, int u, int v) {
  check_vertex(u, g.order());
  check_vertex(v, g.order());
  if (u == v) throw ParamError("cannot toggle a loop");
  std::vector<Word> rows(g.rows().begin(), g.rows().end());
  rows[u] ^= bit(v);
  rows[v] ^= bit(u);
  return Graph::from_rows(rows);
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
  if (s.host_order() != g.order()) throw ParamError("vertex set host order does not match graph");
  const Word keep = g.all() & ~s.bits();
  if (keep == 0) throw ParamError("cannot delete every vertex");
  std::vector<int> new_label(g.order(), -1);
  std::vector<int> map;
  for (Word w = keep; w != 0; w &= w - 1) {
    const int v = std::countr_zero(w);
    new_label[v] = static_cast<int>(map.size());
    map.push_back(v);
  }
  std::vector<Word> rows(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    for (Word w = g.row(map[i]) & keep; w != 0; w &= w - 1) {
      rows[i] |= bit(new_label[std::countr_zero(w)]);
    }
  }
  return {Graph::from_rows(rows), std::move(map)};
}

Word reach(const Graph& g, Word seed, Word within) {
  Word comp = seed & within;
  Word frontier = comp;
  while (frontier != 0) {
    Word next = 0;
    for (Word w = frontier; w != 0; w &= w - 1) next |= g.row(std::countr_zero(w));
    next &= within & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

std::vector<Word> component_masks(const Graph& g, Word within) {
  std::vector<Word> out;
  Word left = within & g.all();
  while (left != 0) {
    const Word comp = reach(g, left & (~left + 1), left);
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

int count_components(const Graph& g, Word within) {
  int count = 0;
  Word left = within & g.all();
  while (left != 0) {
    left &= ~reach(g, left & (~left + 1), left);
    ++count;
  }
  return count;
}

bool is_connected_within(const Graph& g, Word within) {
  within &= g.all();
  if (within == 0) return true;
  return reach(g, within & (~within + 1), within) == within;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  for (Word c : component_masks(g, g.all())) out.emplace_back(c, g.order());
  return out;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.all()); }

int min_degree(const Graph& g) {
  if (g.order() == 0) throw ParamError("minimum degree of the null graph is undefined");
  int d = kMaxOrder;
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  return d;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw ParamError("permutation length does not match order");
  Word seen = 0;
  for (int p : perm) {
    check_vertex(p, n);
    seen |= bit(p);
  }
  if (seen != g.all()) throw ParamError("relabeling is not a permutation");
  std::vector<Word> rows(n);
  for (int v = 0; v < n; ++v) {
    for (Word w = g.row(v); w != 0; w &= w - 1) rows[perm[v]] |= bit(perm[std::countr_zero(w)]);
  }
  return Graph::from_rows(rows);
}

}  // namespace spx
