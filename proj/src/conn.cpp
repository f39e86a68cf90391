#include "spx/conn.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <string>

#include "spx/errors.hpp"

namespace spx {

namespace {

void check_query(const Graph& g, int r, int h) {
  if (r < 2) throw ParamError("component count r must be >= 2");
  if (h < 0) throw ParamError("extra size h must be >= 0");
  if (g.order() == 0) throw ParamError("conditional connectivity of the null graph is undefined");
  if (!is_connected(g)) throw ParamError("conditional connectivity requires a connected graph");
}

// Components of the subgraph induced on `keep` when they number >= r and all have order >= min_size.
bool admissible_split(const Graph& g, Word keep, int r, int min_size, std::vector<Word>* comps) {
  std::vector<Word> c = component_masks(g, keep);
  if (static_cast<int>(c.size()) < r) return false;
  for (Word x : c) {
    if (std::popcount(x) < min_size) return false;
  }
  if (comps != nullptr) *comps = std::move(c);
  return true;
}

std::vector<VertexSet> to_sets(const std::vector<Word>& masks, int n) {
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (Word m : masks) out.emplace_back(m, n);
  return out;
}

// Scans k-subsets of {0..n-1} in lexicographic order for k = 0..max_k.
std::optional<VertexCutCertificate> first_vertex_cut(const Graph& g, int r, int h, int max_k) {
  const int n = g.order();
  const int min_size = h + 1;
  for (int k = 0; k <= max_k; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Word s = 0;
      for (int v : idx) s |= bit(v);
      std::vector<Word> comps;
      if (admissible_split(g, g.all() & ~s, r, min_size, &comps)) {
        return VertexCutCertificate{VertexSet(s, n), to_sets(comps, n), k};
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// Largest |S| for which G - S can still hold r blocks of h + 1 vertices.
int max_vertex_cut(int n, int r, int h) { return n - r * (h + 1); }

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, int r, int h, int cap)
      : g_(g), n_(g.order()), r_(r), min_size_(h + 1), max_blocks_(g.order() / (h + 1)), best_value_(cap) {}

  std::optional<EdgeCutCertificate> run() {
    if (max_blocks_ < r_) return std::nullopt;
    blocks_.reserve(max_blocks_);
    descend(0);
    if (!found_) return std::nullopt;
    return EdgeCutCertificate{EdgeSet(best_cut_, n_), to_sets(best_blocks_, n_), best_value_};
  }

 private:
  bool can_finish(int next) const {
    int deficit = 0;
    for (Word b : blocks_) deficit += std::max(0, min_size_ - std::popcount(b));
    deficit += std::max(0, r_ - static_cast<int>(blocks_.size())) * min_size_;
    return deficit <= n_ - next;
  }

  void place(int v, std::size_t b, int gain) {
    blocks_[b] |= bit(v);
    assigned_ |= bit(v);
    cross_ += gain;
    if (can_finish(v + 1)) descend(v + 1);
    cross_ -= gain;
    assigned_ &= ~bit(v);
    blocks_[b] &= ~bit(v);
  }

  void descend(int v) {
    if (v == n_) {
      leaf();
      return;
    }
    const Word earlier = g_.row(v) & assigned_;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const int gain = std::popcount(earlier & ~blocks_[b]);
      if (cross_ + gain > best_value_) continue;
      place(v, b, gain);
    }
    if (static_cast<int>(blocks_.size()) < max_blocks_) {
      const int gain = std::popcount(earlier);
      if (cross_ + gain <= best_value_) {
        blocks_.push_back(0);
        place(v, blocks_.size() - 1, gain);
        blocks_.pop_back();
      }
    }
  }

  void leaf() {
    for (Word b : blocks_) {
      if (!is_connected_within(g_, b)) return;
    }
    std::vector<Edge> cut;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      for (Word w = blocks_[i]; w != 0; w &= w - 1) {
        const int u = std::countr_zero(w);
        for (Word x = g_.row(u) & ~blocks_[i] & ~low_bits(u + 1); x != 0; x &= x - 1) {
          cut.emplace_back(u, std::countr_zero(x));
        }
      }
    }
    std::sort(cut.begin(), cut.end());
    const int value = static_cast<int>(cut.size());
    if (found_ && (value > best_value_ || (value == best_value_ && !(cut < best_cut_)))) return;
    found_ = true;
    best_value_ = value;
    best_cut_ = std::move(cut);
    best_blocks_ = blocks_;
    std::sort(best_blocks_.begin(), best_blocks_.end(),
              [](Word a, Word b) { return std::countr_zero(a) < std::countr_zero(b); });
  }

  const Graph& g_;
  int n_;
  int r_;
  int min_size_;
  int max_blocks_;
  int best_value_;
  bool found_ = false;
  std::vector<Word> blocks_;
  Word assigned_ = 0;
  int cross_ = 0;
  std::vector<Edge> best_cut_;
  std::vector<Word> best_blocks_;
};

}  // namespace

KappaResult kappa_h_r(const Graph& g, int r, int h) {
  check_query(g, r, h);
  return {first_vertex_cut(g, r, h, max_vertex_cut(g.order(), r, h))};
}

std::optional<int> kappa_h_r_at_most(const Graph& g, int r, int h, int cap) {
  check_query(g, r, h);
  auto c = first_vertex_cut(g, r, h, std::min(cap, max_vertex_cut(g.order(), r, h)));
  if (!c) return std::nullopt;
  return c->value;
}

LambdaResult lambda_h_r(const Graph& g, int r, int h) {
  check_query(g, r, h);
  return {PartitionSearch(g, r, h, INT_MAX).run()};
}

std::optional<int> lambda_h_r_at_most(const Graph& g, int r, int h, int cap) {
  check_query(g, r, h);
  if (cap < 0) return std::nullopt;
  auto c = PartitionSearch(g, r, h, cap).run();
  if (!c) return std::nullopt;
  return c->value;
}

std::optional<int> kappa_oracle(const Graph& g, int r, int h) {
  check_query(g, r, h);
  const int n = g.order();
  if (n > 20) throw ParamError("kappa oracle limited to order <= 20");
  std::optional<int> best;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (!admissible_split(g, g.all() & ~s, r, h + 1, nullptr)) continue;
    const int size = std::popcount(s);
    if (!best || size < *best) best = size;
  }
  return best;
}

std::optional<int> lambda_oracle(const Graph& g, int r, int h) {
  check_query(g, r, h);
  const std::vector<Edge> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > 24) throw ParamError("lambda oracle limited to m <= 24");
  const int n = g.order();
  // Fewer than r(h+1) vertices can never split into r blocks of order h+1.
  if (n < r * (h + 1)) return std::nullopt;
  std::array<Word, 64> rows{};
  for (int k = 0; k <= m; ++k) {
    // Gosper's hack over k-subsets of the m edges.
    std::uint32_t f = k == 0 ? 0U : (1U << k) - 1U;
    const std::uint32_t end = 1U << m;
    while (f < end) {
      std::copy(g.rows().begin(), g.rows().end(), rows.begin());
      for (std::uint32_t w = f; w != 0; w &= w - 1) {
        const Edge& e = edges[std::countr_zero(w)];
        rows[e.u] &= ~bit(e.v);
        rows[e.v] &= ~bit(e.u);
      }
      int count = 0;
      bool ok = true;
      for (Word left = g.all(); left != 0 && ok;) {
        Word comp = left & (~left + 1);
        for (Word frontier = comp; frontier != 0;) {
          Word next = 0;
          for (Word w = frontier; w != 0; w &= w - 1) next |= rows[std::countr_zero(w)];
          frontier = next & ~comp;
          comp |= next;
        }
        left &= ~comp;
        ++count;
        ok = std::popcount(comp) >= h + 1;
      }
      if (ok && count >= r) return k;
      if (f == 0) break;
      const std::uint32_t low = f & (~f + 1U);
      const std::uint32_t ripple = f + low;
      f = (((ripple ^ f) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

ClassicalConnectivity classical_kappa(const Graph& g) {
  const KappaResult r = kappa_h_r(g, 2, 0);
  if (r.defined()) return {r.value(), std::nullopt};
  return {std::nullopt, g.order() - 1};
}

ClassicalConnectivity classical_lambda(const Graph& g) {
  const LambdaResult r = lambda_h_r(g, 2, 0);
  if (r.defined()) return {r.value(), std::nullopt};
  return {std::nullopt, std::nullopt};
}

bool certificate_valid(const Graph& g, const VertexCutCertificate& c, int r, int h) {
  if (c.cut.host_order() != g.order() || c.cut.size() != c.value) return false;
  std::vector<Word> comps;
  if (!admissible_split(g, g.all() & ~c.cut.bits(), r, h + 1, &comps)) return false;
  return to_sets(comps, g.order()) == c.components;
}

bool certificate_valid(const Graph& g, const EdgeCutCertificate& c, int r, int h) {
  if (c.cut.host_order() != g.order() || static_cast<int>(c.cut.size()) != c.value) return false;
  Graph rest = g;
  try {
    rest = remove_edges(g, c.cut);
  } catch (const ParamError&) {
    return false;
  }
  std::vector<Word> comps;
  if (!admissible_split(rest, rest.all(), r, h + 1, &comps)) return false;
  if (to_sets(comps, g.order()) != c.components) return false;
  // No wasted removals: every cut edge must join two different components.
  for (const Edge& e : c.cut.edges()) {
    for (Word comp : comps) {
      if ((comp >> e.u & 1U) && (comp >> e.v & 1U)) return false;
    }
  }
  return true;
}

namespace {

nlohmann::json components_json(const std::vector<VertexSet>& comps) {
  nlohmann::json out = nlohmann::json::array();
  for (const VertexSet& c : comps) out.push_back(c.to_vector());
  return out;
}

nlohmann::json undefined_json() { return {{"value", nullptr}, {"cut", nullptr}, {"components", nullptr}}; }

}  // namespace

nlohmann::json to_json(const KappaResult& r) {
  if (!r.defined()) return undefined_json();
  const auto& c = *r.certificate;
  return {{"value", c.value}, {"cut", c.cut.to_vector()}, {"components", components_json(c.components)}};
}

nlohmann::json to_json(const LambdaResult& r) {
  if (!r.defined()) return undefined_json();
  const auto& c = *r.certificate;
  nlohmann::json cut = nlohmann::json::array();
  for (const Edge& e : c.cut.edges()) cut.push_back({e.u, e.v});
  return {{"value", c.value}, {"cut", std::move(cut)}, {"components", components_json(c.components)}};
}

}  // namespace spx
