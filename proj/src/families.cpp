#include "spx/families.hpp"

#include <algorithm>
#include <string>

#include "spx/conn.hpp"
#include "spx/errors.hpp"

namespace spx {

namespace {

void require(bool ok, const std::string& inequality) {
  if (!ok) throw ParamError("infeasible parameters: requires " + inequality);
}

class Builder {
 public:
  explicit Builder(int n) : n_(n), rows_(n, 0) {}

  int take(int count) {
    const int first = next_;
    next_ += count;
    return first;
  }

  void clique(int first, int count) {
    for (int i = first; i < first + count; ++i) {
      for (int j = i + 1; j < first + count; ++j) edge(i, j);
    }
  }

  void edge(int u, int v) {
    if (u == v || (rows_[u] >> v & 1U)) throw ParamError("construction repeats an edge or adds a loop");
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }

  void block(std::string name, int first, int count) {
    blocks_.push_back({std::move(name), VertexSet(count == 0 ? 0 : low_bits(first + count) & ~low_bits(first), n_)});
  }

  LabeledFamily finish(std::string regime) {
    return {Graph::from_rows(rows_), std::move(blocks_), std::move(regime)};
  }

 private:
  int n_;
  int next_ = 0;
  std::vector<Word> rows_;
  std::vector<Block> blocks_;
};

std::string copy_name(int i) { return "copy_" + std::to_string(i + 1); }

}  // namespace

void ExtremalParams::validate(OrderThreshold threshold) const {
  require(r >= 2, "r >= 2");
  require(h >= 1, "h >= 1");
  require(delta >= 1, "delta >= 1");
  require(n <= kMaxOrder, "n <= 64");
  if (kind == ConnectivityKind::vertex) {
    require(value >= 1, "kappa >= 1");
    require(n >= value + r * (h + 1), "n >= kappa + r(h+1)");
    return;
  }
  require(value >= 1, "lambda >= 1");
  require(h >= delta, "h >= delta");
  require(value >= r - 1, "lambda >= r - 1");
  if (threshold == OrderThreshold::enforce) {
    require(n >= (value + 1) * (h + 1) * (h + 1), "n >= (lambda+1)(h+1)^2");
  }
}

ExtremalParams ExtremalParams::vertex(int n, int r, int h, int delta, int kappa) {
  return {n, r, h, delta, ConnectivityKind::vertex, kappa};
}

ExtremalParams ExtremalParams::edge(int n, int r, int h, int delta, int lambda) {
  return {n, r, h, delta, ConnectivityKind::edge, lambda};
}

nlohmann::json to_json(const ExtremalParams& p) {
  const bool vertex = p.kind == ConnectivityKind::vertex;
  return {{"n", p.n},
          {"r", p.r},
          {"h", p.h},
          {"delta", p.delta},
          {"kind", vertex ? "vertex" : "edge"},
          {vertex ? "kappa" : "lambda", p.value}};
}

std::vector<VertexSet> LabeledFamily::block_partition() const {
  std::vector<VertexSet> out;
  for (const Block& b : blocks) {
    if (!b.vertices.empty()) out.push_back(b.vertices);
  }
  return out;
}

const Block& LabeledFamily::block(const std::string& name) const {
  for (const Block& b : blocks) {
    if (b.name == name) return b;
  }
  throw ParamError("no block named " + name);
}

nlohmann::ordered_json blocks_json(const LabeledFamily& f) {
  nlohmann::ordered_json blocks = nlohmann::ordered_json::object();
  for (const Block& b : f.blocks) blocks[b.name] = b.vertices.to_vector();
  nlohmann::ordered_json out;
  out["blocks"] = std::move(blocks);
  out["regime"] = f.regime;
  return out;
}

LabeledFamily g_kappa(const ExtremalParams& p) {
  if (p.kind != ConnectivityKind::vertex) throw ParamError("g_kappa needs vertex-connectivity parameters");
  p.validate();
  const int kappa = p.value;
  const int n = p.n;
  const int r = p.r;
  const int h = p.h;
  const int delta = p.delta;
  Builder b(n);

  if (delta >= kappa + h) {
    const int part = delta - kappa + 1;
    const int big = n - kappa - (r - 1) * part;
    require(big >= part, "n >= kappa + r(delta-kappa+1) when delta >= kappa + h");
    const int c = b.take(big);
    const int s = b.take(kappa);
    b.clique(c, big);
    b.clique(s, kappa);
    b.block("clique", c, big);
    b.block("join", s, kappa);
    std::vector<int> parts;
    for (int i = 0; i < r - 1; ++i) {
      parts.push_back(b.take(part));
      b.clique(parts.back(), part);
      b.block("part_" + std::to_string(i + 1), parts.back(), part);
    }
    for (int x = s; x < s + kappa; ++x) {
      for (int v = 0; v < n; ++v) {
        if (v < s || v >= s + kappa) b.edge(x, v);
      }
    }
    return b.finish("delta>=kappa+h");
  }

  const int big = n - kappa - (r - 1) * (h + 1);
  const int c = b.take(big);
  const int s = b.take(kappa);
  b.clique(c, big);
  b.clique(s, kappa);
  b.block("clique", c, big);
  b.block("join", s, kappa);
  for (int i = 0; i < r - 2; ++i) {
    const int first = b.take(h + 1);
    b.clique(first, h + 1);
    b.block(copy_name(i), first, h + 1);
  }
  const int small = b.take(h);
  b.clique(small, h);
  b.block("small", small, h);
  const int outer = b.take(1);
  b.block("outer", outer, 1);

  for (int x = s; x < s + kappa; ++x) {
    for (int v = 0; v < outer; ++v) {
      if (v < s || v >= s + kappa) b.edge(x, v);
    }
  }
  if (delta <= kappa) {
    for (int i = 0; i < delta - 1; ++i) b.edge(outer, s + i);
    b.edge(outer, small);
    return b.finish("delta<=kappa");
  }
  for (int x = s; x < s + kappa; ++x) b.edge(x, outer);
  for (int i = 0; i < delta - kappa; ++i) b.edge(outer, small + i);
  return b.finish("kappa<delta<kappa+h");
}

LabeledFamily b_lambda(const ExtremalParams& p, OrderThreshold threshold) {
  if (p.kind != ConnectivityKind::edge) throw ParamError("b_lambda needs edge-connectivity parameters");
  p.validate(threshold);
  const int lambda = p.value;
  const int r = p.r;
  const int h = p.h;
  const int delta = p.delta;
  const int n1 = p.n - (r - 1) * (h + 1);
  const int bundle = lambda - r + 2;
  require(n1 >= h + 1, "n - (r-1)(h+1) >= h + 1");
  require(n1 >= bundle, "n - (r-1)(h+1) >= lambda - r + 2");

  Builder b(p.n);
  const int rest = b.take(n1 - bundle);
  const int j = b.take(bundle);
  b.clique(rest, n1);
  b.block("rest", rest, n1 - bundle);
  b.block("bundle", j, bundle);
  std::vector<int> copies;
  for (int i = 0; i < r - 2; ++i) {
    copies.push_back(b.take(h + 1));
    b.clique(copies.back(), h + 1);
    b.block(copy_name(i), copies.back(), h + 1);
  }
  const int kd = b.take(delta);
  const int kr = b.take(h - delta);
  b.clique(kd, h);
  b.block("k_delta", kd, delta);
  b.block("k_h_minus_delta", kr, h - delta);
  const int pendant = b.take(1);
  b.block("pendant", pendant, 1);
  for (int i = 0; i < delta; ++i) b.edge(pendant, kd + i);

  if (r == 2) {
    for (int i = 0; i < bundle; ++i) b.edge(j + i, kd);
    return b.finish("r=2");
  }
  for (int i = 0; i < bundle; ++i) b.edge(j + i, copies[0]);
  for (int i = 1; i < r - 2; ++i) b.edge(j, copies[i]);
  b.edge(j, kd);
  return b.finish(r == 3 ? "r=3" : "r>=4");
}

LabeledFamily k_family(const ExtremalParams& p, const KAttachment& a, OrderThreshold threshold) {
  if (p.kind != ConnectivityKind::edge) throw ParamError("k_family needs edge-connectivity parameters");
  p.validate(threshold);
  const int lambda = p.value;
  const int r = p.r;
  const int h = p.h;
  const int delta = p.delta;
  const int small_count = (r - 1) * (h + 1);
  const int n1 = p.n - small_count;
  require(n1 >= h + 1, "n - (r-1)(h+1) >= h + 1");
  if (a.t < 1 || a.t > delta) throw ParamError("malformed attachment: t must lie in [1, delta]");
  const int want = lambda - r + 1 - delta + a.t;
  if (want < 0) throw ParamError("malformed attachment: t too small for lambda (needs lambda - r + 1 - delta + t >= 0)");
  if (static_cast<int>(a.extra.size()) != want) {
    throw ParamError("malformed attachment: expected " + std::to_string(want) + " extra edges, got " +
                     std::to_string(a.extra.size()));
  }
  if (delta - a.t > n1) throw ParamError("malformed attachment: clique too small for the pendant edges");

  Builder b(p.n);
  const int c = b.take(n1);
  b.clique(c, n1);
  b.block("clique", c, n1);
  std::vector<int> firsts;
  for (int i = 0; i < r - 2; ++i) {
    firsts.push_back(b.take(h + 1));
    b.clique(firsts.back(), h + 1);
    b.block(copy_name(i), firsts.back(), h + 1);
  }
  const int small = b.take(h);
  b.clique(small, h);
  b.block("small", small, h);
  firsts.push_back(small);
  const int pendant = b.take(1);
  b.block("pendant", pendant, 1);

  try {
    for (int i = 0; i < a.t; ++i) b.edge(pendant, small + i);
    for (int f : firsts) b.edge(c, f);
    for (int i = 0; i < delta - a.t; ++i) b.edge(pendant, c + i);
    for (const auto& [x, y] : a.extra) {
      if (x < 0 || x >= n1 || y < 0 || y >= small_count) {
        throw ParamError("malformed attachment: extra edge endpoint out of range");
      }
      b.edge(c + x, n1 + y);
    }
  } catch (const ParamError& e) {
    throw ParamError(std::string("malformed attachment: ") + e.what());
  }
  LabeledFamily out = b.finish("t=" + std::to_string(a.t));
  if (min_degree(out.graph) != delta) {
    throw ParamError("malformed attachment: minimum degree " + std::to_string(min_degree(out.graph)) +
                     " differs from delta");
  }
  return out;
}

Graph f_lambda(int n, int delta, int lambda) {
  require(delta >= 1, "delta >= 1");
  require(lambda >= 1, "lambda >= 1");
  require(n <= kMaxOrder, "n <= 64");
  require(n >= 2 * (delta + 1), "n >= 2(delta+1)");
  require(lambda <= n - delta - 1, "lambda <= n - delta - 1");
  const int big = n - delta - 1;
  Builder b(n);
  b.clique(b.take(big), big);
  const int s = b.take(delta + 1);
  b.clique(s, delta + 1);
  for (int i = 0; i < lambda; ++i) b.edge(s, i);
  return b.finish("").graph;
}

SelfCheck self_check(const LabeledFamily& f, const ExtremalParams& p) {
  SelfCheck out;
  out.order = f.graph.order();
  out.min_degree = min_degree(f.graph);
  if (is_connected(f.graph)) {
    std::optional<int> v;
    if (p.kind == ConnectivityKind::vertex) {
      v = kappa_h_r_at_most(f.graph, p.r, p.h, p.value);
      if (!v) {
        const KappaResult full = kappa_h_r(f.graph, p.r, p.h);
        if (full.defined()) v = full.value();
      }
    } else {
      v = lambda_h_r_at_most(f.graph, p.r, p.h, p.value);
      if (!v) {
        const LambdaResult full = lambda_h_r(f.graph, p.r, p.h);
        if (full.defined()) v = full.value();
      }
    }
    out.connectivity = v.value_or(-1);
  }
  out.passed = out.order == p.n && out.min_degree == p.delta && out.connectivity == p.value;
  return out;
}

}  // namespace spx
