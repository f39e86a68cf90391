#include "spx/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "spx/isomorphism.hpp"

namespace spx {

void SpectralConfig::validate() const {
  if (!(tolerance > 0.0 && tolerance < comparison_epsilon && comparison_epsilon < 1.0)) {
    throw ParamError("spectral config requires 0 < tolerance < comparison_epsilon < 1");
  }
  if (max_iterations <= 0) throw ParamError("spectral config requires max_iterations > 0");
}

namespace {

struct PowerResult {
  double rho;
  double residual;
  long iterations;
};

// x holds the all-ones start on entry and the max-normalized Perron vector on exit.
PowerResult power_iterate(const Graph& g, const SpectralConfig& cfg, std::span<double> x) {
  const int n = g.order();
  std::array<double, kMaxOrder> y{};
  for (long it = 1; it <= cfg.max_iterations; ++it) {
    double xy = 0.0;
    double xx = 0.0;
    for (int v = 0; v < n; ++v) {
      double s = 0.0;
      for (Word w = g.row(v); w != 0; w &= w - 1) s += x[std::countr_zero(w)];
      y[v] = s;
      xy += x[v] * s;
      xx += x[v] * x[v];
    }
    const double rho = xy / xx;
    double residual = 0.0;
    for (int v = 0; v < n; ++v) residual = std::max(residual, std::abs(y[v] - rho * x[v]));
    if (residual <= cfg.tolerance) return {rho, residual, it};

    double top = 0.0;
    for (int v = 0; v < n; ++v) {
      y[v] += x[v];
      top = std::max(top, y[v]);
    }
    for (int v = 0; v < n; ++v) x[v] = y[v] / top;
  }
  throw ConvergenceError("power iteration did not reach residual " + std::to_string(cfg.tolerance) + " within " +
                         std::to_string(cfg.max_iterations) + " iterations");
}

void check_perron_input(const Graph& g, const SpectralConfig& cfg) {
  cfg.validate();
  if (g.order() == 0) throw ParamError("spectral radius of the null graph is undefined");
  if (!is_connected(g)) throw ParamError("Perron data requires a connected graph");
}

}  // namespace

PerronData perron(const Graph& g, const SpectralConfig& cfg) {
  check_perron_input(g, cfg);
  PerronData out;
  out.vector.assign(g.order(), 1.0);
  if (g.order() == 1) return out;
  const PowerResult r = power_iterate(g, cfg, out.vector);
  out.rho = r.rho;
  out.residual = r.residual;
  out.iterations = r.iterations;
  return out;
}

double spectral_radius(const Graph& g, const SpectralConfig& cfg) {
  check_perron_input(g, cfg);
  if (g.order() == 1) return 0.0;
  std::array<double, kMaxOrder> x;
  x.fill(1.0);
  return power_iterate(g, cfg, std::span<double>(x.data(), g.order())).rho;
}

nlohmann::json to_json(const PerronData& p) {
  return {{"rho", p.rho}, {"vector", p.vector}, {"residual", p.residual}, {"iterations", p.iterations}};
}

NonEquitablePartition::NonEquitablePartition(int vertex, int part)
    : ParamError("partition is not equitable: vertex " + std::to_string(vertex) +
                 " has a different neighbour count into part " + std::to_string(part) + " than its part mates"),
      vertex_(vertex),
      part_(part) {}

namespace {

std::vector<Word> check_partition(const Graph& g, std::span<const VertexSet> parts) {
  std::vector<Word> masks;
  Word seen = 0;
  for (const VertexSet& p : parts) {
    if (p.host_order() != g.order()) throw ParamError("partition part has the wrong host order");
    if (p.empty()) throw ParamError("partition has an empty part");
    if ((seen & p.bits()) != 0) throw ParamError("partition parts overlap");
    seen |= p.bits();
    masks.push_back(p.bits());
  }
  if (seen != g.all()) throw ParamError("partition does not cover every vertex");
  return masks;
}

}  // namespace

QuotientMatrix equitable_quotient(const Graph& g, std::span<const VertexSet> parts) {
  const std::vector<Word> masks = check_partition(g, parts);
  const int k = static_cast<int>(masks.size());
  QuotientMatrix q;
  q.cells.assign(k, std::vector<int>(k, 0));
  q.part_map.assign(g.order(), -1);
  for (int i = 0; i < k; ++i) {
    q.part_sizes.push_back(std::popcount(masks[i]));
    const int first = std::countr_zero(masks[i]);
    for (int j = 0; j < k; ++j) q.cells[i][j] = std::popcount(g.row(first) & masks[j]);
    for (Word w = masks[i]; w != 0; w &= w - 1) {
      const int v = std::countr_zero(w);
      q.part_map[v] = i;
      for (int j = 0; j < k; ++j) {
        if (std::popcount(g.row(v) & masks[j]) != q.cells[i][j]) throw NonEquitablePartition(v, j);
      }
    }
  }
  return q;
}

std::vector<VertexSet> equitable_refinement(const Graph& g, std::span<const VertexSet> parts) {
  const std::vector<Word> masks = check_partition(g, parts);
  std::vector<int> initial(g.order(), 0);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (Word w = masks[i]; w != 0; w &= w - 1) initial[std::countr_zero(w)] = static_cast<int>(i);
  }
  const std::vector<int> colors = refine_colors(g, std::move(initial));
  std::vector<Word> by_color;
  for (int v = 0; v < g.order(); ++v) {
    if (colors[v] >= static_cast<int>(by_color.size())) by_color.resize(colors[v] + 1, 0);
    by_color[colors[v]] |= bit(v);
  }
  std::sort(by_color.begin(), by_color.end(),
            [](Word a, Word b) { return std::countr_zero(a) < std::countr_zero(b); });
  std::vector<VertexSet> out;
  for (Word c : by_color) out.emplace_back(c, g.order());
  return out;
}

namespace {

// Number of eigenvalues of the symmetric matrix s strictly above lambda.
int eigenvalues_above(const std::vector<std::vector<double>>& s, double lambda) {
  const std::size_t k = s.size();
  std::vector<std::vector<double>> a = s;
  for (std::size_t i = 0; i < k; ++i) a[i][i] -= lambda;
  constexpr double kTiny = 1e-300;
  int positive = 0;
  for (std::size_t p = 0; p < k; ++p) {
    double pivot = a[p][p];
    if (std::abs(pivot) < kTiny) pivot = -kTiny;
    if (pivot > 0) ++positive;
    for (std::size_t i = p + 1; i < k; ++i) {
      const double f = a[i][p] / pivot;
      for (std::size_t j = p + 1; j < k; ++j) a[i][j] -= f * a[p][j];
    }
  }
  return positive;
}

}  // namespace

double quotient_spectral_radius(const QuotientMatrix& b, const SpectralConfig& cfg) {
  cfg.validate();
  const int k = b.parts();
  if (k == 0) throw ParamError("empty quotient matrix");
  if (k > kMaxQuotientParts) {
    throw ParamError("quotient has " + std::to_string(k) + " parts; at most " +
                     std::to_string(kMaxQuotientParts) + " supported");
  }
  int n = 0;
  for (int size : b.part_sizes) n += size;

  std::vector<std::vector<double>> s(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) s[i][j] = std::sqrt(static_cast<double>(b.cells[i][j]) * b.cells[j][i]);
  }

  double lo = 0.0;
  double hi = std::max(0, n - 1);
  if (eigenvalues_above(s, lo) == 0) return 0.0;
  // Bisection stops at cfg.tolerance or when the midpoint no longer moves.
  while (hi - lo > cfg.tolerance * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (eigenvalues_above(s, mid) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Graph kelmans_shift(const Graph& g, int u, int v, const VertexSet& moved) {
  const int n = g.order();
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw ParamError("kelmans shift needs two distinct vertices");
  if (moved.host_order() != n) throw ParamError("moved set has the wrong host order");
  if (moved.empty()) throw ParamError("kelmans shift needs a nonempty moved set");
  if (moved.contains(u) || moved.contains(v)) throw ParamError("moved set may not contain u or v");
  const Word allowed = g.row(v) & ~g.row(u);
  if ((moved.bits() & ~allowed) != 0) throw ParamError("moved set must lie in N(v) \\ N(u)");
  std::vector<Word> rows(g.rows().begin(), g.rows().end());
  for (Word w = moved.bits(); w != 0; w &= w - 1) {
    const int x = std::countr_zero(w);
    rows[v] &= ~bit(x);
    rows[x] &= ~bit(v);
    rows[u] |= bit(x);
    rows[x] |= bit(u);
  }
  return Graph::from_rows(rows);
}

double hsf_bound(int n, int m, int delta) {
  if (delta < 1) throw ParamError("hsf bound needs minimum degree >= 1");
  const double d = delta;
  const double radicand = 2.0 * m - static_cast<double>(n) * d + (d + 1.0) * (d + 1.0) / 4.0;
  if (radicand < 0.0) throw ParamError("hsf bound radicand is negative for (n, m, delta)");
  return (d - 1.0) / 2.0 + std::sqrt(radicand);
}

bool hsf_equality_class(const Graph& g) {
  const int delta = min_degree(g);
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d != delta && d != g.order() - 1) return false;
  }
  return true;
}

double shifted_product_gap(double a, double b, double t) { return a * b - (a + t) * (b - t); }

bool shifted_product_decreases(double a, double b, double t) {
  if (!(b > a && a > t && t >= 1.0 && std::abs(a - b) < 1.0)) {
    throw ParamError("requires b > a > t >= 1 and |a - b| < 1");
  }
  return a * b > (a + t) * (b - t);
}

bool clique_transfer_gains_edges(long a, long b) {
  if (!(a >= b && b >= 3)) throw ParamError("requires a >= b >= 3");
  auto c2 = [](long x) { return x * (x - 1) / 2; };
  return c2(a) + c2(b) < c2(a + 1) + c2(b - 1);
}

std::pair<double, double> clique_bracket(int n, int r, int h) {
  const double top = static_cast<double>(n) - static_cast<double>(r - 1) * (h + 1);
  return {top - 1.0, top};
}

}  // namespace spx
