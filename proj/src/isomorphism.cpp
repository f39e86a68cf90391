#include "spx/isomorphism.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "spx/errors.hpp"

namespace spx {

std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  const int n = g.order();
  if (static_cast<int>(colors.size()) != n) throw ParamError("initial coloring length does not match order");

  auto compress = [](std::vector<std::vector<int>> sigs) {
    std::vector<std::vector<int>> keys = sigs;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> ids(sigs.size());
    for (std::size_t v = 0; v < sigs.size(); ++v) {
      ids[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sigs[v]) - keys.begin());
    }
    return std::pair{ids, static_cast<int>(keys.size())};
  };

  std::vector<std::vector<int>> sigs(n);
  for (int v = 0; v < n; ++v) sigs[v] = {colors[v]};
  auto [current, count] = compress(sigs);

  while (true) {
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{current[v]};
      for (Word w = g.row(v); w != 0; w &= w - 1) s.push_back(current[std::countr_zero(w)]);
      std::sort(s.begin() + 1, s.end());
      sigs[v] = std::move(s);
    }
    auto [next, next_count] = compress(sigs);
    if (next_count == count) return next;
    current = std::move(next);
    count = next_count;
  }
}

namespace {

struct Matcher {
  const Graph& g;
  const Graph& h;
  std::vector<int> color;  // colors of the disjoint union: g at [0, n), h at [n, 2n)
  std::vector<int> order;
  std::vector<int> image;  // image[a] for a in g, -1 if unmapped
  Word used = 0;
  int n = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int a = order[depth];
    Word expected = 0;
    Word placed = 0;
    for (std::size_t i = 0; i < depth; ++i) {
      const int prev = order[i];
      placed |= bit(image[prev]);
      if (g.adjacent(a, prev)) expected |= bit(image[prev]);
    }
    for (int b = 0; b < n; ++b) {
      if ((used >> b) & 1U) continue;
      if (color[n + b] != color[a]) continue;
      if ((h.row(b) & placed) != expected) continue;
      image[a] = b;
      used |= bit(b);
      if (extend(depth + 1)) return true;
      used &= ~bit(b);
      image[a] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() > kMaxIsomorphismOrder || h.order() > kMaxIsomorphismOrder) {
    throw ParamError("isomorphism search limited to order <= " + std::to_string(kMaxIsomorphismOrder));
  }
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  const int n = g.order();
  if (n == 0) return std::vector<int>{};

  Matcher m{g, h, refine_colors(disjoint_union(g, h), std::vector<int>(2 * n, 0)), {}, std::vector<int>(n, -1)};
  m.n = n;

  std::vector<int> hist_g(2 * n, 0), hist_h(2 * n, 0);
  for (int v = 0; v < n; ++v) {
    ++hist_g[m.color[v]];
    ++hist_h[m.color[n + v]];
  }
  if (hist_g != hist_h) return std::nullopt;

  // Most constrained first: small color classes, then many already-ordered neighbours.
  Word ordered = 0;
  while (static_cast<int>(m.order.size()) < n) {
    int best = -1;
    auto key = [&](int v) {
      return std::tuple{-std::popcount(g.row(v) & ordered), hist_g[m.color[v]], -g.degree(v), v};
    };
    for (int v = 0; v < n; ++v) {
      if ((ordered >> v) & 1U) continue;
      if (best < 0 || key(v) < key(best)) best = v;
    }
    m.order.push_back(best);
    ordered |= bit(best);
  }

  if (!m.extend(0)) return std::nullopt;
  return m.image;
}

bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace spx
