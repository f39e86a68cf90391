#include "spx/graph_io.hpp"

#include <cctype>
#include <sstream>

#include "spx/errors.hpp"

namespace spx {

namespace {

constexpr char kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw FormatError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw FormatError("graph6: byte outside the printable range 63..126");
  }
  std::size_t pos = 0;
  int n = text[0] - kBias;
  pos = 1;
  if (n == 63) {
    if (text.size() < 4 || text[1] == 126) throw FormatError("graph6: unsupported or truncated size field");
    n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
    pos = 4;
  }
  if (n > kMaxOrder) throw FormatError("graph6: order " + std::to_string(n) + " exceeds 64");
  const std::size_t bits = static_cast<std::size_t>(pair_count(n));
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw FormatError("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                      std::to_string(text.size() - pos));
  }
  std::vector<Word> rows(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - kBias;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw FormatError("graph6: nonzero padding bits");
  }
  return Graph::from_rows(rows);
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json to_edge_list_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph from_edge_list_json(const nlohmann::json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    if (n < 0 || n > kMaxOrder) throw FormatError("edge list: n outside [0, 64]");
    std::vector<Edge> edges;
    for (const auto& pair : doc.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) throw FormatError("edge list: each edge must be [u, v]");
      const int u = pair[0].get<int>();
      const int v = pair[1].get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
        throw FormatError("edge list: invalid edge [" + std::to_string(u) + ", " + std::to_string(v) + "]");
      }
      edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
}

Graph parse_graph(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(std::string("edge list: ") + e.what());
    }
    return from_edge_list_json(doc);
  }
  return graph6_decode(body);
}

}  // namespace spx
