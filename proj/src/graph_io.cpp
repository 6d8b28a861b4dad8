#include "hoffgraph/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hoffgraph {

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0) throw std::invalid_argument("edge list: malformed header, expected \"n m\"");
  Graph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || v >= n || u >= v)
      throw std::invalid_argument("edge list: edge " + std::to_string(u) + " " + std::to_string(v) + " violates 0 <= u < v < n");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("edge list: trailing content after " + std::to_string(m) + " edges");
  return g;
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"order", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON: expected object with \"order\" and \"edges\"");
  const auto n = j.at("order").get<long long>();
  if (n < 1) throw std::invalid_argument("graph JSON: order must be positive");
  Graph g(static_cast<std::size_t>(n));
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: each edge must be a pair");
    const auto u = e[0].get<long long>(), v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw std::invalid_argument("graph JSON: invalid edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const auto n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw std::invalid_argument("graph6: order too large");
  }
  int bits = 0, acc = 0;
  for (std::size_t v = 1; v < n; ++v)
    for (std::size_t u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(static_cast<int>(u), static_cast<int>(v)) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = acc = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto sextet = [&](std::size_t i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside printable range 63..126");
    return c - 63;
  };
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  std::size_t n = 0, pos = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(sextet(0));
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw std::invalid_argument("graph6: unsupported size prefix");
    n = (static_cast<std::size_t>(sextet(1)) << 12) | (static_cast<std::size_t>(sextet(2)) << 6) | static_cast<std::size_t>(sextet(3));
    pos = 4;
  }
  const auto bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const auto byte_count = (bit_count + 5) / 6;
  if (text.size() != pos + byte_count)
    throw std::invalid_argument("graph6: expected " + std::to_string(byte_count) + " data bytes for order " + std::to_string(n));
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t v = 1; v < n; ++v)
    for (std::size_t u = 0; u < v; ++u, ++k) {
      const int word = sextet(pos + k / 6);
      if ((word >> (5 - k % 6)) & 1) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  if (bit_count % 6 != 0) {
    const int word = sextet(pos + byte_count - 1);
    if (word & ((1 << (6 - bit_count % 6)) - 1)) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return g;
}

std::string format_graph(const Graph& g, GraphFormat fmt) {
  switch (fmt) {
    case GraphFormat::edge_list: return to_edge_list(g);
    case GraphFormat::json: return to_json(g).dump() + "\n";
    case GraphFormat::graph6: return to_graph6(g) + "\n";
  }
  return {};
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edges" || name == "edge-list" || name == "edgelist" || name == "text") return GraphFormat::edge_list;
  if (name == "json") return GraphFormat::json;
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  throw std::invalid_argument("unknown graph format: " + std::string(name));
}

Graph parse_graph(std::string_view text, std::optional<GraphFormat> fmt) {
  if (!fmt) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '{') {
      fmt = GraphFormat::json;
    } else {
      std::istringstream probe{std::string(text)};
      long long a = 0, b = 0;
      std::string first_line;
      std::getline(probe, first_line);
      std::istringstream line(first_line);
      std::string extra;
      fmt = (line >> a >> b && !(line >> extra)) ? GraphFormat::edge_list : GraphFormat::graph6;
    }
  }
  switch (*fmt) {
    case GraphFormat::json: return graph_from_json(nlohmann::json::parse(text));
    case GraphFormat::edge_list: {
      std::istringstream in{std::string(text)};
      return from_edge_list(in);
    }
    case GraphFormat::graph6: {
      auto nl = text.find('\n');
      return from_graph6(text.substr(0, nl));
    }
  }
  throw std::invalid_argument("unreachable graph format");
}

Graph read_graph_file(const std::string& path, std::optional<GraphFormat> fmt) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), fmt);
}

}  // namespace hoffgraph
