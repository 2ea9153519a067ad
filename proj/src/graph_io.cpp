#include "strongq/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace strongq {

namespace {

struct EdgeLine {
  int u, v;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int declared_n = -1;
  std::vector<EdgeLine> edges;
  int max_label = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "n") {
      if (!(ls >> declared_n) || declared_n < 0)
        throw ParseError("line " + std::to_string(lineno) + ": bad header");
      continue;
    }
    int u = 0, v = 0;
    std::string rest;
    try {
      u = std::stoi(first);
    } catch (...) {
      throw ParseError("line " + std::to_string(lineno) + ": bad vertex '" + first + "'");
    }
    if (!(ls >> v))
      throw ParseError("line " + std::to_string(lineno) + ": expected two vertex labels");
    if (ls >> rest)
      throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
    if (u < 1 || v < 1 || u == v)
      throw ParseError("line " + std::to_string(lineno) + ": invalid edge " +
                       std::to_string(u) + " " + std::to_string(v));
    edges.push_back({u, v});
    max_label = std::max({max_label, u, v});
  }
  int n = declared_n >= 0 ? declared_n : max_label;
  if (max_label > n) throw ParseError("edge label exceeds declared vertex count");
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (auto [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string");
  if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);

  size_t pos = 0;
  auto byte_at = [&](size_t i) -> int {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError("invalid graph6 byte at position " + std::to_string(i));
    return c - 63;
  };

  int n;
  if (byte_at(0) < 63) {
    n = byte_at(0);
    pos = 1;
  } else {
    // long form: 126 followed by three bytes of 18-bit n
    if (text.size() < 4) throw ParseError("truncated graph6 header");
    n = (byte_at(1) << 12) | (byte_at(2) << 6) | byte_at(3);
    pos = 4;
  }
  if (n > 64) throw ResourceError("graph6 order beyond supported 64");

  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(text.size() - pos) != nbytes)
    throw ParseError("graph6 body length mismatch at byte " + std::to_string(pos));

  Graph g(n);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      int value = byte_at(pos + bit / 6);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  // Padding bits must be zero.
  for (int b = nbits; b < nbytes * 6; ++b)
    if ((byte_at(pos + b / 6) >> (5 - b % 6)) & 1)
      throw ParseError("nonzero padding bits in graph6 body");
  return g;
}

std::string emit_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62) throw ResourceError("graph6 emission limited to n <= 62");
  std::string out;
  out += static_cast<char>(n + 63);
  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  std::vector<int> bytes(nbytes, 0);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (g.has_edge(u, v)) bytes[bit / 6] |= 1 << (5 - bit % 6);
  for (int b : bytes) out += static_cast<char>(b + 63);
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  bool g6 = path.size() > 3 && path.substr(path.size() - 3) == ".g6";
  return parse_graph(buf.str(), g6 ? GraphFormat::Graph6 : GraphFormat::EdgeList);
}

}  // namespace strongq
