#include "dcut/io.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>

#include "dcut/errors.hpp"

namespace dcut {

namespace {

const std::string kHeader = ">>graph6<<";

std::size_t payload_bytes(std::int64_t n) {
  std::int64_t bits = n * (n - 1) / 2;
  return std::size_t((bits + 5) / 6);
}

}  // namespace

Graph parse_graph6(const std::string& input) {
  std::string s = input;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t base = 0;
  if (s.rfind(kHeader, 0) == 0) {
    base = kHeader.size();
    s = s.substr(base);
  }
  if (s.empty()) throw Graph6ParseError("empty graph6 string", base);

  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned char c = s[i];
    if (c < 63 || c > 126) throw Graph6ParseError("byte out of graph6 range", base + i);
  }

  // Size field.
  std::int64_t n = 0;
  std::size_t pos = 0;
  if (s[0] != '~') {
    n = s[0] - 63;
    pos = 1;
  } else if (s.size() >= 2 && s[1] != '~') {
    if (s.size() < 4) throw Graph6ParseError("truncated long-form size", base + s.size());
    n = (std::int64_t(s[1] - 63) << 12) | (std::int64_t(s[2] - 63) << 6) | (s[3] - 63);
    if (n < 63) throw Graph6ParseError("non-canonical long-form size", base + 1);
    pos = 4;
  } else {
    if (s.size() < 8) throw Graph6ParseError("truncated long-form size", base + s.size());
    n = 0;
    for (int k = 2; k < 8; ++k) n = (n << 6) | (s[k] - 63);
    if (n < 258048) throw Graph6ParseError("non-canonical long-form size", base + 2);
    pos = 8;
  }
  if (n > 100000) throw Graph6ParseError("vertex count too large", base);

  std::size_t need = payload_bytes(n);
  if (s.size() - pos < need)
    throw Graph6ParseError("truncated adjacency payload", base + s.size());
  if (s.size() - pos > need)
    throw Graph6ParseError("trailing bytes after adjacency payload", base + pos + need);

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      unsigned char byte = s[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero.
  std::size_t total_bits = need * 6;
  for (std::size_t b = bit; b < total_bits; ++b) {
    unsigned char byte = s[pos + b / 6] - 63;
    if ((byte >> (5 - b % 6)) & 1)
      throw Graph6ParseError("nonzero padding bit", base + pos + b / 6);
  }
  return Graph::from_edges(int(n), edges);
}

std::string emit_graph6(const Graph& g) {
  std::int64_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(char(((n >> 12) & 63) + 63));
    out.push_back(char(((n >> 6) & 63) + 63));
    out.push_back(char((n & 63) + 63));
  } else {
    out.push_back('~');
    out.push_back('~');
    for (int k = 5; k >= 0; --k) out.push_back(char(((n >> (6 * k)) & 63) + 63));
  }
  std::size_t need = payload_bytes(n);
  std::string payload(need, 0);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.has_edge(i, j)) payload[bit / 6] |= char(1 << (5 - bit % 6));
  for (auto& c : payload) c += 63;
  return out + payload;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::int64_t n, m;
  if (!(in >> n >> m)) throw ParseError("edge list: expected header \"n m\"");
  if (n < 0 || m < 0) throw ParseError("edge list: negative counts");
  std::vector<Edge> edges;
  edges.reserve(std::size_t(m));
  for (std::int64_t k = 0; k < m; ++k) {
    std::int64_t u, v;
    if (!(in >> u >> v))
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                       std::to_string(k));
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge list: endpoint out of range in edge " + std::to_string(k));
    if (u == v) throw ParseError("edge list: self-loop in edge " + std::to_string(k));
    edges.emplace_back(int(std::min(u, v)), int(std::max(u, v)));
  }
  std::string rest;
  if (in >> rest) throw ParseError("edge list: trailing content \"" + rest + "\"");
  return Graph::from_edges(int(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph_auto(const std::string& text) {
  // Edge lists start with two whitespace-separated integers.
  std::istringstream in(text);
  std::string first, second;
  if (in >> first >> second) {
    auto numeric = [](const std::string& t) {
      if (t.empty()) return false;
      for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      return true;
    };
    if (numeric(first) && numeric(second)) return parse_edge_list(text);
  }
  // Otherwise: first non-empty line as graph6.
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) return parse_graph6(line);
  }
  throw ParseError("empty graph input");
}

}  // namespace dcut
