#include "graph_io.h"

#include <sstream>

namespace d4c {
namespace {

// graph6: N(n) header then the upper triangle of the adjacency matrix in
// column order (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), packed 6 bits per
// printable byte (value + 63).
std::string g6_number(long n) {
  if (n < 0 || n > 258047) throw std::invalid_argument("graph6 size out of range");
  if (n <= 62) return std::string(1, static_cast<char>(n + 63));
  std::string s(1, static_cast<char>(126));
  s += static_cast<char>(((n >> 12) & 63) + 63);
  s += static_cast<char>(((n >> 6) & 63) + 63);
  s += static_cast<char>((n & 63) + 63);
  return s;
}

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out = g6_number(n);
  int bit = 5, acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) acc |= 1 << bit;
      if (--bit < 0) {
        out += static_cast<char>(acc + 63);
        bit = 5;
        acc = 0;
      }
    }
  if (bit != 5) out += static_cast<char>(acc + 63);
  return out;
}

Graph from_graph6(const std::string& s) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) throw std::invalid_argument("graph6: truncated");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad byte");
    return c - 63;
  };
  long n;
  if (!s.empty() && static_cast<unsigned char>(s[0]) == 126) {
    ++pos;
    long a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = next();
  }
  std::vector<Edge> edges;
  long nbits = n * (n - 1) / 2;
  int bit = -1, acc = 0;
  int i = 0, j = 1;
  for (long k = 0; k < nbits; ++k) {
    if (bit < 0) {
      acc = next();
      bit = 5;
    }
    if (acc & (1 << bit)) edges.emplace_back(i, j);
    --bit;
    if (++i == j) {
      i = 0;
      ++j;
    }
  }
  if (pos != s.size()) throw std::invalid_argument("graph6: length mismatch");
  return Graph::build(static_cast<int>(n), edges);
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream o;
  o << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) o << "e " << e.u + 1 << " " << e.v + 1 << "\n";
  return o.str();
}

Graph from_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  long m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string kind;
      ls >> kind >> n >> m;
      if (kind != "edge" || n < 0 || !ls) throw std::invalid_argument("dimacs: bad header");
    } else if (tag == "e") {
      long u, v;
      if (!(ls >> u >> v)) throw std::invalid_argument("dimacs: bad edge line");
      if (n < 0) throw std::invalid_argument("dimacs: edge before header");
      if (u < 1 || v < 1 || u > n || v > n) throw std::invalid_argument("dimacs: edge out of range");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
  }
  if (n < 0) throw std::invalid_argument("dimacs: missing header");
  return Graph::build(n, edges);
}

std::string dot_name(const Graph& g, int v) {
  std::string l = g.label(v).to_string();
  return l.empty() ? "v" + std::to_string(v) : l;
}

std::string to_dot(const Graph& g) {
  std::ostringstream o;
  o << "graph g {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    o << "  \"" << dot_name(g, v) << "\";\n";
  for (const Edge& e : g.edges())
    o << "  \"" << dot_name(g, e.u) << "\" -- \"" << dot_name(g, e.v) << "\";\n";
  o << "}\n";
  return o.str();
}

Graph from_dot(const std::string& text) {
  // Minimal reader for the writer's own output: quoted names, "--" edges.
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  size_t pos = 0;
  auto read_quoted = [&](size_t from, std::string* out) -> size_t {
    size_t a = text.find('"', from);
    if (a == std::string::npos) return std::string::npos;
    size_t b = text.find('"', a + 1);
    if (b == std::string::npos) throw std::invalid_argument("dot: unterminated name");
    *out = text.substr(a + 1, b - a - 1);
    return b + 1;
  };
  while (true) {
    std::string first;
    pos = read_quoted(pos, &first);
    if (pos == std::string::npos) break;
    size_t rest = text.find_first_not_of(" \t", pos);
    if (rest != std::string::npos && text.compare(rest, 2, "--") == 0) {
      std::string second;
      pos = read_quoted(rest + 2, &second);
      if (pos == std::string::npos) throw std::invalid_argument("dot: dangling edge");
      edges.emplace_back(first, second);
    } else {
      names.push_back(first);
    }
  }
  auto id_of = [&](const std::string& s) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i);
    names.push_back(s);
    return static_cast<int>(names.size() - 1);
  };
  std::vector<Edge> es;
  for (auto& [a, b] : edges) es.emplace_back(id_of(a), id_of(b));
  return Graph::build(static_cast<int>(names.size()), es);
}

}  // namespace

std::string serialize(const Graph& g, Format f) {
  switch (f) {
    case Format::Graph6: return to_graph6(g);
    case Format::Dimacs: return to_dimacs(g);
    case Format::Dot: return to_dot(g);
  }
  throw std::logic_error("bad format");
}

Graph parse(const std::string& text, Format f) {
  switch (f) {
    case Format::Graph6: return from_graph6(text);
    case Format::Dimacs: return from_dimacs(text);
    case Format::Dot: return from_dot(text);
  }
  throw std::logic_error("bad format");
}

}  // namespace d4c
