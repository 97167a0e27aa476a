#include "commgraph/graph.hpp"

#include "commgraph/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace commgraph {

SimpleGraph::SimpleGraph(std::size_t vertex_count)
    : rows_(vertex_count, VertexSet(vertex_count)) {}

SimpleGraph SimpleGraph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  SimpleGraph g(vertex_count);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void SimpleGraph::check_vertex(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= rows_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph on " +
                            std::to_string(rows_.size()) + " vertices");
  }
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  rows_[u].set(v);
  rows_[v].set(u);
}

void SimpleGraph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u].reset(v);
  rows_[v].reset(u);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    for (auto v = rows_[u].find_next(u); v != VertexSet::npos; v = rows_[u].find_next(v)) {
      out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return out;
}

std::string SimpleGraph::label(Vertex v) const {
  check_vertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

void SimpleGraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != rows_.size()) {
    throw std::invalid_argument("expected " + std::to_string(rows_.size()) + " labels, got " +
                                std::to_string(labels.size()));
  }
  labels_ = std::move(labels);
}

std::size_t edge_count(const SimpleGraph& g) {
  std::size_t twice = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) twice += g.degree(static_cast<Vertex>(v));
  return twice / 2;
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

SimpleGraph complement(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  SimpleGraph out(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
        out.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }
  out.set_labels(g.labels());
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> vertices) {
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex v : vertices) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " not in graph on " +
                              std::to_string(g.vertex_count()) + " vertices");
    }
    if (seen[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
  SimpleGraph out(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (g.adjacent(vertices[a], vertices[b])) {
        out.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
      }
    }
  }
  if (g.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (Vertex v : vertices) labels.push_back(g.labels()[v]);
    out.set_labels(std::move(labels));
  }
  return out;
}

std::vector<Vertex> dominating_vertices(const SimpleGraph& g) {
  std::vector<Vertex> out;
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(static_cast<Vertex>(v)) + 1 == n) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

bool is_triangle_free(const SimpleGraph& g) {
  for (const auto& [u, v] : g.edges()) {
    if ((g.neighbors(u) & g.neighbors(v)).any()) return false;
  }
  return true;
}

bool is_complete(const SimpleGraph& g) {
  return dominating_vertices(g).size() == g.vertex_count();
}

std::vector<std::size_t> degree_sequence(const SimpleGraph& g) {
  std::vector<std::size_t> degrees;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) degrees.push_back(g.degree(static_cast<Vertex>(v)));
  std::sort(degrees.rbegin(), degrees.rend());
  return degrees;
}

// ---------------------------------------------------------------------------
// Canonization

namespace {

// Branch and bound over vertex orderings. Placing position j fixes the bits
// of pairs (0,j)..(j-1,j), which form the next block of the code, so a
// partial ordering whose prefix exceeds the best known prefix is abandoned.
class Canonizer {
 public:
  explicit Canonizer(const SimpleGraph& g)
      : g_(g), n_(g.vertex_count()), total_bits_(n_ * (n_ - (n_ > 0)) / 2), order_(n_), used_(n_) {
    if (n_ > kMaxCanonicalVertices) {
      throw SizeGuardError("canonical form needs at most " + std::to_string(kMaxCanonicalVertices) +
                           " vertices, got " + std::to_string(n_));
    }
  }

  void run() { place(0, 0); }
  std::uint32_t best_bits() const { return best_bits_; }
  const std::vector<Vertex>& best_order() const { return best_order_; }

 private:
  void place(std::size_t position, std::uint32_t prefix) {
    if (position == n_) {
      if (!have_best_ || prefix < best_bits_) {
        best_bits_ = prefix;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    const std::size_t prefix_len = (position + 1) * position / 2;
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::uint32_t next = prefix;
      for (std::size_t i = 0; i < position; ++i) {
        next = (next << 1) | static_cast<std::uint32_t>(g_.adjacent(order_[i], static_cast<Vertex>(v)));
      }
      if (have_best_ && next > (best_bits_ >> (total_bits_ - prefix_len))) continue;
      used_[v] = true;
      order_[position] = static_cast<Vertex>(v);
      place(position + 1, next);
      used_[v] = false;
    }
  }

  const SimpleGraph& g_;
  std::size_t n_;
  std::size_t total_bits_;
  std::vector<Vertex> order_;
  std::vector<bool> used_;
  std::vector<Vertex> best_order_;
  std::uint32_t best_bits_ = 0;
  bool have_best_ = false;
};

}  // namespace

CanonicalCode canonical_code(const SimpleGraph& g) {
  Canonizer c(g);
  c.run();
  return {static_cast<std::uint32_t>(g.vertex_count()), c.best_bits()};
}

SimpleGraph canonical_form(const SimpleGraph& g) {
  Canonizer c(g);
  c.run();
  return induced_subgraph(g, c.best_order());
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_code(a) == canonical_code(b);
}

// Grows classes one vertex at a time: every n-vertex graph is some
// (n-1)-vertex graph plus a vertex with an arbitrary neighbourhood.
std::vector<SimpleGraph> enumerate_graphs_up_to_iso(std::size_t n) {
  if (n < 1 || n > 7) {
    throw SizeGuardError("graph enumeration supports 1..7 vertices, got " + std::to_string(n));
  }
  std::vector<SimpleGraph> level{SimpleGraph(1)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::map<std::uint32_t, SimpleGraph> classes;
    for (const auto& base : level) {
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        SimpleGraph g(k);
        for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
        for (std::size_t u = 0; u + 1 < k; ++u) {
          if (mask >> u & 1u) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(k - 1));
        }
        Canonizer c(g);
        c.run();
        if (!classes.contains(c.best_bits())) {
          classes.emplace(c.best_bits(), induced_subgraph(g, c.best_order()));
        }
      }
    }
    level.clear();
    for (auto& [code, g] : classes) level.push_back(std::move(g));
  }
  return level;
}

// ---------------------------------------------------------------------------
// Text formats

std::string to_edge_list(const SimpleGraph& g, bool with_labels) {
  std::ostringstream os;
  os << g.vertex_count() << '\n';
  if (with_labels && g.has_labels()) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      os << "# label " << v << ' ' << g.labels()[v] << '\n';
    }
  }
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

SimpleGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  long long n = -1;
  std::vector<Edge> edges;
  std::map<long long, std::string> labels;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(line_number) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream fields(line.substr(first + 1));
      std::string keyword;
      long long v = -1;
      if (fields >> keyword && keyword == "label" && fields >> v) {
        std::string rest;
        std::getline(fields, rest);
        const auto start = rest.find_first_not_of(" \t");
        labels[v] = start == std::string::npos ? "" : rest.substr(start);
      }
      continue;
    }
    std::istringstream fields(line);
    std::vector<long long> values;
    long long x = 0;
    while (fields >> x) values.push_back(x);
    if (!fields.eof()) fail("expected integers");
    if (n < 0) {
      if (values.size() != 1 || values[0] < 0) fail("expected a non-negative vertex count");
      n = values[0];
      continue;
    }
    if (values.size() != 2) fail("expected 'u v'");
    const long long u = values[0], v = values[1];
    if (u < 0 || v >= n || u >= v) fail("edge must satisfy 0 <= u < v < n");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) throw ParseError("missing vertex count");
  SimpleGraph g(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (g.adjacent(u, v)) throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(u, v);
  }
  if (!labels.empty()) {
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (long long v = 0; v < n; ++v) {
      auto it = labels.find(v);
      if (it == labels.end()) throw ParseError("missing label for vertex " + std::to_string(v));
      names[v] = it->second;
    }
    if (labels.size() != static_cast<std::size_t>(n)) throw ParseError("label for unknown vertex");
    g.set_labels(std::move(names));
  }
  return g;
}

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_dot(const SimpleGraph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << quoted(name) << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (g.has_labels()) os << " [label=" << quoted(g.labels()[v]) << ']';
    os << ";\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace commgraph
