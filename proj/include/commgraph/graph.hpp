#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace commgraph {

using Vertex = std::int32_t;
using VertexSet = boost::dynamic_bitset<>;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple undirected graph. One bitset row per vertex gives
// constant-time edge queries and cheap neighbourhood intersections.
// Labels are carried for display and never interpreted.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t vertex_count);
  static SimpleGraph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return rows_.size(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  // Throws std::out_of_range for bad indices and std::invalid_argument for loops.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // The vertex's label, or its index when the graph is unlabeled.
  std::string label(Vertex v) const;
  void set_labels(std::vector<std::string> labels);

  // Structural equality; labels are ignored.
  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.rows_ == b.rows_; }

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> rows_;
  std::vector<std::string> labels_;
};

std::size_t edge_count(const SimpleGraph& g);
SimpleGraph complete_graph(std::size_t n);
SimpleGraph complement(const SimpleGraph& g);

// Vertices of the result follow the order of `vertices`. Throws
// std::out_of_range for a bad index and std::invalid_argument for a repeat.
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> vertices);

// Vertices adjacent to every other vertex, ascending.
std::vector<Vertex> dominating_vertices(const SimpleGraph& g);

bool is_triangle_free(const SimpleGraph& g);
bool is_complete(const SimpleGraph& g);
std::vector<std::size_t> degree_sequence(const SimpleGraph& g);  // non-increasing

// ---------------------------------------------------------------------------
// Small-graph canonization (at most 8 vertices).

constexpr std::size_t kMaxCanonicalVertices = 8;

// Adjacency bits of the upper triangle, pairs ordered (0,1), (0,2), (1,2),
// (0,3), (1,3), (2,3), ... with the first pair in the most significant
// position. The code of a graph is the minimum over all vertex orderings.
struct CanonicalCode {
  std::uint32_t vertex_count = 0;
  std::uint32_t bits = 0;
  auto operator<=>(const CanonicalCode&) const = default;
};

// Throws SizeGuardError above kMaxCanonicalVertices.
CanonicalCode canonical_code(const SimpleGraph& g);
// The graph relabeled by an ordering that attains its canonical code.
SimpleGraph canonical_form(const SimpleGraph& g);
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// One canonical representative per isomorphism class of n-vertex graphs,
// sorted by canonical code. 1 <= n <= 7.
std::vector<SimpleGraph> enumerate_graphs_up_to_iso(std::size_t n);

// ---------------------------------------------------------------------------
// Text formats

// First line the vertex count, then one "u v" line per edge with u < v.
// With `with_labels`, "# label <v> <text>" comment lines precede the edges.
std::string to_edge_list(const SimpleGraph& g, bool with_labels = false);
// Accepts the format above; '#' lines are comments except "# label" lines,
// which restore labels. Throws ParseError.
SimpleGraph parse_edge_list(std::string_view text);
std::string to_dot(const SimpleGraph& g, std::string_view name = "G");

}  // namespace commgraph
