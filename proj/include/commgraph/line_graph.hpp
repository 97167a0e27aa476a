#pragma once

#include "commgraph/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace commgraph {

// L(R): one vertex per edge of R (in R.edges() order), adjacent when the
// edges share an endpoint. Vertices are labeled "a-b" from R's labels.
SimpleGraph line_graph(const SimpleGraph& root);

// An edge partition into cliques with every vertex in at most two cliques.
struct KrauszPartition {
  std::vector<std::vector<Vertex>> cliques;  // each sorted ascending
};

// Induced embedding of `pattern` into some host.
struct Embedding {
  SimpleGraph pattern;
  std::vector<Vertex> host_vertices;  // host vertex of each pattern vertex
};

// A root graph together with the explicit isomorphism L(graph) ≅ host:
// host vertex v corresponds to the root edge edge_of_vertex[v].
struct RootGraph {
  SimpleGraph graph;
  std::vector<Edge> edge_of_vertex;
};

enum class Method { kKrausz, kBeineke };
std::string_view method_name(Method m);

struct RecognitionResult {
  bool verdict = false;
  Method method = Method::kBeineke;
  std::optional<KrauszPartition> partition;  // Krausz YES
  std::optional<RootGraph> root;             // Krausz YES
  std::optional<Embedding> embedding;        // Beineke NO
  int pattern_index = -1;                    // family member behind `embedding`
};

// Certificate replay against a host graph.
bool is_valid_partition(const SimpleGraph& host, const KrauszPartition& partition);
bool is_valid_embedding(const SimpleGraph& host, const Embedding& embedding);
bool is_valid_root(const SimpleGraph& host, const RootGraph& root);

constexpr std::size_t kKrauszVertexGuard = 12;

// Backtracking search for a Krausz partition. Throws SizeGuardError when the
// host has more than `vertex_guard` vertices.
RecognitionResult krausz_oracle(const SimpleGraph& g,
                                std::size_t vertex_guard = kKrauszVertexGuard);

// Root graph built from a Krausz partition: a root vertex per clique plus a
// pendant vertex for each host vertex in only one clique (two fresh vertices
// for a host vertex in none). Empty when the host is not a line graph.
std::optional<RootGraph> root_graph(const SimpleGraph& g,
                                    std::size_t vertex_guard = kKrauszVertexGuard);

// The nine minimal graphs that are not line graphs, derived by enumeration.
struct ForbiddenFamily {
  std::vector<SimpleGraph> members;              // canonical forms, sorted by canonical code
  std::vector<SimpleGraph> complemented_members; // complement of each member, same order
};

// Enumerates every graph on 4..6 vertices and keeps the minimal ones the
// Krausz oracle rejects. Throws std::logic_error unless exactly nine remain.
ForbiddenFamily derive_forbidden_family();
// Derived once on first use and shared afterwards.
const ForbiddenFamily& forbidden_family();

// Edge-list blocks joined by "---" lines, in family order.
std::string format_family(const ForbiddenFamily& family, bool complemented);

// First induced embedding of `pattern` into `host`, taking pattern vertices
// in index order and host candidates in ascending order. Throws
// SizeGuardError for patterns above kMaxCanonicalVertices.
std::optional<Embedding> find_induced(const SimpleGraph& host, const SimpleGraph& pattern);

// Forbidden-subgraph scan over the family (claw first, then by size).
RecognitionResult is_line_graph(const SimpleGraph& g);
RecognitionResult is_line_graph(const SimpleGraph& g, const ForbiddenFamily& family);

// Decides membership twice: by recognizing the complement as a line graph
// and by scanning for complemented family members. Throws std::logic_error
// if the routes disagree; the certificate comes from the second route.
RecognitionResult is_complement_of_line_graph(const SimpleGraph& g);
RecognitionResult is_complement_of_line_graph(const SimpleGraph& g, const ForbiddenFamily& family);

}  // namespace commgraph
