#include "commgraph/line_graph.hpp"

#include "commgraph/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace commgraph {

std::string_view method_name(Method m) { return m == Method::kKrausz ? "krausz" : "beineke"; }

SimpleGraph line_graph(const SimpleGraph& root) {
  const auto edges = root.edges();
  SimpleGraph out(edges.size());
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const auto& [u1, v1] = edges[a];
      const auto& [u2, v2] = edges[b];
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) {
        out.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
      }
    }
  }
  std::vector<std::string> labels;
  labels.reserve(edges.size());
  for (const auto& [u, v] : edges) labels.push_back(root.label(u) + "-" + root.label(v));
  out.set_labels(std::move(labels));
  return out;
}

// ---------------------------------------------------------------------------
// Certificate replay

bool is_valid_partition(const SimpleGraph& host, const KrauszPartition& partition) {
  const std::size_t n = host.vertex_count();
  std::vector<int> memberships(n, 0);
  std::vector<VertexSet> covered(n, VertexSet(n));
  for (const auto& clique : partition.cliques) {
    if (clique.size() < 2) return false;
    for (std::size_t a = 0; a < clique.size(); ++a) {
      const Vertex u = clique[a];
      if (u < 0 || static_cast<std::size_t>(u) >= n) return false;
      if (++memberships[u] > 2) return false;
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        const Vertex v = clique[b];
        if (v < 0 || static_cast<std::size_t>(v) >= n || u == v) return false;
        if (!host.adjacent(u, v) || covered[u].test(v)) return false;
        covered[u].set(v);
        covered[v].set(u);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (covered[v] != host.neighbors(static_cast<Vertex>(v))) return false;
  }
  return true;
}

bool is_valid_embedding(const SimpleGraph& host, const Embedding& embedding) {
  const auto& hv = embedding.host_vertices;
  if (hv.size() != embedding.pattern.vertex_count()) return false;
  std::set<Vertex> distinct;
  for (Vertex v : hv) {
    if (v < 0 || static_cast<std::size_t>(v) >= host.vertex_count()) return false;
    if (!distinct.insert(v).second) return false;
  }
  for (std::size_t a = 0; a < hv.size(); ++a) {
    for (std::size_t b = a + 1; b < hv.size(); ++b) {
      if (embedding.pattern.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)) !=
          host.adjacent(hv[a], hv[b])) {
        return false;
      }
    }
  }
  return true;
}

bool is_valid_root(const SimpleGraph& host, const RootGraph& root) {
  const std::size_t n = host.vertex_count();
  if (root.edge_of_vertex.size() != n || edge_count(root.graph) != n) return false;
  std::set<Edge> used;
  for (auto [u, v] : root.edge_of_vertex) {
    if (u > v) std::swap(u, v);
    if (u < 0 || static_cast<std::size_t>(v) >= root.graph.vertex_count() || u == v) return false;
    if (!root.graph.adjacent(u, v) || !used.insert({u, v}).second) return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto& [u1, v1] = root.edge_of_vertex[a];
      const auto& [u2, v2] = root.edge_of_vertex[b];
      const bool incident = u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2;
      if (incident != host.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Krausz oracle

namespace {

// Edges are taken in lexicographic order. An unassigned edge (u, v) either
// joins a clique already holding u or v, or opens a new clique {u, v}; no
// vertex may sit in more than two cliques. Lexicographic order guarantees
// that once the first edge of a clique has been placed, each later edge of
// that clique touches a vertex already in it, so the search is complete.
class KrauszSearch {
 public:
  explicit KrauszSearch(const SimpleGraph& g)
      : g_(g),
        n_(g.vertex_count()),
        edges_(g.edges()),
        assigned_(n_, VertexSet(n_)),
        membership_(n_) {}

  bool run() { return extend(0); }

  KrauszPartition partition() const {
    KrauszPartition p;
    for (auto clique : cliques_) {
      std::sort(clique.begin(), clique.end());
      p.cliques.push_back(std::move(clique));
    }
    return p;
  }

 private:
  bool extend(std::size_t pos) {
    while (pos < edges_.size() && assigned_[edges_[pos].first].test(edges_[pos].second)) ++pos;
    if (pos == edges_.size()) return true;
    if (!feasible()) return false;
    const auto [u, v] = edges_[pos];
    for (const auto& [anchor, joiner] : {Edge{u, v}, Edge{v, u}}) {
      const auto cliques = membership_[anchor];
      for (int c : cliques) {
        if (!can_join(c, joiner)) continue;
        join(c, joiner);
        if (extend(pos + 1)) return true;
        leave(c, joiner);
      }
    }
    if (membership_[u].size() < 2 && membership_[v].size() < 2) {
      const int c = static_cast<int>(cliques_.size());
      cliques_.push_back({u});
      membership_[u].push_back(c);
      join(c, v);
      if (extend(pos + 1)) return true;
      leave(c, v);
      membership_[u].pop_back();
      cliques_.pop_back();
    }
    return false;
  }

  bool can_join(int c, Vertex w) const {
    if (membership_[w].size() >= 2) return false;
    for (Vertex x : cliques_[c]) {
      if (x == w || !g_.adjacent(w, x) || assigned_[w].test(x)) return false;
    }
    return true;
  }

  void join(int c, Vertex w) {
    for (Vertex x : cliques_[c]) {
      assigned_[w].set(x);
      assigned_[x].set(w);
    }
    cliques_[c].push_back(w);
    membership_[w].push_back(c);
  }

  void leave(int c, Vertex w) {
    cliques_[c].pop_back();
    membership_[w].pop_back();
    for (Vertex x : cliques_[c]) {
      assigned_[w].reset(x);
      assigned_[x].reset(w);
    }
  }

  // A vertex already in two cliques can only cover its remaining edges by
  // pulling the other endpoint into one of those cliques.
  bool feasible() const {
    for (std::size_t v = 0; v < n_; ++v) {
      if (membership_[v].size() < 2) continue;
      VertexSet open = g_.neighbors(static_cast<Vertex>(v)) - assigned_[v];
      for (auto w = open.find_first(); w != VertexSet::npos; w = open.find_next(w)) {
        const auto& mv = membership_[v];
        if (!can_join(mv[0], static_cast<Vertex>(w)) && !can_join(mv[1], static_cast<Vertex>(w))) {
          return false;
        }
      }
    }
    return true;
  }

  const SimpleGraph& g_;
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> assigned_;
  std::vector<std::vector<Vertex>> cliques_;
  std::vector<std::vector<int>> membership_;
};

void check_krausz_guard(const SimpleGraph& g, std::size_t vertex_guard) {
  if (g.vertex_count() > vertex_guard) {
    throw SizeGuardError("Krausz oracle limited to " + std::to_string(vertex_guard) +
                         " vertices, got " + std::to_string(g.vertex_count()));
  }
}

RootGraph root_from_partition(const SimpleGraph& host, const KrauszPartition& partition) {
  const std::size_t n = host.vertex_count();
  std::vector<std::vector<Vertex>> cliques_of(n);
  for (std::size_t c = 0; c < partition.cliques.size(); ++c) {
    for (Vertex v : partition.cliques[c]) cliques_of[v].push_back(static_cast<Vertex>(c));
  }
  Vertex next = static_cast<Vertex>(partition.cliques.size());
  RootGraph root;
  root.edge_of_vertex.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& cs = cliques_of[v];
    if (cs.size() == 2) {
      root.edge_of_vertex[v] = {cs[0], cs[1]};
    } else if (cs.size() == 1) {
      root.edge_of_vertex[v] = {cs[0], next++};
    } else {
      root.edge_of_vertex[v] = {next, next + 1};
      next += 2;
    }
  }
  root.graph = SimpleGraph(static_cast<std::size_t>(next));
  for (const auto& [a, b] : root.edge_of_vertex) root.graph.add_edge(a, b);
  return root;
}

}  // namespace

RecognitionResult krausz_oracle(const SimpleGraph& g, std::size_t vertex_guard) {
  check_krausz_guard(g, vertex_guard);
  KrauszSearch search(g);
  RecognitionResult result;
  result.method = Method::kKrausz;
  result.verdict = search.run();
  if (result.verdict) {
    result.partition = search.partition();
    result.root = root_from_partition(g, *result.partition);
  }
  return result;
}

std::optional<RootGraph> root_graph(const SimpleGraph& g, std::size_t vertex_guard) {
  auto result = krausz_oracle(g, vertex_guard);
  if (!result.verdict) return std::nullopt;
  return std::move(result.root);
}

// ---------------------------------------------------------------------------
// Induced subgraph search

namespace {

class InducedSearch {
 public:
  InducedSearch(const SimpleGraph& host, const SimpleGraph& pattern)
      : host_(host),
        pattern_(pattern),
        n_(host.vertex_count()),
        k_(pattern.vertex_count()),
        base_(k_, VertexSet(n_)),
        level_(k_ + 1, VertexSet(n_)),
        chosen_(k_) {}

  std::optional<Embedding> run() {
    if (k_ > n_) return std::nullopt;
    for (std::size_t i = 0; i < k_; ++i) {
      const std::size_t pd = pattern_.degree(static_cast<Vertex>(i));
      const std::size_t pnd = k_ - 1 - pd;
      for (std::size_t v = 0; v < n_; ++v) {
        const std::size_t hd = host_.degree(static_cast<Vertex>(v));
        if (hd >= pd && n_ - 1 - hd >= pnd) base_[i].set(v);
      }
      if (base_[i].none()) return std::nullopt;
    }
    level_[0].set();
    if (!place(0)) return std::nullopt;
    return Embedding{pattern_, chosen_};
  }

 private:
  // level_[i] holds the host vertices still unused after placing i pattern
  // vertices; candidates for pattern vertex i are narrowed from it.
  bool place(std::size_t i) {
    if (i == k_) return true;
    VertexSet candidates = level_[i] & base_[i];
    for (std::size_t j = 0; j < i && candidates.any(); ++j) {
      if (pattern_.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
        candidates &= host_.neighbors(chosen_[j]);
      } else {
        candidates -= host_.neighbors(chosen_[j]);
      }
    }
    for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
      chosen_[i] = static_cast<Vertex>(v);
      level_[i + 1] = level_[i];
      level_[i + 1].reset(v);
      if (place(i + 1)) return true;
    }
    return false;
  }

  const SimpleGraph& host_;
  const SimpleGraph& pattern_;
  std::size_t n_;
  std::size_t k_;
  std::vector<VertexSet> base_;
  std::vector<VertexSet> level_;
  std::vector<Vertex> chosen_;
};

}  // namespace

std::optional<Embedding> find_induced(const SimpleGraph& host, const SimpleGraph& pattern) {
  if (pattern.vertex_count() > kMaxCanonicalVertices) {
    throw SizeGuardError("pattern limited to " + std::to_string(kMaxCanonicalVertices) +
                         " vertices, got " + std::to_string(pattern.vertex_count()));
  }
  return InducedSearch(host, pattern).run();
}

// ---------------------------------------------------------------------------
// Forbidden family

ForbiddenFamily derive_forbidden_family() {
  ForbiddenFamily family;
  for (std::size_t n = 4; n <= 6; ++n) {
    for (const auto& candidate : enumerate_graphs_up_to_iso(n)) {
      if (krausz_oracle(candidate).verdict) continue;
      bool minimal = true;
      std::vector<Vertex> rest;
      for (std::size_t drop = 0; drop < n && minimal; ++drop) {
        rest.clear();
        for (std::size_t v = 0; v < n; ++v) {
          if (v != drop) rest.push_back(static_cast<Vertex>(v));
        }
        minimal = krausz_oracle(induced_subgraph(candidate, rest)).verdict;
      }
      if (!minimal) continue;
      for (const auto& smaller : family.members) {
        if (find_induced(candidate, smaller)) {
          throw std::logic_error("minimal non-line graph contains a smaller family member");
        }
      }
      family.members.push_back(candidate);
    }
  }
  if (family.members.size() != 9) {
    throw std::logic_error("forbidden family derivation found " +
                           std::to_string(family.members.size()) + " graphs, expected 9");
  }
  for (const auto& m : family.members) family.complemented_members.push_back(complement(m));
  return family;
}

const ForbiddenFamily& forbidden_family() {
  static const ForbiddenFamily family = derive_forbidden_family();
  return family;
}

std::string format_family(const ForbiddenFamily& family, bool complemented) {
  const auto& graphs = complemented ? family.complemented_members : family.members;
  std::string out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i) out += "---\n";
    out += to_edge_list(graphs[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Recognition

namespace {

RecognitionResult scan(const SimpleGraph& g, const std::vector<SimpleGraph>& patterns) {
  RecognitionResult result;
  result.method = Method::kBeineke;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (auto embedding = find_induced(g, patterns[i])) {
      result.verdict = false;
      result.embedding = std::move(embedding);
      result.pattern_index = static_cast<int>(i);
      return result;
    }
  }
  result.verdict = true;
  return result;
}

}  // namespace

RecognitionResult is_line_graph(const SimpleGraph& g) { return is_line_graph(g, forbidden_family()); }

RecognitionResult is_line_graph(const SimpleGraph& g, const ForbiddenFamily& family) {
  return scan(g, family.members);
}

RecognitionResult is_complement_of_line_graph(const SimpleGraph& g) {
  return is_complement_of_line_graph(g, forbidden_family());
}

RecognitionResult is_complement_of_line_graph(const SimpleGraph& g, const ForbiddenFamily& family) {
  const bool via_complement = scan(complement(g), family.members).verdict;
  auto direct = scan(g, family.complemented_members);
  if (via_complement != direct.verdict) {
    throw std::logic_error("complement-of-line-graph routes disagree");
  }
  return direct;
}

}  // namespace commgraph
