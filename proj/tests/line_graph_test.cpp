#include "commgraph/commuting_graph.hpp"
#include "commgraph/errors.hpp"
#include "commgraph/line_graph.hpp"
#include "commgraph/theorems.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace commgraph;
using oracle::graph_of;

namespace {

std::vector<SimpleGraph> all_graphs_up_to(std::size_t max_n) {
  std::vector<SimpleGraph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto& g : enumerate_graphs_up_to_iso(n)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::vector<Vertex>> components(const SimpleGraph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<std::vector<Vertex>> out;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{static_cast<Vertex>(s)}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (std::size_t w = 0; w < g.vertex_count(); ++w) {
        if (g.adjacent(v, static_cast<Vertex>(w)) && comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(static_cast<Vertex>(w));
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

// Independent line-graph test for graphs on at most 6 vertices, straight
// from the definition: a graph is a line graph iff each component is L(R)
// for a connected R, and such an R has at most 6 edges and 7 vertices.
class DefinitionOracle {
 public:
  DefinitionOracle() {
    for (std::size_t n = 2; n <= 7; ++n) {
      for (const auto& r : enumerate_graphs_up_to_iso(n)) {
        const auto m = edge_count(r);
        if (m > 6 || components(r).size() != 1) continue;
        codes_.insert(oracle::min_code_all_permutations(line_graph(r)) | (m << 24));
      }
    }
  }
  bool is_line_graph(const SimpleGraph& g) const {
    for (const auto& c : components(g)) {
      const auto part = induced_subgraph(g, c);
      const auto key = oracle::min_code_all_permutations(part) |
                       (static_cast<std::uint32_t>(part.vertex_count()) << 24);
      if (!codes_.contains(key)) return false;
    }
    return true;
  }

 private:
  std::set<std::uint32_t> codes_;
};

// Lexicographically first induced embedding, by exhaustive enumeration.
std::optional<std::vector<Vertex>> first_embedding_bruteforce(const SimpleGraph& host,
                                                              const SimpleGraph& pattern) {
  std::vector<Vertex> chosen;
  std::function<bool()> rec = [&]() -> bool {
    const std::size_t i = chosen.size();
    if (i == pattern.vertex_count()) return true;
    for (Vertex v = 0; v < static_cast<Vertex>(host.vertex_count()); ++v) {
      if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = pattern.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) == host.adjacent(v, chosen[j]);
      }
      if (!ok) continue;
      chosen.push_back(v);
      if (rec()) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec()) return chosen;
  return std::nullopt;
}

}  // namespace

TEST_CASE("line graph construction") {
  CHECK(line_graph(graph_of(3, {{0, 1}, {1, 2}})) == complete_graph(2));
  CHECK(line_graph(oracle::claw()) == complete_graph(3));
  CHECK(are_isomorphic(line_graph(oracle::cycle(5)), oracle::cycle(5)));
  CHECK(line_graph(SimpleGraph(4)).vertex_count() == 0);

  SimpleGraph labeled = graph_of(3, {{0, 1}, {1, 2}});
  labeled.set_labels({"a", "b", "c"});
  CHECK(line_graph(labeled).labels() == std::vector<std::string>{"a-b", "b-c"});
}

TEST_CASE("Krausz oracle") {
  const auto k3 = krausz_oracle(complete_graph(3));
  CHECK(k3.verdict);
  CHECK(k3.method == Method::kKrausz);
  REQUIRE(k3.partition);
  CHECK(is_valid_partition(complete_graph(3), *k3.partition));

  const auto claw = krausz_oracle(oracle::claw());
  CHECK_FALSE(claw.verdict);
  CHECK_FALSE(claw.partition);

  const auto matching = oracle::clique_union({2, 2, 2});
  const auto m = krausz_oracle(matching);
  CHECK(m.verdict);
  REQUIRE(m.partition);
  CHECK(m.partition->cliques.size() == 3);

  CHECK(krausz_oracle(SimpleGraph(0)).verdict);
  CHECK(krausz_oracle(SimpleGraph(1)).verdict);
  CHECK_THROWS_AS(krausz_oracle(SimpleGraph(13)), SizeGuardError);
  CHECK(krausz_oracle(SimpleGraph(13), 13).verdict);
}

TEST_CASE("certificate replay rejects bad certificates") {
  const auto k4 = complete_graph(4);
  CHECK(is_valid_partition(k4, {{{0, 1, 2, 3}}}));
  CHECK_FALSE(is_valid_partition(k4, {{{0, 1, 2}}}));                 // edges uncovered
  CHECK_FALSE(is_valid_partition(k4, {{{0, 1, 2, 3}, {0, 1}}}));      // edge covered twice
  CHECK_FALSE(is_valid_partition(k4, {{{0}, {0, 1, 2, 3}}}));         // singleton clique
  const auto c4 = oracle::cycle(4);
  CHECK_FALSE(is_valid_partition(c4, {{{0, 1, 2, 3}}}));              // not a clique
  const auto claw = oracle::claw();
  CHECK_FALSE(is_valid_partition(claw, {{{0, 1}, {0, 2}, {0, 3}}}));  // three cliques at the hub

  CHECK(is_valid_embedding(k4, {complete_graph(3), {3, 0, 2}}));
  CHECK_FALSE(is_valid_embedding(k4, {oracle::claw(), {0, 1, 2, 3}}));
  CHECK_FALSE(is_valid_embedding(k4, {complete_graph(3), {0, 0, 2}}));
  CHECK_FALSE(is_valid_embedding(k4, {complete_graph(3), {0, 1}}));
}

TEST_CASE("forbidden family") {
  const auto family = derive_forbidden_family();
  REQUIRE(family.members.size() == 9);
  REQUIRE(family.complemented_members.size() == 9);

  std::size_t max_n = 0;
  for (std::size_t i = 0; i < 9; ++i) {
    const auto& m = family.members[i];
    CAPTURE(i);
    CHECK(m.vertex_count() >= 4);
    CHECK(m.vertex_count() <= 6);
    max_n = std::max(max_n, m.vertex_count());
    CHECK(m == canonical_form(m));
    CHECK_FALSE(krausz_oracle(m).verdict);
    CHECK(family.complemented_members[i] == complement(m));
    if (i > 0) {
      const auto& prev = family.members[i - 1];
      CHECK(std::pair(prev.vertex_count(), canonical_code(prev)) <
            std::pair(m.vertex_count(), canonical_code(m)));
    }
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(are_isomorphic(m, family.members[j]));

    // Every proper induced subgraph passes.
    const std::size_t n = m.vertex_count();
    for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
      std::vector<Vertex> keep;
      for (std::size_t v = 0; v < n; ++v) {
        if (mask >> v & 1u) keep.push_back(static_cast<Vertex>(v));
      }
      CHECK(krausz_oracle(induced_subgraph(m, keep)).verdict);
    }
  }
  CHECK(max_n == 6);
  CHECK(are_isomorphic(family.members.front(), oracle::claw()));
  CHECK(&forbidden_family() == &forbidden_family());
}

TEST_CASE("family export format") {
  const auto& family = forbidden_family();
  const auto text = format_family(family, false);
  CHECK(text.rfind("4\n0 3\n1 3\n2 3\n---\n", 0) == 0);
  std::size_t separators = 0;
  for (std::size_t pos = text.find("---\n"); pos != std::string::npos; pos = text.find("---\n", pos + 1)) {
    ++separators;
  }
  CHECK(separators == 8);
  CHECK(text.back() == '\n');
  CHECK(format_family(family, true).rfind("4\n0 1\n0 2\n1 2\n---\n", 0) == 0);
}

TEST_CASE("induced subgraph search") {
  CHECK(find_induced(complete_graph(4), complete_graph(3)));
  CHECK_FALSE(find_induced(oracle::cycle(5), complete_graph(3)));
  CHECK(find_induced(SimpleGraph(3), SimpleGraph(0)));
  CHECK_FALSE(find_induced(SimpleGraph(2), SimpleGraph(3)));
  CHECK_THROWS_AS(find_induced(complete_graph(10), complete_graph(9)), SizeGuardError);

  const auto d4 = commuting_graph(make_dihedral(4));
  const auto claw = oracle::graph_of(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto e = find_induced(d4.graph, claw);
  REQUIRE(e);
  CHECK(is_valid_embedding(d4.graph, *e));
  // The documented witness is an embedding too: hub e, leaves r, s, sr.
  const auto& g = d4.graph;
  auto at = [&](const char* name) { return oracle::find_element(make_dihedral(4), name); };
  CHECK(is_valid_embedding(g, {claw, {at("e"), at("r"), at("s"), at("sr")}}));

  // Agrees with exhaustive search, including which embedding comes first.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto host = oracle::random_graph(4 + trial % 5, 0.5, rng);
    const auto pattern = oracle::random_graph(2 + trial % 4, 0.5, rng);
    const auto found = find_induced(host, pattern);
    const auto expected = first_embedding_bruteforce(host, pattern);
    CHECK(found.has_value() == oracle::contains_induced_bruteforce(host, pattern));
    REQUIRE(found.has_value() == expected.has_value());
    if (found) CHECK(found->host_vertices == *expected);
  }
}

TEST_CASE("line graph recognition") {
  for (std::size_t n : {0, 1, 2, 5, 12, 20}) CHECK(is_line_graph(complete_graph(n)).verdict);

  const auto s3 = commuting_graph(make_symmetric(3));
  const auto r = is_line_graph(s3.graph);
  CHECK_FALSE(r.verdict);
  REQUIRE(r.embedding);
  CHECK(r.pattern_index == 0);
  CHECK(is_valid_embedding(s3.graph, *r.embedding));
  const auto dom = dominating_vertices(r.embedding->pattern);
  REQUIRE(dom.size() == 1);
  CHECK(s3.graph.label(r.embedding->host_vertices[dom[0]]) == "e");

  CHECK(is_line_graph(double_star_graph(make_dicyclic(2)).graph).verdict);
  CHECK(is_line_graph(SimpleGraph(0)).verdict);
  CHECK(is_line_graph(SimpleGraph(1)).verdict);
}

TEST_CASE("complement recognition") {
  for (std::size_t n : {0, 1, 4, 9}) CHECK(is_complement_of_line_graph(complete_graph(n)).verdict);
  CHECK(is_complement_of_line_graph(commuting_graph(make_dihedral(4)).graph).verdict);
  const auto s3 = commuting_graph(make_symmetric(3)).graph;
  const auto r = is_complement_of_line_graph(s3);
  CHECK_FALSE(r.verdict);
  REQUIRE(r.embedding);
  CHECK(is_valid_embedding(s3, *r.embedding));
}

TEST_CASE("oracle equivalence on small graphs") {
  const DefinitionOracle definition;
  const auto graphs = all_graphs_up_to(6);
  CHECK(graphs.size() == 1 + 2 + 4 + 11 + 34 + 156);
  int line_graphs = 0;
  for (const auto& g : graphs) {
    const auto beineke = is_line_graph(g);
    const auto krausz = krausz_oracle(g);
    CHECK(beineke.verdict == krausz.verdict);
    CHECK(krausz.verdict == definition.is_line_graph(g));
    line_graphs += krausz.verdict;
    if (krausz.verdict) {
      REQUIRE(krausz.partition);
      CHECK(is_valid_partition(g, *krausz.partition));
    } else {
      REQUIRE(beineke.embedding);
      CHECK(is_valid_embedding(g, *beineke.embedding));
    }
    const auto co = is_complement_of_line_graph(g);
    CHECK(co.verdict == krausz_oracle(complement(g)).verdict);
  }
  CHECK(line_graphs > 0);

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(7 + trial % 2, 0.5, rng);
    CHECK(is_line_graph(g).verdict == krausz_oracle(g).verdict);
  }
}

TEST_CASE("root graphs") {
  const auto k3 = root_graph(complete_graph(3));
  REQUIRE(k3);
  CHECK(is_valid_root(complete_graph(3), *k3));
  CHECK(are_isomorphic(line_graph(k3->graph), complete_graph(3)));

  const auto matching = oracle::clique_union({2, 2, 2});
  const auto root = root_graph(matching);
  REQUIRE(root);
  CHECK(root->graph.vertex_count() == 9);
  CHECK(edge_count(root->graph) == 6);
  for (const auto& c : components(root->graph)) {
    CHECK(are_isomorphic(induced_subgraph(root->graph, c), graph_of(3, {{0, 1}, {1, 2}})));
  }

  const auto c5 = root_graph(line_graph(oracle::cycle(5)));
  REQUIRE(c5);
  CHECK(are_isomorphic(c5->graph, oracle::cycle(5)));

  const auto isolated = root_graph(SimpleGraph(2));
  REQUIRE(isolated);
  CHECK(is_valid_root(SimpleGraph(2), *isolated));

  CHECK_FALSE(root_graph(oracle::claw()));
}

TEST_CASE("line graphs of small graphs round trip") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& r : enumerate_graphs_up_to_iso(n)) {
      bool isolated = false;
      for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) isolated = isolated || r.degree(v) == 0;
      if (isolated) continue;
      const auto l = line_graph(r);
      CHECK(is_line_graph(l).verdict);
      const auto root = root_graph(l, l.vertex_count());
      REQUIRE(root);
      CHECK(is_valid_root(l, *root));
      CHECK(is_line_graph(line_graph(root->graph)).verdict);
    }
  }
}

TEST_CASE("disjoint unions of cliques are line graphs") {
  std::vector<std::size_t> sizes;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t max_part) {
    if (!sizes.empty()) {
      const auto g = oracle::clique_union(sizes);
      CHECK(is_line_graph(g).verdict);
      if (g.vertex_count() <= kKrauszVertexGuard) CHECK(krausz_oracle(g).verdict);
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
      sizes.push_back(part);
      rec(remaining - part, part);
      sizes.pop_back();
    }
  };
  rec(10, 10);
}

TEST_CASE("line graphs are closed under induced subgraphs") {
  std::mt19937_64 rng(99);
  std::bernoulli_distribution keep(0.5);
  for (const auto& entry : default_corpus()) {
    for (auto variant : kVariants) {
      const auto g = build_commuting_graph(entry.group, variant).graph;
      if (!is_line_graph(g).verdict) continue;
      for (int s = 0; s < 50; ++s) {
        std::vector<Vertex> subset;
        for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
          if (keep(rng)) subset.push_back(v);
        }
        CHECK(is_line_graph(induced_subgraph(g, subset)).verdict);
      }
    }
  }
}
