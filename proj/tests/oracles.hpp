#pragma once

// Brute-force reference implementations. They share no code paths with the
// library beyond the SimpleGraph / FiniteGroup containers.

#include "commgraph/graph.hpp"
#include "commgraph/group.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using commgraph::Element;
using commgraph::FiniteGroup;
using commgraph::SimpleGraph;
using commgraph::Vertex;

inline Element find_element(const FiniteGroup& g, const std::string& name) {
  for (Element x = 0; x < g.order(); ++x) {
    if (g.element_name(x) == name) return x;
  }
  return -1;
}

inline std::set<std::string> names_of(const FiniteGroup& g, const std::vector<Element>& xs) {
  std::set<std::string> out;
  for (Element x : xs) out.insert(g.element_name(x));
  return out;
}

// Axioms checked straight from the table.
inline bool satisfies_group_axioms(const FiniteGroup& g) {
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    if (g.multiply(0, i) != i || g.multiply(i, 0) != i) return false;
    bool has_inverse = false;
    for (int j = 0; j < n; ++j) {
      const Element v = g.multiply(i, j);
      if (v < 0 || v >= n) return false;
      has_inverse = has_inverse || (v == 0 && g.multiply(j, i) == 0);
      for (int k = 0; k < n; ++k) {
        if (g.multiply(v, k) != g.multiply(i, g.multiply(j, k))) return false;
      }
    }
    if (!has_inverse) return false;
  }
  return true;
}

inline std::vector<Element> center_scan(const FiniteGroup& g) {
  std::vector<Element> out;
  for (Element z = 0; z < g.order(); ++z) {
    bool all = true;
    for (Element x = 0; x < g.order(); ++x) {
      all = all && g.multiply(z, x) == g.multiply(x, z);
    }
    if (all) out.push_back(z);
  }
  return out;
}

inline std::vector<Element> centralizer_scan(const FiniteGroup& g, Element x) {
  std::vector<Element> out;
  for (Element y = 0; y < g.order(); ++y) {
    if (g.multiply(x, y) == g.multiply(y, x)) out.push_back(y);
  }
  return out;
}

// Conjugacy class sizes (sorted) found by explicit g^-1 x g closure.
inline std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<std::size_t> sizes;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    std::set<int> members;
    for (int h = 0; h < n; ++h) {
      int hinv = 0;
      while (g.multiply(h, hinv) != 0) ++hinv;
      members.insert(g.multiply(g.multiply(hinv, x), h));
    }
    for (int m : members) cls[m] = static_cast<int>(sizes.size());
    sizes.push_back(members.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline std::int64_t ordered_commuting_pairs(const FiniteGroup& g) {
  std::int64_t count = 0;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) count += g.multiply(x, y) == g.multiply(y, x);
  }
  return count;
}

inline int element_order(const FiniteGroup& g, Element x) {
  int t = 1;
  Element p = x;
  while (p != 0) {
    p = g.multiply(p, x);
    ++t;
  }
  return t;
}

// Exhaustive isomorphism test: backtracking over bijections that preserve
// element orders, checking the multiplication table on the fly.
inline bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order();
  if (n != b.order()) return false;
  std::vector<int> oa(n), ob(n);
  for (int i = 0; i < n; ++i) {
    oa[i] = oracle::element_order(a, i);
    ob[i] = oracle::element_order(b, i);
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto consistent = [&](int upto) {
    for (int i = 0; i <= upto; ++i) {
      for (int j = 0; j <= upto; ++j) {
        const int p = a.multiply(i, j);
        if (p <= upto && b.multiply(map[i], map[j]) != map[p]) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c] || oa[i] != ob[c]) continue;
      map[i] = c;
      used[c] = true;
      if (consistent(i) && self(self, i + 1)) return true;
      used[c] = false;
    }
    map[i] = -1;
    return false;
  };
  return rec(rec, 0);
}

// Minimal upper-triangle code over every permutation, no pruning. Pair
// order matches the library's definition so codes can be compared.
inline std::uint32_t min_code_all_permutations(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint32_t best = ~0u;
  do {
    std::uint32_t code = 0;
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) code = (code << 1) | g.adjacent(p[i], p[j]);
    }
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return n < 2 ? 0u : best;
}

// All 2^(n choose 2) labeled graphs on n vertices.
inline std::vector<SimpleGraph> all_labeled_graphs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<SimpleGraph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    SimpleGraph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (mask >> e & 1u) g.add_edge(pairs[e].first, pairs[e].second);
    }
    out.push_back(std::move(g));
  }
  return out;
}

inline std::size_t count_iso_classes_bruteforce(std::size_t n) {
  std::set<std::uint32_t> codes;
  for (const auto& g : all_labeled_graphs(n)) codes.insert(min_code_all_permutations(g));
  return codes.size();
}

// Induced-subgraph containment by trying every injective map.
inline bool contains_induced_bruteforce(const SimpleGraph& host, const SimpleGraph& pattern) {
  const std::size_t n = host.vertex_count(), k = pattern.vertex_count();
  if (k > n) return false;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - static_cast<long>(k), pick.end(), 1);
  do {
    std::vector<Vertex> chosen;
    for (std::size_t v = 0; v < n; ++v) {
      if (pick[v]) chosen.push_back(static_cast<Vertex>(v));
    }
    do {
      bool ok = true;
      for (std::size_t a = 0; a < k && ok; ++a) {
        for (std::size_t b = a + 1; b < k && ok; ++b) {
          ok = pattern.adjacent(a, b) == host.adjacent(chosen[a], chosen[b]);
        }
      }
      if (ok) return true;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

inline SimpleGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return g;
}

inline SimpleGraph graph_of(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline SimpleGraph cycle(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
  return g;
}

inline SimpleGraph claw() { return graph_of(4, {{0, 1}, {0, 2}, {0, 3}}); }

// Disjoint union of cliques of the given sizes.
inline SimpleGraph clique_union(const std::vector<std::size_t>& sizes) {
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  SimpleGraph g(n);
  std::size_t base = 0;
  for (std::size_t s : sizes) {
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = a + 1; b < s; ++b) {
        g.add_edge(static_cast<Vertex>(base + a), static_cast<Vertex>(base + b));
      }
    }
    base += s;
  }
  return g;
}

}  // namespace oracle
