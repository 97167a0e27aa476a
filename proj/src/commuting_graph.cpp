#include "commgraph/commuting_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace commgraph {

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kFull: return "full";
    case Variant::kStar: return "star";
    case Variant::kDoubleStar: return "double_star";
  }
  return "full";
}

Variant parse_variant(std::string_view name) {
  if (name == "full") return Variant::kFull;
  if (name == "star") return Variant::kStar;
  if (name == "double_star") return Variant::kDoubleStar;
  throw std::invalid_argument("unknown variant '" + std::string(name) +
                              "' (expected full, star or double_star)");
}

namespace {

LabeledCommutingGraph restrict(const LabeledCommutingGraph& full, Variant variant,
                               const std::vector<Element>& removed) {
  std::vector<Vertex> kept;
  for (Element x : full.vertex_elements) {
    if (!std::binary_search(removed.begin(), removed.end(), x)) kept.push_back(x);
  }
  LabeledCommutingGraph out;
  out.graph = induced_subgraph(full.graph, kept);
  out.group_name = full.group_name;
  out.variant = variant;
  out.vertex_elements.assign(kept.begin(), kept.end());
  return out;
}

}  // namespace

LabeledCommutingGraph commuting_graph(const FiniteGroup& g) {
  const int n = g.order();
  LabeledCommutingGraph out;
  out.graph = SimpleGraph(static_cast<std::size_t>(n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (g.commute(x, y)) out.graph.add_edge(x, y);
    }
  }
  out.graph.set_labels({g.element_names().begin(), g.element_names().end()});
  out.group_name = g.name();
  out.variant = Variant::kFull;
  out.vertex_elements.resize(n);
  for (Element x = 0; x < n; ++x) out.vertex_elements[x] = x;
  return out;
}

LabeledCommutingGraph star_graph(const FiniteGroup& g) {
  return restrict(commuting_graph(g), Variant::kStar, {kIdentity});
}

std::vector<Element> dominating_elements(const FiniteGroup& g) {
  const auto full = commuting_graph(g);
  const auto dom = dominating_vertices(full.graph);
  return {dom.begin(), dom.end()};
}

LabeledCommutingGraph double_star_graph(const FiniteGroup& g) {
  const auto full = commuting_graph(g);
  const auto dom_vertices = dominating_vertices(full.graph);
  std::vector<Element> dom(dom_vertices.begin(), dom_vertices.end());
  const auto z = center(g);
  if (!std::equal(dom.begin(), dom.end(), z.members().begin(), z.members().end())) {
    throw std::logic_error("dominating vertices of the commuting graph of " + g.name() +
                           " differ from its center");
  }
  return restrict(full, Variant::kDoubleStar, dom);
}

LabeledCommutingGraph build_commuting_graph(const FiniteGroup& g, Variant variant) {
  switch (variant) {
    case Variant::kFull: return commuting_graph(g);
    case Variant::kStar: return star_graph(g);
    case Variant::kDoubleStar: return double_star_graph(g);
  }
  return commuting_graph(g);
}

}  // namespace commgraph
