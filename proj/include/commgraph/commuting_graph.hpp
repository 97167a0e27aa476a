#pragma once

#include "commgraph/graph.hpp"
#include "commgraph/group.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace commgraph {

enum class Variant {
  kFull,        // Γ(G): every element
  kStar,        // Γ*(G): identity removed
  kDoubleStar,  // Γ**(G): dominating vertices removed
};

std::string_view variant_name(Variant v);  // "full", "star", "double_star"
// Throws std::invalid_argument for an unknown name.
Variant parse_variant(std::string_view name);

struct LabeledCommutingGraph {
  SimpleGraph graph;  // labeled with element names
  std::string group_name;
  Variant variant = Variant::kFull;
  std::vector<Element> vertex_elements;  // group element behind each vertex
};

// Vertices follow the group's element order; the reduced variants keep the
// surviving vertices in that order.
LabeledCommutingGraph commuting_graph(const FiniteGroup& g);
LabeledCommutingGraph star_graph(const FiniteGroup& g);
// Removes Dom(Γ(G)) and checks it equals Z(G); throws std::logic_error if not.
LabeledCommutingGraph double_star_graph(const FiniteGroup& g);
LabeledCommutingGraph build_commuting_graph(const FiniteGroup& g, Variant variant);

// Group elements of the dominating vertices of Γ(G), ascending.
std::vector<Element> dominating_elements(const FiniteGroup& g);

}  // namespace commgraph
