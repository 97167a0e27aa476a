#include "commgraph/report_json.hpp"

namespace commgraph {

using nlohmann::json;

namespace {

json edges_to_json(const SimpleGraph& g) {
  json out = json::array();
  for (const auto& [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

}  // namespace

json recognition_to_json(const SimpleGraph& host, const RecognitionResult& result) {
  json out{{"verdict", result.verdict}, {"method", std::string(method_name(result.method))}};
  if (result.embedding) {
    const auto& e = *result.embedding;
    json labels = json::array();
    for (Vertex v : e.host_vertices) labels.push_back(host.label(v));
    out["embedding"] = {{"pattern_index", result.pattern_index},
                        {"pattern_vertices", e.pattern.vertex_count()},
                        {"pattern_edges", edges_to_json(e.pattern)},
                        {"host_vertices", e.host_vertices},
                        {"host_labels", labels}};
  }
  if (result.partition) {
    json cliques = json::array();
    for (const auto& clique : result.partition->cliques) cliques.push_back(clique);
    out["partition"] = cliques;
  }
  if (result.root) {
    json edge_of_vertex = json::array();
    for (const auto& [a, b] : result.root->edge_of_vertex) edge_of_vertex.push_back({a, b});
    out["root"] = {{"vertices", result.root->graph.vertex_count()},
                   {"edges", edges_to_json(result.root->graph)},
                   {"edge_of_vertex", edge_of_vertex}};
  }
  return out;
}

json report_to_json(const TheoremReport& r) {
  json variants = json::object();
  for (std::size_t i = 0; i < kVariants.size(); ++i) {
    const auto& o = r.outcomes[i];
    variants[std::string(variant_name(kVariants[i]))] = {
        {"vertices", o.vertex_count},
        {"edges", o.edge_count},
        {"line", r.verdict_line[i]},
        {"complement_line", r.verdict_complement_line[i]},
        {"predicted_line", r.predicted_line[i]},
        {"predicted_complement_line", r.predicted_complement_line[i]},
        {"line_pattern", o.line.pattern_index},
        {"complement_line_pattern", o.complement_line.pattern_index},
    };
  }
  return {{"name", r.name},
          {"order", r.order},
          {"center_size", r.center_size},
          {"abelian", r.abelian},
          {"p2", std::to_string(r.p2.numerator()) + "/" + std::to_string(r.p2.denominator())},
          {"all_noncentral_centralizers_abelian", r.all_noncentral_centralizers_abelian},
          {"double_star_vacuous", r.dstar_vacuous},
          {"variants", variants},
          {"mismatches", r.mismatches}};
}

json corpus_report_to_json(const CorpusReport& report) {
  json groups = json::array();
  for (const auto& r : report.reports) groups.push_back(report_to_json(r));
  return {{"groups", groups},
          {"summary",
           {{"groups", report.summary.groups},
            {"groups_with_mismatches", report.summary.groups_with_mismatches},
            {"mismatches", report.summary.mismatches}}}};
}

}  // namespace commgraph
