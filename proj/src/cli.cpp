#include "commgraph/cli.hpp"

#include "commgraph/commuting_graph.hpp"
#include "commgraph/errors.hpp"
#include "commgraph/line_graph.hpp"
#include "commgraph/report_json.hpp"
#include "commgraph/theorems.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace commgraph::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteGroup parse_factor(const std::string& token) {
  static const std::regex pattern(R"((Dic|Z|D|S|A)(\d{1,6}))");
  if (token == "Q8") return make_dicyclic(2);
  std::smatch m;
  if (!std::regex_match(token, m, pattern)) {
    throw std::invalid_argument("bad group selector '" + token +
                                "' (expected Zn, Dn, Dicm, Sk, Ak, Q8 or @path)");
  }
  const std::string kind = m[1];
  const int n = std::stoi(m[2]);
  if (kind == "Z") return make_cyclic(n);
  if (kind == "D") return make_dihedral(n);
  if (kind == "Dic") return make_dicyclic(n);
  if (kind == "S") return make_symmetric(n);
  return make_alternating(n);
}

std::string rational_text(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string join_labels(const SimpleGraph& g, const std::vector<Vertex>& vertices) {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out += (i ? ", " : "") + g.label(vertices[i]);
  }
  return out;
}

std::string edge_text(const SimpleGraph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += (out.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
  }
  return out.empty() ? "(none)" : out;
}

// Writes either to --output or to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

void print_certificate(std::ostream& os, const SimpleGraph& host, const RecognitionResult& result,
                       std::size_t family_size) {
  if (result.embedding) {
    const auto& e = *result.embedding;
    os << "  forbidden pattern " << result.pattern_index + 1 << " of " << family_size << " ("
       << e.pattern.vertex_count() << " vertices, " << edge_count(e.pattern)
       << " edges): " << edge_text(e.pattern) << '\n';
    for (std::size_t p = 0; p < e.host_vertices.size(); ++p) {
      os << "    pattern vertex " << p << " -> host " << e.host_vertices[p] << " \""
         << host.label(e.host_vertices[p]) << "\"\n";
    }
  }
}

void print_krausz(std::ostream& os, const SimpleGraph& host, const RecognitionResult& k,
                  std::string_view what) {
  if (!k.partition) return;
  os << "  krausz partition" << what << ":";
  if (k.partition->cliques.empty()) os << " (no edges)";
  for (const auto& clique : k.partition->cliques) os << " {" << join_labels(host, clique) << '}';
  os << '\n';
  if (k.root) {
    os << "  root graph" << what << ": " << k.root->graph.vertex_count() << " vertices, "
       << edge_count(k.root->graph) << " edges: " << edge_text(k.root->graph) << '\n';
  }
}

struct Options {
  std::string group;
  std::string graph_file;
  std::string variant = "full";
  std::string format;
  std::string output;
  std::string only;
  std::string corpus_file;
  bool complement = false;
  bool include_large = false;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
};

int run_group(const Options& o, std::ostream& out) {
  const auto g = parse_group_selector(o.group);
  Sink sink(o.output, out);
  auto& os = sink.stream();
  if (o.format == "table") {
    os << to_cayley_table(g);
    return kOk;
  }
  const auto z = center(g);
  const auto classes = conjugacy_classes(g);
  if (o.format == "structured") {
    nlohmann::json j{{"name", g.name()},
                     {"order", g.order()},
                     {"abelian", is_abelian(g)},
                     {"elements", std::vector<std::string>(g.element_names().begin(), g.element_names().end())},
                     {"center", std::vector<Element>(z.members().begin(), z.members().end())},
                     {"conjugacy_classes", classes.count()},
                     {"p2", rational_text(commuting_probability(g))}};
    os << j.dump(2) << '\n';
    return kOk;
  }
  std::vector<Vertex> zv(z.members().begin(), z.members().end());
  SimpleGraph names(static_cast<std::size_t>(g.order()));
  names.set_labels({g.element_names().begin(), g.element_names().end()});
  os << "group: " << g.name() << '\n'
     << "order: " << g.order() << '\n'
     << "abelian: " << (is_abelian(g) ? "yes" : "no") << '\n'
     << "center: {" << join_labels(names, zv) << "}\n"
     << "conjugacy classes: " << classes.count() << '\n';
  for (const auto& c : classes.classes) {
    std::vector<Vertex> members(c.members().begin(), c.members().end());
    os << "  {" << join_labels(names, members) << "}\n";
  }
  os << "commuting probability: " << rational_text(commuting_probability(g)) << '\n';
  return kOk;
}

int run_graph(const Options& o, std::ostream& out) {
  const auto g = parse_group_selector(o.group);
  const auto lg = build_commuting_graph(g, parse_variant(o.variant));
  Sink sink(o.output, out);
  if (o.format == "dot") {
    sink.stream() << to_dot(lg.graph, g.name());
  } else if (o.format.empty() || o.format == "edgelist") {
    sink.stream() << to_edge_list(lg.graph, true);
  } else {
    throw std::invalid_argument("graph supports --format dot or edgelist");
  }
  return kOk;
}

int run_recognize(const Options& o, std::ostream& out) {
  SimpleGraph graph;
  std::string title;
  if (!o.graph_file.empty()) {
    graph = parse_edge_list(read_file(o.graph_file));
    title = o.graph_file;
  } else {
    const auto g = parse_group_selector(o.group);
    graph = build_commuting_graph(g, parse_variant(o.variant)).graph;
    title = g.name() + " (" + o.variant + ")";
  }
  const auto& family = forbidden_family();
  const auto line = is_line_graph(graph, family);
  const auto coline = is_complement_of_line_graph(graph, family);
  const bool small = graph.vertex_count() <= kKrauszVertexGuard;
  std::optional<RecognitionResult> krausz, complement_krausz;
  if (small && line.verdict) krausz = krausz_oracle(graph);
  if (small && coline.verdict) complement_krausz = krausz_oracle(complement(graph));

  Sink sink(o.output, out);
  auto& os = sink.stream();
  if (o.format == "structured") {
    nlohmann::json j{{"graph", title},
                     {"vertices", graph.vertex_count()},
                     {"edges", edge_count(graph)},
                     {"line", recognition_to_json(graph, line)},
                     {"complement_line", recognition_to_json(graph, coline)}};
    if (krausz) j["line_krausz"] = recognition_to_json(graph, *krausz);
    if (complement_krausz) {
      j["complement_krausz"] = recognition_to_json(complement(graph), *complement_krausz);
    }
    os << j.dump(2) << '\n';
    return kOk;
  }
  if (!o.format.empty() && o.format != "report") {
    throw std::invalid_argument("recognize supports --format report or structured");
  }
  os << "graph: " << title << ", " << graph.vertex_count() << " vertices, " << edge_count(graph)
     << " edges\n";
  os << "line graph: " << (line.verdict ? "yes" : "no") << '\n';
  print_certificate(os, graph, line, family.members.size());
  if (krausz) print_krausz(os, graph, *krausz, "");
  os << "complement of line graph: " << (coline.verdict ? "yes" : "no") << '\n';
  print_certificate(os, graph, coline, family.complemented_members.size());
  if (complement_krausz) print_krausz(os, graph, *complement_krausz, " of the complement");
  return kOk;
}

int run_forbidden(const Options& o, std::ostream& out) {
  const auto family = derive_forbidden_family();
  Sink sink(o.output, out);
  auto& os = sink.stream();
  os << format_family(family, o.complement);
  const auto& graphs = o.complement ? family.complemented_members : family.members;
  os << "# member vertices edges\n";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    os << "# " << i + 1 << ' ' << graphs[i].vertex_count() << ' ' << edge_count(graphs[i]) << '\n';
  }
  return kOk;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<CorpusEntry> corpus;
  if (!o.corpus_file.empty()) {
    std::istringstream in(read_file(o.corpus_file));
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string selector;
      if (!(fields >> selector) || selector[0] == '#') continue;
      corpus.push_back(make_entry(parse_group_selector(selector)));
    }
  } else {
    corpus = default_corpus(o.include_large);
  }
  if (!o.only.empty()) {
    std::vector<CorpusEntry> chosen;
    for (const auto& name : split(o.only, ',')) {
      auto it = std::find_if(corpus.begin(), corpus.end(),
                             [&](const CorpusEntry& e) { return e.name == name; });
      chosen.push_back(it != corpus.end() ? *it : make_entry(parse_group_selector(name)));
    }
    corpus = std::move(chosen);
  }

  VerifyOptions options;
  options.hereditary_seed = o.seed;
  options.threads = o.threads;
  const auto report = verify_corpus(corpus, options);

  Sink sink(o.output, out);
  auto& os = sink.stream();
  if (o.format == "structured") {
    os << corpus_report_to_json(report).dump(2) << '\n';
  } else if (o.format.empty() || o.format == "report") {
    for (const auto& r : report.reports) os << format_report_line(r) << '\n';
    os << format_summary(report.summary) << '\n';
  } else {
    throw std::invalid_argument("verify supports --format report or structured");
  }
  err << "verified " << report.summary.groups << " groups in " << report.summary.seconds << " s\n";
  if (report.summary.mismatches > 0) {
    for (const auto& r : report.reports) {
      for (const auto& m : r.mismatches) err << "mismatch: " << r.name << ": " << m << '\n';
    }
    return kMismatch;
  }
  return kOk;
}

}  // namespace

FiniteGroup parse_group_selector(std::string_view selector) {
  if (selector.empty()) throw std::invalid_argument("empty group selector");
  if (selector.front() == '@') {
    const std::string path(selector.substr(1));
    auto name = path.substr(path.find_last_of('/') + 1);
    return from_cayley_table(read_file(path), name);
  }
  const auto factors = split(std::string(selector), 'x');
  if (factors.empty()) throw std::invalid_argument("bad group selector '" + std::string(selector) + "'");
  FiniteGroup g = parse_factor(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, parse_factor(factors[i]));
  return g;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commuting graphs of finite groups and line-graph recognition"};
  app.require_subcommand(1);
  Options o;

  auto* group = app.add_subcommand("group", "Describe a group: center, classes, P2");
  group->add_option("--group,-g", o.group, "Group selector (Zn, Dn, Dicm, Sk, Ak, Q8, GxH, @file)")
      ->required();
  group->add_option("--format,-f", o.format, "report, structured or table")
      ->check(CLI::IsMember({"report", "structured", "table"}));
  group->add_option("--output,-o", o.output, "Write to this file");

  auto* graph = app.add_subcommand("graph", "Export a commuting graph");
  graph->add_option("--group,-g", o.group, "Group selector")->required();
  graph->add_option("--variant,-v", o.variant, "full, star or double_star")
      ->check(CLI::IsMember({"full", "star", "double_star"}));
  graph->add_option("--format,-f", o.format, "dot or edgelist")
      ->check(CLI::IsMember({"dot", "edgelist"}));
  graph->add_option("--output,-o", o.output, "Write to this file");

  auto* recognize = app.add_subcommand("recognize", "Line / complement-of-line graph recognition");
  auto* rg = recognize->add_option("--group,-g", o.group, "Group selector");
  auto* rf = recognize->add_option("--graph", o.graph_file, "Edge-list file");
  rg->excludes(rf);
  recognize->add_option("--variant,-v", o.variant, "full, star or double_star")
      ->check(CLI::IsMember({"full", "star", "double_star"}));
  recognize->add_option("--format,-f", o.format, "report or structured")
      ->check(CLI::IsMember({"report", "structured"}));
  recognize->add_option("--output,-o", o.output, "Write to this file");

  auto* forbidden = app.add_subcommand("forbidden", "Derive the forbidden induced subgraphs of line graphs");
  forbidden->add_flag("--complement", o.complement, "Print the complemented family");
  forbidden->add_option("--output,-o", o.output, "Write to this file");

  auto* verify = app.add_subcommand("verify", "Check the classification theorems over a corpus");
  verify->add_option("--only", o.only, "Comma-separated group names or selectors");
  verify->add_option("--corpus", o.corpus_file, "File with one group selector per line");
  verify->add_flag("--include-large", o.include_large, "Add S5 to the default corpus");
  verify->add_option("--format,-f", o.format, "report or structured")
      ->check(CLI::IsMember({"report", "structured"}));
  verify->add_option("--seed", o.seed, "Also check random induced subgraphs of every line graph");
  verify->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  verify->add_option("--output,-o", o.output, "Write to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*group) return run_group(o, out);
    if (*graph) return run_graph(o, out);
    if (*recognize) {
      if (o.group.empty() && o.graph_file.empty()) {
        throw std::invalid_argument("recognize needs --group or --graph");
      }
      return run_recognize(o, out);
    }
    if (*forbidden) return run_forbidden(o, out);
    if (*verify) return run_verify(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace commgraph::cli
