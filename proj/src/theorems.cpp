#include "commgraph/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace commgraph {

CorpusEntry make_entry(FiniteGroup group) {
  CorpusEntry entry{group.name(), group, {}};
  const auto z = center(group).size();
  entry.tags.insert(is_abelian(group) ? "abelian" : "non-abelian");
  entry.tags.insert("center-" + std::to_string(z));
  if (z == 1) entry.tags.insert("trivial-center");
  if (group.order() > 64) entry.tags.insert("large");
  return entry;
}

std::vector<CorpusEntry> default_corpus(bool include_large) {
  std::vector<FiniteGroup> groups;
  for (int n = 1; n <= 16; ++n) groups.push_back(make_cyclic(n));
  const auto z2 = make_cyclic(2);
  groups.push_back(direct_product(z2, z2));
  groups.push_back(direct_product(z2, make_cyclic(4)));
  groups.push_back(direct_product(direct_product(z2, z2), z2));

  for (int n : {3, 5, 7, 9}) groups.push_back(make_dihedral(n));
  groups.push_back(make_symmetric(3));
  groups.push_back(make_symmetric(4));
  groups.push_back(make_alternating(4));
  groups.push_back(make_alternating(5));

  for (int n : {4, 6, 8, 10}) groups.push_back(make_dihedral(n));
  for (int m : {2, 3, 4}) groups.push_back(make_dicyclic(m));

  groups.push_back(direct_product(make_dihedral(4), z2));
  groups.push_back(direct_product(make_dicyclic(2), z2));
  groups.push_back(direct_product(make_dihedral(4), make_cyclic(3)));

  if (include_large) groups.push_back(make_symmetric(5));

  std::vector<CorpusEntry> corpus;
  for (auto& g : groups) corpus.push_back(make_entry(std::move(g)));
  return corpus;
}

// ---------------------------------------------------------------------------
// Predicates

bool predicate_gamma_line(const FiniteGroup& g) { return is_abelian(g); }

bool all_noncentral_centralizers_abelian(const FiniteGroup& g) {
  const auto z = center(g);
  for (Element x = 0; x < g.order(); ++x) {
    if (z.contains(x)) continue;
    if (!centralizer(g, x).is_commutative()) return false;
  }
  return true;
}

bool predicate_gamma_star_line(const FiniteGroup& g) {
  if (is_abelian(g)) return true;
  return center(g).size() == 1 && all_noncentral_centralizers_abelian(g);
}

DoubleStarPrediction predicate_gamma_dstar_line(const FiniteGroup& g) {
  if (is_abelian(g)) return {true, true};
  return {all_noncentral_centralizers_abelian(g), false};
}

bool predicate_complement_line(const FiniteGroup& g) {
  return is_abelian(g) || isomorphic_to_named(g, NamedGroup::kD4) ||
         isomorphic_to_named(g, NamedGroup::kQ8);
}

bool eq1_check(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("eq1_check needs n >= 2, got " + std::to_string(n));
  const std::int64_t floor_term = (n - 1) * (n - 1) / 4;
  return n * (n - 1) > 4 * floor_term;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void check_hereditary(const TheoremReport& report, const SimpleGraph& g, Variant variant,
                      std::uint64_t seed, int samples, std::vector<std::string>& mismatches) {
  std::mt19937_64 rng(seed ^ name_hash(report.name) ^ static_cast<std::uint64_t>(variant));
  std::bernoulli_distribution keep(0.5);
  std::vector<Vertex> subset;
  for (int s = 0; s < samples; ++s) {
    subset.clear();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (keep(rng)) subset.push_back(static_cast<Vertex>(v));
    }
    if (!is_line_graph(induced_subgraph(g, subset)).verdict) {
      mismatches.push_back("hereditary[" + std::string(variant_name(variant)) + "]: sample " +
                           std::to_string(s) + " is not a line graph");
      return;
    }
  }
}

}  // namespace

TheoremReport verify_group(const CorpusEntry& entry, const VerifyOptions& options) {
  const FiniteGroup& g = entry.group;
  TheoremReport report;
  auto& mismatches = report.mismatches;
  report.name = entry.name;
  report.order = g.order();
  const auto z = center(g);
  report.center_size = static_cast<int>(z.size());
  report.abelian = is_abelian(g);
  report.p2 = commuting_probability(g);
  report.all_noncentral_centralizers_abelian = all_noncentral_centralizers_abelian(g);

  if (report.p2 != commuting_pair_ratio(g)) {
    mismatches.push_back("p2: class count and pair count disagree");
  }
  // The trivial group is the one abelian group with trivial center.
  if (report.center_size == 1 && report.order > 1 && report.p2 > Rational(1, 2)) {
    mismatches.push_back("p2: trivial center but P2 > 1/2");
  }
  const auto dom = dominating_elements(g);
  if (!std::equal(dom.begin(), dom.end(), z.members().begin(), z.members().end())) {
    mismatches.push_back("dom: dominating vertices differ from the center");
  }

  const auto dstar = predicate_gamma_dstar_line(g);
  const bool complement_prediction = predicate_complement_line(g);
  report.dstar_vacuous = dstar.vacuous;
  report.predicted_line = {predicate_gamma_line(g), predicate_gamma_star_line(g), dstar.value};
  report.predicted_complement_line = {complement_prediction, complement_prediction,
                                      complement_prediction};

  for (std::size_t i = 0; i < kVariants.size(); ++i) {
    const Variant variant = kVariants[i];
    const std::string tag(variant_name(variant));
    LabeledCommutingGraph lg;
    try {
      lg = build_commuting_graph(g, variant);
    } catch (const std::logic_error& e) {
      mismatches.push_back("construction[" + tag + "]: " + e.what());
      continue;
    }
    const SimpleGraph& graph = lg.graph;
    auto& outcome = report.outcomes[i];
    outcome.vertex_count = graph.vertex_count();
    outcome.edge_count = edge_count(graph);

    if (variant == Variant::kFull && is_complete(graph) != report.abelian) {
      mismatches.push_back("complete: completeness of the commuting graph differs from abelianness");
    }

    outcome.line = is_line_graph(graph);
    try {
      outcome.complement_line = is_complement_of_line_graph(graph);
    } catch (const std::logic_error& e) {
      mismatches.push_back("coline[" + tag + "]: " + e.what());
      outcome.complement_line = is_line_graph(complement(graph));
    }
    report.verdict_line[i] = outcome.line.verdict;
    report.verdict_complement_line[i] = outcome.complement_line.verdict;

    for (const auto* result : {&outcome.line, &outcome.complement_line}) {
      if (!result->verdict && (!result->embedding || !is_valid_embedding(graph, *result->embedding))) {
        mismatches.push_back("certificate[" + tag + "]: forbidden embedding does not replay");
      }
    }
    if (graph.vertex_count() <= kKrauszVertexGuard) {
      outcome.krausz = krausz_oracle(graph);
      const auto& k = *outcome.krausz;
      if (k.verdict != outcome.line.verdict) {
        mismatches.push_back("oracle[" + tag + "]: Krausz and forbidden-subgraph verdicts differ");
      }
      if (k.verdict && !(k.partition && is_valid_partition(graph, *k.partition) && k.root &&
                         is_valid_root(graph, *k.root))) {
        mismatches.push_back("certificate[" + tag + "]: Krausz partition does not replay");
      }
    }

    const bool checked = !(variant == Variant::kDoubleStar && dstar.vacuous);
    if (checked && report.verdict_line[i] != report.predicted_line[i]) {
      mismatches.push_back("line[" + tag + "]: verdict " + yes_no(report.verdict_line[i]) +
                           ", predicted " + yes_no(report.predicted_line[i]));
    }
    if (checked && report.verdict_complement_line[i] != report.predicted_complement_line[i]) {
      mismatches.push_back("coline[" + tag + "]: verdict " +
                           yes_no(report.verdict_complement_line[i]) + ", predicted " +
                           yes_no(report.predicted_complement_line[i]));
    }
    if (options.hereditary_seed && outcome.line.verdict) {
      check_hereditary(report, graph, variant, *options.hereditary_seed, options.hereditary_samples,
                       mismatches);
    }
  }
  return report;
}

CorpusReport verify_corpus(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  forbidden_family();  // derive before the workers start

  CorpusReport out;
  out.reports.resize(corpus.size());
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(corpus.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      out.reports[i] = verify_group(corpus[i], options);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  out.summary.groups = corpus.size();
  for (const auto& r : out.reports) {
    out.summary.mismatches += r.mismatches.size();
    out.summary.groups_with_mismatches += !r.mismatches.empty();
  }
  out.summary.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string format_report_line(const TheoremReport& r) {
  std::ostringstream os;
  os << r.name << " order=" << r.order << " center=" << r.center_size
     << " abelian=" << yes_no(r.abelian) << " p2=" << r.p2.numerator() << '/' << r.p2.denominator();
  for (std::size_t i = 0; i < kVariants.size(); ++i) {
    os << " line." << variant_name(kVariants[i]) << '=' << yes_no(r.verdict_line[i]);
  }
  for (std::size_t i = 0; i < kVariants.size(); ++i) {
    os << " coline." << variant_name(kVariants[i]) << '=' << yes_no(r.verdict_complement_line[i]);
  }
  for (std::size_t i = 0; i < kVariants.size(); ++i) {
    os << " pred.line." << variant_name(kVariants[i]) << '=' << yes_no(r.predicted_line[i]);
  }
  for (std::size_t i = 0; i < kVariants.size(); ++i) {
    os << " pred.coline." << variant_name(kVariants[i]) << '='
       << yes_no(r.predicted_complement_line[i]);
  }
  os << " mismatches=";
  if (r.mismatches.empty()) {
    os << "none";
  } else {
    for (std::size_t i = 0; i < r.mismatches.size(); ++i) os << (i ? "; " : "") << r.mismatches[i];
  }
  return os.str();
}

std::string format_summary(const CorpusSummary& s) {
  return "groups: " + std::to_string(s.groups) + ", mismatches: " + std::to_string(s.mismatches);
}

}  // namespace commgraph
