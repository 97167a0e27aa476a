#pragma once

#include "commgraph/commuting_graph.hpp"
#include "commgraph/group.hpp"
#include "commgraph/line_graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace commgraph {

struct CorpusEntry {
  std::string name;
  FiniteGroup group;
  std::set<std::string> tags;
};

// Tags: "abelian"/"non-abelian", "center-<k>", "trivial-center", "large".
CorpusEntry make_entry(FiniteGroup group);

// Abelian, trivial-center, center-2 and larger-center groups, all of order
// at most 64. `include_large` appends S5.
std::vector<CorpusEntry> default_corpus(bool include_large = false);

// ---------------------------------------------------------------------------
// Group-side predicates

bool predicate_gamma_line(const FiniteGroup& g);       // G abelian
bool predicate_gamma_star_line(const FiniteGroup& g);  // abelian, or Z(G)=1 and CA
// Every non-central element has an abelian centralizer.
bool all_noncentral_centralizers_abelian(const FiniteGroup& g);

struct DoubleStarPrediction {
  bool value = true;
  bool vacuous = false;  // G abelian: Γ**(G) has no vertices
};
DoubleStarPrediction predicate_gamma_dstar_line(const FiniteGroup& g);

bool predicate_complement_line(const FiniteGroup& g);  // abelian, D4 or Q8

// n(n-1)/4 > floor((n-1)^2/4) in exact integer arithmetic. Throws
// std::invalid_argument for n < 2.
bool eq1_check(std::int64_t n);

// ---------------------------------------------------------------------------
// Reports

constexpr std::array<Variant, 3> kVariants = {Variant::kFull, Variant::kStar, Variant::kDoubleStar};

struct VariantOutcome {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  RecognitionResult line;             // Beineke scan of Δ(G)
  RecognitionResult complement_line;  // both routes, certificate from the direct scan
  std::optional<RecognitionResult> krausz;  // when the graph is within the oracle guard
};

struct TheoremReport {
  std::string name;
  int order = 0;
  int center_size = 0;
  bool abelian = false;
  Rational p2;
  bool all_noncentral_centralizers_abelian = false;
  // Indexed like kVariants: Γ, Γ*, Γ**.
  std::array<bool, 3> verdict_line{};
  std::array<bool, 3> verdict_complement_line{};
  std::array<bool, 3> predicted_line{};
  std::array<bool, 3> predicted_complement_line{};
  bool dstar_vacuous = false;
  std::array<VariantOutcome, 3> outcomes;
  std::vector<std::string> mismatches;
};

struct VerifyOptions {
  // When set, each line-graph verdict is also checked on random induced
  // subgraphs drawn from this seed.
  std::optional<std::uint64_t> hereditary_seed;
  int hereditary_samples = 50;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Builds Γ, Γ*, Γ** and records every verdict against its prediction.
// Discrepancies are collected in `mismatches`, never thrown.
TheoremReport verify_group(const CorpusEntry& entry, const VerifyOptions& options = {});

struct CorpusSummary {
  std::size_t groups = 0;
  std::size_t groups_with_mismatches = 0;
  std::size_t mismatches = 0;
  double seconds = 0.0;
};

struct CorpusReport {
  std::vector<TheoremReport> reports;  // corpus order
  CorpusSummary summary;
};

CorpusReport verify_corpus(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options = {});

// One line per group, fixed field order.
std::string format_report_line(const TheoremReport& report);
std::string format_summary(const CorpusSummary& summary);

}  // namespace commgraph
