#pragma once

#include "commgraph/line_graph.hpp"
#include "commgraph/theorems.hpp"

#include <json.hpp>

namespace commgraph {

// Structured (JSON) forms of the line-oriented reports. Certificates carry
// raw host vertex indices next to their labels so they can be replayed.
nlohmann::json recognition_to_json(const SimpleGraph& host, const RecognitionResult& result);
nlohmann::json report_to_json(const TheoremReport& report);
nlohmann::json corpus_report_to_json(const CorpusReport& report);

}  // namespace commgraph
