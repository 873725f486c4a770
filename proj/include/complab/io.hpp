#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "complab/characterization.hpp"
#include "complab/competition.hpp"
#include "complab/digraph.hpp"
#include "complab/graph.hpp"
#include "complab/sink_analysis.hpp"

namespace complab {

using Json = nlohmann::ordered_json;

struct LoadedInstance {
  Digraph digraph;
  std::optional<BipartiteTournament> tournament;
};

/// Accepts the bipartite form {"n1","n2","labels1","labels2","arcs"} or the
/// general form {"n","labels","arcs"}. Arc endpoints are labels (strings) or
/// vertex indices (integers). Labels default to x1.., y1.. (bipartite) or
/// 0.. (general). Throws Error{Parse}, Error{UnknownLabel},
/// Error{DuplicateArc} or any bipartite-tournament validation error.
LoadedInstance instance_from_json(const Json& j);
LoadedInstance load_instance(const std::filesystem::path& path);

Json to_json(const Digraph& d);
Json to_json(const BipartiteTournament& bt);

/// {"zeta", "W": [[labels]...], "acyclic"}
Json to_json(const SinkAnalysis& a, const Digraph& labels_from);

/// {"vertices": [labels], "edges": [[label, label]...]}
Json to_json(const Graph& g, const Digraph& labels_from);

/// {"cindex", "cperiod"}
Json to_json(const CompetitionProfile& p);

/// {"instance", "checks": [{"name","status","witness"}...]}
Json to_json(const VerificationReport& r, const BipartiteTournament& bt);

std::string to_text(const VerificationReport& r);

/// Digraph DOT. With a bipartition, part 1 and part 2 each share a rank.
std::string to_dot(const Digraph& d, const std::string& name = "D");
std::string to_dot(const BipartiteTournament& bt, const std::string& name = "D");

/// Undirected DOT; an edgeless graph has node statements only.
std::string to_dot(const Graph& g, const Digraph& labels_from, const std::string& name = "C");

}  // namespace complab
