#pragma once

#include <string>

#include <json.hpp>

#include "eraskit/probability.hpp"
#include "eraskit/relations.hpp"

namespace eraskit {

// nlohmann::json keeps object keys sorted, which gives the byte-stable
// reports the CLI promises.

void to_json(nlohmann::json& j, const Rational& r);
void to_json(nlohmann::json& j, const ProbResult& r);
void to_json(nlohmann::json& j, const DocVerdict& v);
void to_json(nlohmann::json& j, const RelationReport& r);
void to_json(nlohmann::json& j, const ClusterPartition& p);

std::string to_string(SemanticsMode mode);
std::string to_string(ProbBackend backend);
std::string to_string(CollectionWeighting weighting);

/// Standard report envelope: tool_version, mode, backend, query, results.
nlohmann::json make_report(SemanticsMode mode, ProbBackend backend,
                           const std::string& query, nlohmann::json results);

}  // namespace eraskit
