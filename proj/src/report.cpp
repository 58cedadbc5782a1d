#include "eraskit/report.hpp"

#include "eraskit/parser.hpp"
#include "eraskit/version.hpp"

namespace eraskit {

void to_json(nlohmann::json& j, const Rational& r) {
  j = nlohmann::json{{"num", r.num}, {"den", r.den}};
}

void to_json(nlohmann::json& j, const ProbResult& r) {
  j = nlohmann::json{{"value", r.value}};
  if (r.exact) j["exact"] = *r.exact;
}

void to_json(nlohmann::json& j, const DocVerdict& v) {
  j = nlohmann::json{{"doc_id", v.doc_id},
                     {"geq", v.geq},
                     {"leq", v.leq},
                     {"commutes", v.commutes},
                     {"vacuous", v.vacuous}};
}

void to_json(nlohmann::json& j, const RelationReport& r) {
  bool commutes_all = true;
  for (const DocVerdict& v : r.verdicts) commutes_all = commutes_all && v.commutes;
  j = nlohmann::json{{"e1", format_expr(r.e1)},
                     {"e2", format_expr(r.e2)},
                     {"corpus_geq", r.corpus_geq},
                     {"corpus_leq", r.corpus_leq},
                     {"corpus_incompatible", r.corpus_incompatible},
                     {"commutes_all", commutes_all},
                     {"verdicts", r.verdicts}};
}

void to_json(nlohmann::json& j, const ClusterPartition& p) {
  j = nlohmann::json{{"holds", p.holds},
                     {"holds_vacuously", p.holds_vacuously},
                     {"fails", p.fails}};
}

std::string to_string(SemanticsMode mode) {
  return mode == SemanticsMode::Dynamic ? "dynamic" : "static";
}

std::string to_string(ProbBackend backend) {
  return backend == ProbBackend::Counting ? "counting" : "trace";
}

std::string to_string(CollectionWeighting weighting) {
  return weighting == CollectionWeighting::ByTokens ? "by-tokens" : "uniform";
}

nlohmann::json make_report(SemanticsMode mode, ProbBackend backend,
                           const std::string& query, nlohmann::json results) {
  return nlohmann::json{{"tool_version", kToolVersion},
                        {"mode", to_string(mode)},
                        {"backend", to_string(backend)},
                        {"query", query},
                        {"results", std::move(results)}};
}

}  // namespace eraskit
