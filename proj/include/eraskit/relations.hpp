#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eraskit/expr.hpp"
#include "eraskit/parallel.hpp"

namespace eraskit {

/// Per-document verdict for a pair of erasers. geq means "applying e1 first
/// does not change what e2 alone would leave" on this document (e1 >= e2);
/// leq is the mirror image. Both can hold (equality) or neither (candidate
/// incompatibility). vacuous marks documents where e2 alone erases
/// everything, so geq holds with no content behind it.
struct DocVerdict {
  std::string doc_id;
  bool geq = false;
  bool leq = false;
  bool commutes = false;
  bool vacuous = false;

  bool operator==(const DocVerdict&) const = default;
};

struct RelationReport {
  EraserExpr e1;
  EraserExpr e2;
  SemanticsMode mode;
  std::vector<DocVerdict> verdicts;  // sorted by doc id (corpus order)
  bool corpus_geq = false;
  bool corpus_leq = false;
  bool corpus_incompatible = false;  // neither direction holds corpus-wide
};

/// Three-way split of a corpus by whether e1 >= e2 holds per document.
struct ClusterPartition {
  std::vector<std::string> holds;
  std::vector<std::string> holds_vacuously;
  std::vector<std::string> fails;

  bool operator==(const ClusterPartition&) const = default;
};

enum class ImpliedOrder { GreaterEqual, LessEqual, Equal };

/// Evaluates both application orders against each single eraser from the
/// pristine document (the relation is defined on pristine states; any
/// existing erasure on `doc` is ignored).
DocVerdict order_relation(const EraserExpr& e1, const EraserExpr& e2,
                          const Document& doc, SemanticsMode mode);

RelationReport corpus_relation(const EraserExpr& e1, const EraserExpr& e2,
                               const Corpus& corpus, SemanticsMode mode,
                               Execution exec = Execution::Parallel);

ClusterPartition cluster_by_relation(const EraserExpr& e1, const EraserExpr& e2,
                                     const Corpus& corpus, SemanticsMode mode,
                                     Execution exec = Execution::Parallel);

/// Order relation implied by the window propositions alone, independent of
/// any document: same central term with nested widths. Everything else is
/// contingent on the corpus and returns nullopt.
std::optional<ImpliedOrder> implied_order(const AtomicEraser& e1, const AtomicEraser& e2);

}  // namespace eraskit
