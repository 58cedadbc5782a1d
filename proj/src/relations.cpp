#include "eraskit/relations.hpp"

namespace eraskit {

DocVerdict order_relation(const EraserExpr& e1, const EraserExpr& e2,
                          const Document& doc, SemanticsMode mode) {
  Document pristine(doc.id, doc.tokens);

  const Document d1 = apply_expr(e1, pristine, mode);
  const Document d2 = apply_expr(e2, pristine, mode);
  const Document d2_after_d1 = apply_expr(e2, d1, mode);
  const Document d1_after_d2 = apply_expr(e1, d2, mode);

  DocVerdict verdict;
  verdict.doc_id = doc.id;
  verdict.geq = d2_after_d1.mask == d2.mask;
  verdict.leq = d1_after_d2.mask == d1.mask;
  verdict.commutes = d2_after_d1.mask == d1_after_d2.mask;
  verdict.vacuous = d2.mask.none();
  return verdict;
}

RelationReport corpus_relation(const EraserExpr& e1, const EraserExpr& e2,
                               const Corpus& corpus, SemanticsMode mode,
                               Execution exec) {
  RelationReport report{e1, e2, mode, {}, true, true, false};
  report.verdicts.resize(corpus.docs.size());
  for_each_index(corpus.docs.size(), exec, [&](std::size_t i) {
    report.verdicts[i] = order_relation(e1, e2, corpus.docs[i], mode);
  });
  for (const DocVerdict& v : report.verdicts) {
    report.corpus_geq = report.corpus_geq && v.geq;
    report.corpus_leq = report.corpus_leq && v.leq;
  }
  report.corpus_incompatible = !report.corpus_geq && !report.corpus_leq;
  return report;
}

ClusterPartition cluster_by_relation(const EraserExpr& e1, const EraserExpr& e2,
                                     const Corpus& corpus, SemanticsMode mode,
                                     Execution exec) {
  std::vector<DocVerdict> verdicts(corpus.docs.size());
  for_each_index(corpus.docs.size(), exec, [&](std::size_t i) {
    verdicts[i] = order_relation(e1, e2, corpus.docs[i], mode);
  });
  ClusterPartition partition;
  for (const DocVerdict& v : verdicts) {
    if (v.geq && !v.vacuous) {
      partition.holds.push_back(v.doc_id);
    } else if (v.geq) {
      partition.holds_vacuously.push_back(v.doc_id);
    } else {
      partition.fails.push_back(v.doc_id);
    }
  }
  return partition;
}

std::optional<ImpliedOrder> implied_order(const AtomicEraser& e1, const AtomicEraser& e2) {
  if (e1.term != e2.term) return std::nullopt;
  if (e1.halfwidth == e2.halfwidth) return ImpliedOrder::Equal;
  return e1.halfwidth > e2.halfwidth ? ImpliedOrder::GreaterEqual : ImpliedOrder::LessEqual;
}

}  // namespace eraskit
