#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eraskit/expr.hpp"
#include "eraskit/parallel.hpp"

namespace eraskit {

/// Exact nonnegative fraction; always stored reduced with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);
Rational add(const Rational& a, const Rational& b);

/// Diagonal density operator over token positions: nonnegative weights that
/// sum to one for a fresh preparation.
struct DensityOperator {
  std::vector<double> weights;

  std::size_t dim() const { return weights.size(); }
  double total_weight() const;
};

/// Diagonal 0/1 projector onto a keep-set. Idempotent entrywise by
/// construction.
struct Projector {
  Bitmask diagonal;

  std::size_t dim() const { return diagonal.size(); }
  double entry(std::size_t pos) const { return diagonal.test(pos) ? 1.0 : 0.0; }
};

/// Uniform preparation 1/n per token position.
DensityOperator uniform_density(std::size_t dim);

Projector keep_projector(const Bitmask& keep);

/// Trace(P rho) for diagonal operators: the rho-mass on the keep-set.
double trace_product(const Projector& projector, const DensityOperator& rho);

/// P rho P: zeroes the weights outside the projector (no renormalization).
DensityOperator collapse(const Projector& projector, const DensityOperator& rho);

enum class ProbBackend { Counting, Trace };
enum class CollectionWeighting { ByTokens, Uniform };

/// Counting-backend results carry the exact fraction alongside the decimal.
struct ProbResult {
  double value = 0.0;
  std::optional<Rational> exact;
};

struct ProbQuery {
  EraserExpr target;
  std::optional<Pipeline> given;  // required for Implication
  enum class Kind { Plain, Conditional, Implication } kind = Kind::Plain;
  ProbBackend backend = ProbBackend::Counting;
};

/// Surviving-token fraction of `expr` on a pristine document, exact.
/// Throws UndefinedProbability on an empty document.
Rational fraction(const EraserExpr& expr, const Document& doc, SemanticsMode mode);

/// Probability that a uniformly random token survives `expr`. The counting
/// backend returns the exact fraction; the trace backend evaluates
/// Trace(P_E rho_D) with the uniform diagonal preparation. The two agree
/// within floating-point rounding.
ProbResult prob_doc(const EraserExpr& expr, const Document& doc, ProbBackend backend);

/// Probability of surviving `e2` after the pipeline prefix has been applied
/// (not renormalized). Trace backend folds rho <- P rho P over the prefix,
/// building each projector from the keep-set at the state it applies to.
ProbResult prob_conditional(const EraserExpr& e2, const Pipeline& prefix,
                            const Document& doc, ProbBackend backend);

/// Ratio form: survival of e2 within what e1 leaves alive. Throws
/// UndefinedProbability when e1 erases the whole document.
ProbResult prob_implication(const EraserExpr& e1, const EraserExpr& e2,
                            const Document& doc, ProbBackend backend);

/// Mixture over the corpus, weighted by token count by default (so the
/// value is "total unerased tokens / total tokens"); Uniform weights every
/// document equally instead. The trace backend realizes the mixture as a
/// block-diagonal preparation over the concatenated positions.
ProbResult prob_collection(const EraserExpr& expr, const Corpus& corpus,
                           ProbBackend backend,
                           CollectionWeighting weighting = CollectionWeighting::ByTokens,
                           Execution exec = Execution::Parallel);

/// Dispatches a ProbQuery against one document.
ProbResult evaluate_query(const ProbQuery& query, const Document& doc);

}  // namespace eraskit
