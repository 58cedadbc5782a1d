#include "eraskit/probability.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "eraskit/errors.hpp"

namespace eraskit {

namespace {

std::int64_t checked_int64(__int128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error(what);
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

Rational add(const Rational& a, const Rational& b) {
  // Reduce in 128-bit before narrowing back to int64.
  __int128 num = static_cast<__int128>(a.num) * b.den +
                 static_cast<__int128>(b.num) * a.den;
  __int128 den = static_cast<__int128>(a.den) * b.den;
  __int128 x = num < 0 ? -num : num;
  __int128 y = den;
  while (y != 0) {
    const __int128 t = x % y;
    x = y;
    y = t;
  }
  if (x != 0) {
    num /= x;
    den /= x;
  }
  return Rational{checked_int64(num, "rational overflow"),
                  checked_int64(den, "rational overflow")};
}

double DensityOperator::total_weight() const {
  double total = 0.0;
  for (double w : weights) total += w;
  return total;
}

DensityOperator uniform_density(std::size_t dim) {
  if (dim == 0) throw UndefinedProbability("cannot prepare a zero-token document");
  return DensityOperator{std::vector<double>(dim, 1.0 / static_cast<double>(dim))};
}

Projector keep_projector(const Bitmask& keep) { return Projector{keep}; }

double trace_product(const Projector& projector, const DensityOperator& rho) {
  double trace = 0.0;
  for (std::size_t pos : projector.diagonal.positions()) trace += rho.weights[pos];
  return trace;
}

DensityOperator collapse(const Projector& projector, const DensityOperator& rho) {
  DensityOperator out = rho;
  for (std::size_t pos = 0; pos < out.weights.size(); ++pos) {
    if (!projector.diagonal.test(pos)) out.weights[pos] = 0.0;
  }
  return out;
}

namespace {

void require_nonempty(const Document& doc) {
  if (doc.token_count() == 0) {
    throw UndefinedProbability("probability undefined on an empty document (|D| = 0)");
  }
}

ProbResult from_rational(const Rational& r) { return ProbResult{r.value(), r}; }

struct ConditionedState {
  DensityOperator rho;
  Document state;
};

/// Folds rho <- P rho P over the pipeline. Each step's projector comes from
/// the keep-set evaluated at the document state that step sees, which is what
/// makes the trace backend reproduce order-dependent sequential counting.
ConditionedState condition_on(const Pipeline& prefix, const Document& doc) {
  ConditionedState st{uniform_density(doc.token_count()), doc};
  for (const EraserExpr& step : prefix.steps) {
    const Projector p = keep_projector(composite_keep_set(step, st.state, SemanticsMode::Dynamic));
    st.rho = collapse(p, st.rho);
    st.state = apply_expr(step, st.state, SemanticsMode::Dynamic);
  }
  return st;
}

}  // namespace

Rational fraction(const EraserExpr& expr, const Document& doc, SemanticsMode mode) {
  require_nonempty(doc);
  const std::size_t kept = alive_count(apply_expr(expr, doc, mode));
  return make_rational(static_cast<std::int64_t>(kept),
                       static_cast<std::int64_t>(doc.token_count()));
}

ProbResult prob_doc(const EraserExpr& expr, const Document& doc, ProbBackend backend) {
  require_nonempty(doc);
  if (backend == ProbBackend::Counting) {
    return from_rational(fraction(expr, doc, SemanticsMode::Dynamic));
  }
  const DensityOperator rho = uniform_density(doc.token_count());
  const Projector p = keep_projector(composite_keep_set(expr, doc, SemanticsMode::Dynamic));
  return ProbResult{trace_product(p, rho), std::nullopt};
}

ProbResult prob_conditional(const EraserExpr& e2, const Pipeline& prefix,
                            const Document& doc, ProbBackend backend) {
  require_nonempty(doc);
  if (backend == ProbBackend::Counting) {
    const Document after = apply_pipeline(prefix, doc, SemanticsMode::Dynamic);
    const std::size_t kept = alive_count(apply_expr(e2, after, SemanticsMode::Dynamic));
    return from_rational(make_rational(static_cast<std::int64_t>(kept),
                                       static_cast<std::int64_t>(doc.token_count())));
  }
  ConditionedState st = condition_on(prefix, doc);
  const Projector p = keep_projector(composite_keep_set(e2, st.state, SemanticsMode::Dynamic));
  return ProbResult{trace_product(p, st.rho), std::nullopt};
}

ProbResult prob_implication(const EraserExpr& e1, const EraserExpr& e2,
                            const Document& doc, ProbBackend backend) {
  require_nonempty(doc);
  if (backend == ProbBackend::Counting) {
    const Document d1 = apply_expr(e1, doc, SemanticsMode::Dynamic);
    const std::size_t denom = alive_count(d1);
    if (denom == 0) {
      throw UndefinedProbability("implication undefined: antecedent erases every token");
    }
    const std::size_t kept = alive_count(apply_expr(e2, d1, SemanticsMode::Dynamic));
    return from_rational(make_rational(static_cast<std::int64_t>(kept),
                                       static_cast<std::int64_t>(denom)));
  }
  const DensityOperator rho = uniform_density(doc.token_count());
  const Projector p1 = keep_projector(composite_keep_set(e1, doc, SemanticsMode::Dynamic));
  const double denom = trace_product(p1, rho);
  if (denom == 0.0) {
    throw UndefinedProbability("implication undefined: antecedent erases every token");
  }
  const DensityOperator conditioned = collapse(p1, rho);
  const Document d1 = apply_expr(e1, doc, SemanticsMode::Dynamic);
  const Projector p2 = keep_projector(composite_keep_set(e2, d1, SemanticsMode::Dynamic));
  return ProbResult{trace_product(p2, conditioned) / denom, std::nullopt};
}

ProbResult prob_collection(const EraserExpr& expr, const Corpus& corpus,
                           ProbBackend backend, CollectionWeighting weighting,
                           Execution exec) {
  if (corpus.docs.empty() || corpus.total_tokens == 0) {
    throw UndefinedProbability("probability undefined on an empty collection");
  }
  const std::size_t n_docs = corpus.docs.size();

  // Per-document keep-sets are independent; aggregation stays serial and
  // deterministic.
  std::vector<Bitmask> keeps(n_docs);
  for_each_index(n_docs, exec, [&](std::size_t i) {
    keeps[i] = composite_keep_set(expr, corpus.docs[i], SemanticsMode::Dynamic);
  });

  if (backend == ProbBackend::Counting) {
    if (weighting == CollectionWeighting::ByTokens) {
      std::int64_t kept = 0;
      for (const Bitmask& k : keeps) kept += static_cast<std::int64_t>(k.count());
      return from_rational(make_rational(kept, static_cast<std::int64_t>(corpus.total_tokens)));
    }
    Rational total{0, 1};
    for (std::size_t i = 0; i < n_docs; ++i) {
      const std::size_t n = corpus.docs[i].token_count();
      if (n == 0) {
        throw UndefinedProbability("uniform weighting undefined with an empty document: " +
                                   corpus.docs[i].id);
      }
      total = add(total, make_rational(static_cast<std::int64_t>(keeps[i].count()),
                                       static_cast<std::int64_t>(n_docs * n)));
    }
    return from_rational(total);
  }

  // Block-diagonal preparation over the concatenated token positions.
  DensityOperator rho{std::vector<double>(corpus.total_tokens, 0.0)};
  Bitmask diagonal(corpus.total_tokens);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < n_docs; ++i) {
    const std::size_t n = corpus.docs[i].token_count();
    if (n == 0) {
      if (weighting == CollectionWeighting::Uniform) {
        throw UndefinedProbability("uniform weighting undefined with an empty document: " +
                                   corpus.docs[i].id);
      }
      continue;
    }
    const double block_weight =
        weighting == CollectionWeighting::ByTokens
            ? static_cast<double>(n) / static_cast<double>(corpus.total_tokens)
            : 1.0 / static_cast<double>(n_docs);
    const double per_position = block_weight / static_cast<double>(n);
    for (std::size_t pos = 0; pos < n; ++pos) rho.weights[offset + pos] = per_position;
    for (std::size_t pos : keeps[i].positions()) diagonal.set(offset + pos);
    offset += n;
  }
  return ProbResult{trace_product(keep_projector(diagonal), rho), std::nullopt};
}

ProbResult evaluate_query(const ProbQuery& query, const Document& doc) {
  switch (query.kind) {
    case ProbQuery::Kind::Plain:
      return prob_doc(query.target, doc, query.backend);
    case ProbQuery::Kind::Conditional:
      if (!query.given) throw std::invalid_argument("conditional query requires a prefix");
      return prob_conditional(query.target, *query.given, doc, query.backend);
    case ProbQuery::Kind::Implication:
    default: {
      if (!query.given || query.given->steps.empty()) {
        throw std::invalid_argument("implication query requires a nonempty prefix");
      }
      if (query.given->steps.size() != 1) {
        throw std::invalid_argument("implication query takes a single antecedent");
      }
      return prob_implication(query.given->steps.front(), query.target, doc, query.backend);
    }
  }
}

}  // namespace eraskit
