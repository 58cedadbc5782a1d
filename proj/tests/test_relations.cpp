#include <random>

#include <doctest.h>

#include "eraskit/parser.hpp"
#include "eraskit/relations.hpp"
#include "support.hpp"

using namespace eraskit;
using test::hamlet;

namespace {

const auto kDynamic = SemanticsMode::Dynamic;
const auto kStatic = SemanticsMode::Static;

EraserExpr parse1(const std::string& text) {
  return parse_expr(text, test::default_config());
}

Corpus corpus_of(std::vector<Document> docs) { return make_corpus(std::move(docs)); }

}  // namespace

TEST_CASE("nested windows around the same term are ordered") {
  const DocVerdict v = order_relation(parse1("E(is,3)"), parse1("E(is,2)"), hamlet(), kDynamic);
  CHECK(v.geq);
  CHECK_FALSE(v.leq);
  CHECK_FALSE(v.vacuous);
}

// Reflexive geq for an expression is exactly its idempotency, so in dynamic
// mode it is only guaranteed for atomic erasers (composites are measured, not
// asserted); static mode is reflexive for every expression.
TEST_CASE("order relation is reflexive where idempotency holds") {
  std::mt19937 rng(20);
  for (int trial = 0; trial < 100; ++trial) {
    const Document doc = test::random_document(rng, 30, 4);

    const EraserExpr atomic = EraserExpr::atomic(test::random_atomic(rng, 4, 4));
    const DocVerdict dynamic_verdict = order_relation(atomic, atomic, doc, kDynamic);
    CHECK(dynamic_verdict.geq);
    CHECK(dynamic_verdict.leq);
    CHECK(dynamic_verdict.commutes);

    const EraserExpr composite = test::random_expr(rng, 4, 4);
    const DocVerdict static_verdict = order_relation(composite, composite, doc, kStatic);
    CHECK(static_verdict.geq);
    CHECK(static_verdict.leq);
    CHECK(static_verdict.commutes);

    // Identical sequences commute trivially even when not idempotent.
    CHECK(order_relation(composite, composite, doc, kDynamic).commutes);
  }
}

TEST_CASE("non-commuting pair on hamlet: one-sided order, commutes=false") {
  // E(is,2) first leaves "the question" intact for E(question,1), so geq
  // holds on this document; the reverse order annihilates, so leq fails.
  const DocVerdict v =
      order_relation(parse1("E(is,2)"), parse1("E(question,1)"), hamlet(), kDynamic);
  CHECK(v.geq);
  CHECK_FALSE(v.leq);
  CHECK_FALSE(v.commutes);
  CHECK_FALSE(v.vacuous);

  const RelationReport report = corpus_relation(parse1("E(is,2)"), parse1("E(question,1)"),
                                                corpus_of({hamlet()}), kDynamic);
  CHECK(report.corpus_geq);
  CHECK_FALSE(report.corpus_leq);
  CHECK_FALSE(report.corpus_incompatible);
  REQUIRE(report.verdicts.size() == 1);
  CHECK_FALSE(report.verdicts[0].commutes);
}

TEST_CASE("incompatible pair: no order in either direction") {
  const Document doc("d1", {"w0", "w1"});
  const RelationReport report =
      corpus_relation(parse1("E(w0,0)"), parse1("E(w1,0)"), corpus_of({doc}), kDynamic);
  CHECK_FALSE(report.corpus_geq);
  CHECK_FALSE(report.corpus_leq);
  CHECK(report.corpus_incompatible);
}

TEST_CASE("dynamic mode meet lower bound fails on hamlet") {
  // Applying E(to,1) first erases "is", so the meet erases everything, while
  // the meet alone keeps "be"@5.
  const EraserExpr e1 = parse1("E(to,1)");
  const EraserExpr meet = parse1("E(to,1) & E(is,2)");

  const Document meet_alone = apply_expr(meet, hamlet(), kDynamic);
  CHECK(meet_alone.mask.positions() == std::vector<std::size_t>{5});
  const Document chained = apply_expr(meet, apply_expr(e1, hamlet(), kDynamic), kDynamic);
  CHECK(chained.mask.none());

  const DocVerdict v = order_relation(e1, meet, hamlet(), kDynamic);
  CHECK_FALSE(v.geq);

  // The same law always holds in static mode.
  CHECK(order_relation(e1, meet, hamlet(), kStatic).geq);
}

TEST_CASE("order relation evaluates from the pristine document") {
  Document erased = hamlet();
  erased.mask.set(7, false);
  const DocVerdict from_erased =
      order_relation(parse1("E(is,3)"), parse1("E(is,2)"), erased, kDynamic);
  const DocVerdict from_fresh =
      order_relation(parse1("E(is,3)"), parse1("E(is,2)"), hamlet(), kDynamic);
  CHECK(from_erased.geq == from_fresh.geq);
  CHECK(from_erased.leq == from_fresh.leq);
}

TEST_CASE("corpus relation: same-center monotonicity over random corpora") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Document> docs;
    const std::size_t n_docs = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    for (std::size_t d = 0; d < n_docs; ++d) {
      docs.push_back(test::random_document(rng, 30, 4, "doc" + std::to_string(d)));
    }
    const Corpus corpus = corpus_of(std::move(docs));
    const AtomicEraser narrow = test::random_atomic(rng, 4, 3);
    const AtomicEraser wide{narrow.term, narrow.halfwidth + 2};
    for (auto mode : {kDynamic, kStatic}) {
      const RelationReport report = corpus_relation(
          EraserExpr::atomic(wide), EraserExpr::atomic(narrow), corpus, mode);
      CHECK(report.corpus_geq);
    }
  }
}

TEST_CASE("empty corpus: universal quantification is vacuously true") {
  const RelationReport report =
      corpus_relation(parse1("E(a,1)"), parse1("E(b,0)"), Corpus{}, kDynamic);
  CHECK(report.corpus_geq);
  CHECK(report.corpus_leq);
  CHECK_FALSE(report.corpus_incompatible);
  CHECK(report.verdicts.empty());
}

TEST_CASE("static mode geq is keep-set containment on the pristine document") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const Document doc = test::random_document(rng, 30, 4);
    const EraserExpr e1 = test::random_expr(rng, 4, 3);
    const EraserExpr e2 = test::random_expr(rng, 4, 3);
    const DocVerdict v = order_relation(e1, e2, doc, kStatic);
    const bool contained = composite_keep_set(e2, doc, kStatic)
                               .is_subset_of(composite_keep_set(e1, doc, kStatic));
    CHECK(v.geq == contained);
  }
}

TEST_CASE("static lattice laws on random expression pairs") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Document doc = test::random_document(rng, 30, 4);
    const EraserExpr e1 = test::random_expr(rng, 4, 3);
    const EraserExpr e2 = test::random_expr(rng, 4, 3);
    const EraserExpr join = EraserExpr::disjunction(e1, e2);
    const EraserExpr meet = EraserExpr::conjunction(e1, e2);

    CHECK(order_relation(join, e1, doc, kStatic).geq);
    CHECK(order_relation(e1, meet, doc, kStatic).geq);

    const bool neg_order = order_relation(EraserExpr::negation(e1),
                                          EraserExpr::negation(e2), doc, kStatic).geq;
    const bool e1_leq_e2 = order_relation(e1, e2, doc, kStatic).leq;
    CHECK(neg_order == e1_leq_e2);
  }
}

TEST_CASE("dynamic join stays above its atomic components") {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const Document doc = test::random_document(rng, 30, 4);
    const AtomicEraser a = test::random_atomic(rng, 4, 3);
    const AtomicEraser b = test::random_atomic(rng, 4, 3);
    const EraserExpr join =
        EraserExpr::disjunction(EraserExpr::atomic(a), EraserExpr::atomic(b));
    CHECK(order_relation(join, EraserExpr::atomic(a), doc, kDynamic).geq);
  }
}

TEST_CASE("corpus geq is transitive in static mode") {
  std::mt19937 rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Document> docs;
    for (std::size_t d = 0; d < 4; ++d) {
      docs.push_back(test::random_document(rng, 25, 4, "doc" + std::to_string(d)));
    }
    const Corpus corpus = corpus_of(std::move(docs));
    // a >= b and b >= c by construction (joins only widen).
    const EraserExpr c = test::random_expr(rng, 4, 3);
    const EraserExpr b = EraserExpr::disjunction(c, test::random_expr(rng, 4, 3));
    const EraserExpr a = EraserExpr::disjunction(b, test::random_expr(rng, 4, 3));
    REQUIRE(corpus_relation(a, b, corpus, kStatic).corpus_geq);
    REQUIRE(corpus_relation(b, c, corpus, kStatic).corpus_geq);
    CHECK(corpus_relation(a, c, corpus, kStatic).corpus_geq);
  }
}

TEST_CASE("clustering splits the bush corpus") {
  const TokenizerConfig config;
  const Corpus corpus = corpus_of({
      tokenize("george bush spoke", config, "doc-george"),
      tokenize("kate bush sang today", config, "doc-kate"),
  });
  const ClusterPartition partition =
      cluster_by_relation(parse1("E(george,1)"), parse1("E(bush,0)"), corpus, kDynamic);
  CHECK(partition.holds == std::vector<std::string>{"doc-george"});
  CHECK(partition.fails == std::vector<std::string>{"doc-kate"});
  CHECK(partition.holds_vacuously.empty());
}

TEST_CASE("documents lacking both terms hold vacuously") {
  const TokenizerConfig config;
  const Corpus corpus = corpus_of({tokenize("entirely unrelated words", config, "other")});
  const ClusterPartition partition =
      cluster_by_relation(parse1("E(george,1)"), parse1("E(bush,0)"), corpus, kDynamic);
  CHECK(partition.holds_vacuously == std::vector<std::string>{"other"});
  CHECK(partition.holds.empty());
  CHECK(partition.fails.empty());
}

TEST_CASE("clustering an empty corpus yields three empty sets") {
  const ClusterPartition partition =
      cluster_by_relation(parse1("E(a,1)"), parse1("E(b,0)"), Corpus{}, kDynamic);
  CHECK(partition.holds.empty());
  CHECK(partition.holds_vacuously.empty());
  CHECK(partition.fails.empty());
}

TEST_CASE("implied order from window propositions") {
  CHECK(implied_order({"is", 3}, {"is", 2}) == ImpliedOrder::GreaterEqual);
  CHECK(implied_order({"is", 2}, {"is", 3}) == ImpliedOrder::LessEqual);
  CHECK(implied_order({"is", 2}, {"is", 2}) == ImpliedOrder::Equal);
  CHECK(implied_order({"george", 1}, {"bush", 0}) == std::nullopt);
}

TEST_CASE("implied orders agree with corpus relations everywhere") {
  std::mt19937 rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Document> docs;
    for (std::size_t d = 0; d < 3; ++d) {
      docs.push_back(test::random_document(rng, 25, 4, "doc" + std::to_string(d)));
    }
    const Corpus corpus = corpus_of(std::move(docs));
    const AtomicEraser e1 = test::random_atomic(rng, 4, 4);
    const AtomicEraser e2{e1.term, std::uniform_int_distribution<std::size_t>(0, 4)(rng)};
    const auto implied = implied_order(e1, e2);
    REQUIRE(implied.has_value());
    for (auto mode : {kDynamic, kStatic}) {
      const RelationReport report = corpus_relation(
          EraserExpr::atomic(e1), EraserExpr::atomic(e2), corpus, mode);
      if (*implied == ImpliedOrder::GreaterEqual || *implied == ImpliedOrder::Equal) {
        CHECK(report.corpus_geq);
      }
      if (*implied == ImpliedOrder::LessEqual || *implied == ImpliedOrder::Equal) {
        CHECK(report.corpus_leq);
      }
    }
  }
}
