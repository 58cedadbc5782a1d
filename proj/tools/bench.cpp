// Times the corpus kernels in serial and OpenMP execution on a synthetic
// corpus and prints the speedup, so regressions in the parallel paths are
// easy to spot.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eraskit/parser.hpp"
#include "eraskit/probability.hpp"
#include "eraskit/relations.hpp"

namespace {

using eraskit::Corpus;
using eraskit::Document;
using eraskit::Execution;

Corpus synthetic_corpus(std::size_t n_docs, std::size_t tokens_per_doc,
                        std::size_t vocab_size, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, vocab_size - 1);
  std::vector<Document> docs;
  docs.reserve(n_docs);
  for (std::size_t d = 0; d < n_docs; ++d) {
    std::vector<std::string> tokens;
    tokens.reserve(tokens_per_doc);
    for (std::size_t i = 0; i < tokens_per_doc; ++i) {
      tokens.push_back("w" + std::to_string(pick(rng)));
    }
    char id[32];
    std::snprintf(id, sizeof id, "doc-%06zu", d);
    docs.emplace_back(id, std::move(tokens));
  }
  return eraskit::make_corpus(std::move(docs));
}

template <typename F>
double time_seconds(std::size_t repeat, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < repeat; ++i) f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count() / static_cast<double>(repeat);
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-18s serial %9.4f s   parallel %9.4f s   speedup %5.2fx\n", name, serial,
              parallel, parallel > 0.0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP benchmark for the corpus kernels"};
  std::size_t n_docs = 2000;
  std::size_t tokens_per_doc = 400;
  std::size_t vocab_size = 50;
  std::size_t repeat = 3;
  unsigned seed = 42;
  app.add_option("--docs", n_docs, "Number of documents");
  app.add_option("--tokens", tokens_per_doc, "Tokens per document");
  app.add_option("--vocab", vocab_size, "Vocabulary size");
  app.add_option("--repeat", repeat, "Timed repetitions per kernel");
  app.add_option("--seed", seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);

  const Corpus corpus = synthetic_corpus(n_docs, tokens_per_doc, vocab_size, seed);
  std::printf("corpus: %zu docs, %zu tokens total\n", corpus.docs.size(), corpus.total_tokens);

  const eraskit::TokenizerConfig tokenizer;
  const auto e1 = eraskit::parse_expr("E(w1,3)", tokenizer);
  const auto e2 = eraskit::parse_expr("E(w2,1) | E(w3,0)", tokenizer);
  const auto mode = eraskit::SemanticsMode::Dynamic;

  report("relate",
         time_seconds(repeat, [&] { eraskit::corpus_relation(e1, e2, corpus, mode, Execution::Serial); }),
         time_seconds(repeat, [&] { eraskit::corpus_relation(e1, e2, corpus, mode, Execution::Parallel); }));

  report("cluster",
         time_seconds(repeat, [&] { eraskit::cluster_by_relation(e1, e2, corpus, mode, Execution::Serial); }),
         time_seconds(repeat, [&] { eraskit::cluster_by_relation(e1, e2, corpus, mode, Execution::Parallel); }));

  using eraskit::ProbBackend;
  report("prob counting",
         time_seconds(repeat, [&] {
           eraskit::prob_collection(e2, corpus, ProbBackend::Counting,
                                    eraskit::CollectionWeighting::ByTokens, Execution::Serial);
         }),
         time_seconds(repeat, [&] {
           eraskit::prob_collection(e2, corpus, ProbBackend::Counting,
                                    eraskit::CollectionWeighting::ByTokens, Execution::Parallel);
         }));

  report("prob trace",
         time_seconds(repeat, [&] {
           eraskit::prob_collection(e2, corpus, ProbBackend::Trace,
                                    eraskit::CollectionWeighting::ByTokens, Execution::Serial);
         }),
         time_seconds(repeat, [&] {
           eraskit::prob_collection(e2, corpus, ProbBackend::Trace,
                                    eraskit::CollectionWeighting::ByTokens, Execution::Parallel);
         }));

  return 0;
}
