#pragma once

// Shared fixtures, random generators and independent brute-force oracles.
// The oracles deliberately use naive nested scans so they share no code with
// the eraser implementations they check.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "eraskit/eraser.hpp"
#include "eraskit/expr.hpp"
#include "eraskit/text.hpp"

namespace eraskit::test {

inline const TokenizerConfig& default_config() {
  static const TokenizerConfig config;
  return config;
}

inline Document hamlet() {
  return tokenize("to be or not to be, that is the question", default_config(), "hamlet");
}

inline std::vector<std::size_t> alive_positions(const Document& doc) {
  return doc.mask.positions();
}

// --- random generation -----------------------------------------------------

inline std::string vocab_word(std::size_t index) { return "w" + std::to_string(index); }

inline Document random_document(std::mt19937& rng, std::size_t max_tokens,
                                std::size_t vocab_size, const std::string& id = "rand") {
  std::uniform_int_distribution<std::size_t> len(0, max_tokens);
  std::uniform_int_distribution<std::size_t> pick(0, vocab_size - 1);
  std::vector<std::string> tokens;
  const std::size_t n = len(rng);
  tokens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) tokens.push_back(vocab_word(pick(rng)));
  return Document(id, std::move(tokens));
}

inline Document nonempty_random_document(std::mt19937& rng, std::size_t max_tokens,
                                         std::size_t vocab_size,
                                         const std::string& id = "rand") {
  Document doc = random_document(rng, max_tokens, vocab_size, id);
  while (doc.token_count() == 0) doc = random_document(rng, max_tokens, vocab_size, id);
  return doc;
}

inline AtomicEraser random_atomic(std::mt19937& rng, std::size_t vocab_size,
                                  std::size_t max_width) {
  std::uniform_int_distribution<std::size_t> pick(0, vocab_size - 1);
  std::uniform_int_distribution<std::size_t> width(0, max_width);
  return AtomicEraser{vocab_word(pick(rng)), width(rng)};
}

inline EraserExpr random_expr(std::mt19937& rng, std::size_t vocab_size,
                              std::size_t max_width, int depth = 3) {
  std::uniform_int_distribution<int> shape(0, depth <= 0 ? 0 : 3);
  switch (shape(rng)) {
    case 1:
      return EraserExpr::negation(random_expr(rng, vocab_size, max_width, depth - 1));
    case 2:
      return EraserExpr::disjunction(random_expr(rng, vocab_size, max_width, depth - 1),
                                     random_expr(rng, vocab_size, max_width, depth - 1));
    case 3:
      return EraserExpr::conjunction(random_expr(rng, vocab_size, max_width, depth - 1),
                                     random_expr(rng, vocab_size, max_width, depth - 1));
    default:
      return EraserExpr::atomic(random_atomic(rng, vocab_size, max_width));
  }
}

/// Erases a random subset of tokens (keeps the document otherwise intact).
inline Document randomly_erased(std::mt19937& rng, Document doc) {
  std::bernoulli_distribution erase(0.3);
  for (std::size_t pos = 0; pos < doc.token_count(); ++pos) {
    if (erase(rng)) doc.mask.set(pos, false);
  }
  return doc;
}

// --- brute-force oracles ---------------------------------------------------

/// Window-membership scan: keep position p iff some anchor q of the term
/// (alive under dynamic semantics) satisfies |p - q| <= halfwidth.
inline Bitmask oracle_keep_set(const AtomicEraser& eraser, const Document& doc,
                               SemanticsMode mode) {
  const std::size_t n = doc.token_count();
  Bitmask keep(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (doc.tokens[q] != eraser.term) continue;
      if (mode == SemanticsMode::Dynamic && !doc.mask.test(q)) continue;
      const std::size_t distance = p > q ? p - q : q - p;
      if (distance <= eraser.halfwidth) {
        keep.set(p);
        break;
      }
    }
  }
  return keep;
}

inline std::size_t oracle_term_frequency(const std::string& term, const Document& doc) {
  std::size_t count = 0;
  for (const std::string& token : doc.tokens) {
    if (token == term) ++count;
  }
  return count;
}

/// Number of `counted` tokens within `halfwidth` of some occurrence of `wide`.
inline std::size_t oracle_cooccurrence(const std::string& wide, const std::string& counted,
                                       std::size_t halfwidth, const Document& doc) {
  const std::size_t n = doc.token_count();
  std::size_t count = 0;
  for (std::size_t p = 0; p < n; ++p) {
    if (doc.tokens[p] != counted) continue;
    for (std::size_t q = 0; q < n; ++q) {
      if (doc.tokens[q] != wide) continue;
      const std::size_t distance = p > q ? p - q : q - p;
      if (distance <= halfwidth) {
        ++count;
        break;
      }
    }
  }
  return count;
}

// --- filesystem fixtures ---------------------------------------------------

struct TempDir {
  std::filesystem::path path;

  explicit TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() /
           ("eraskit_" + tag + "_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path write(const std::string& name, const std::string& content) const {
    const auto file = path / name;
    std::ofstream out(file);
    out << content;
    return file;
  }
};

}  // namespace eraskit::test
