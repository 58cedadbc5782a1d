#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eraskit/bitmask.hpp"

namespace eraskit {

enum class SplitRule {
  WhitespaceAndPunctuation,  // punctuation always ends a token
  Whitespace,                // tokens are runs of non-space characters
};

/// Deterministic normalization rules shared by documents and query terms.
struct TokenizerConfig {
  bool lowercase = true;
  bool strip_punctuation = true;
  SplitRule splitter = SplitRule::WhitespaceAndPunctuation;
};

/// A tokenized document. `tokens` is the pristine token sequence and never
/// changes after construction; erasure state lives in `mask` (true = alive).
/// All transformations copy the document and operate on the copy's mask.
struct Document {
  std::string id;
  std::vector<std::string> tokens;
  Bitmask mask;

  Document() = default;
  Document(std::string doc_id, std::vector<std::string> toks)
      : id(std::move(doc_id)), tokens(std::move(toks)), mask(tokens.size(), true) {}

  std::size_t token_count() const { return tokens.size(); }
  bool pristine() const { return mask.all(); }
};

struct Corpus {
  std::vector<Document> docs;  // sorted by id
  std::size_t total_tokens = 0;
};

enum class RenderStyle { Compact, Placeholder };

enum class CorpusFormat { TxtDir, Jsonl };

Document tokenize(const std::string& text, const TokenizerConfig& config,
                  std::string id = "doc");

std::size_t alive_count(const Document& doc);

/// Compact: alive tokens joined by single spaces.
/// Placeholder: one item per position, erased tokens rendered as "▯".
std::string render(const Document& doc, RenderStyle style);

/// Normalizes a single query term with the document tokenizer rules.
/// Returns empty string when the term does not normalize to exactly one token.
std::string normalize_term(const std::string& term, const TokenizerConfig& config);

/// Builds a corpus from already-tokenized documents: sorts by id, checks id
/// uniqueness, sums pristine token counts.
Corpus make_corpus(std::vector<Document> docs);

/// TxtDir: every *.txt file in `path` is one document (id = file stem).
/// Jsonl: one object per line with required string fields "id" and "text".
Corpus load_corpus(const std::string& path, CorpusFormat format,
                   const TokenizerConfig& config);

}  // namespace eraskit
