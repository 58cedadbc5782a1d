#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "eraskit/eraser.hpp"

namespace eraskit {

/// Windowed co-occurrence query: count occurrences of `counted_term` that
/// survive a halfwidth-`halfwidth` window eraser centred on `wide_term`.
struct CoocQuery {
  std::string wide_term;
  std::string counted_term;
  std::size_t halfwidth = 0;
};

// Lexical measurements routed through erasers and the counting operation.
// Callers pass pristine documents; the independent brute-force scans these
// are checked against live in the test suite.

/// Number of occurrences of `term`: the tokens surviving E(term,0).
std::size_t term_frequency(const std::string& term, const Document& doc);

/// Term -> frequency for every distinct token, recovered one zero-width
/// eraser at a time. Values sum to the token count.
std::map<std::string, std::size_t> bag_of_words(const Document& doc);

/// Applies the wide window eraser around `wide_term`, then the zero-width
/// eraser for `counted_term`, and counts. Overlapping windows keep a token
/// once; when the two terms coincide the central occurrences count themselves.
std::size_t cooccurrence(const CoocQuery& query, const Document& doc);

/// True when composing the zero-width erasers of t1 and t2 leaves nothing
/// alive. Always true for distinct terms; false for t1 == t2 exactly when
/// the term occurs in the document.
bool orthogonality_check(const std::string& t1, const std::string& t2,
                         const Document& doc);

}  // namespace eraskit
