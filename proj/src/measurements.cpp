#include "eraskit/measurements.hpp"

#include <array>

namespace eraskit {

std::size_t term_frequency(const std::string& term, const Document& doc) {
  return alive_count(apply(AtomicEraser{term, 0}, doc, SemanticsMode::Dynamic));
}

std::map<std::string, std::size_t> bag_of_words(const Document& doc) {
  std::map<std::string, std::size_t> counts;
  for (const std::string& token : doc.tokens) {
    auto [it, inserted] = counts.emplace(token, 0);
    if (inserted) it->second = term_frequency(token, doc);
  }
  return counts;
}

std::size_t cooccurrence(const CoocQuery& query, const Document& doc) {
  const std::array<AtomicEraser, 2> steps{
      AtomicEraser{query.wide_term, query.halfwidth},
      AtomicEraser{query.counted_term, 0},
  };
  return alive_count(apply_pipeline(steps, doc, SemanticsMode::Dynamic));
}

bool orthogonality_check(const std::string& t1, const std::string& t2,
                         const Document& doc) {
  // Operator composition E(t1,0)E(t2,0): the t2 eraser acts first.
  const std::array<AtomicEraser, 2> steps{
      AtomicEraser{t2, 0},
      AtomicEraser{t1, 0},
  };
  return alive_count(apply_pipeline(steps, doc, SemanticsMode::Dynamic)) == 0;
}

}  // namespace eraskit
