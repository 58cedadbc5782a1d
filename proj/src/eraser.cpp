#include "eraskit/eraser.hpp"

#include <algorithm>

namespace eraskit {

KeepSet keep_set(const AtomicEraser& eraser, const Document& doc, SemanticsMode mode) {
  const std::size_t n = doc.token_count();
  KeepSet keep(n);
  // Anchor windows arrive in ascending order; merge adjacent overlaps so each
  // bit range is written once.
  std::size_t run_begin = 0;
  std::size_t run_end = 0;  // half-open; empty when run_begin == run_end
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (doc.tokens[pos] != eraser.term) continue;
    if (mode == SemanticsMode::Dynamic && !doc.mask.test(pos)) continue;
    const std::size_t begin = pos > eraser.halfwidth ? pos - eraser.halfwidth : 0;
    const std::size_t end = std::min(n, pos + eraser.halfwidth + 1);
    if (begin > run_end) {
      keep.set_range(run_begin, run_end);
      run_begin = begin;
    }
    run_end = end;
  }
  keep.set_range(run_begin, run_end);
  return keep;
}

Document apply(const AtomicEraser& eraser, const Document& doc, SemanticsMode mode) {
  Document out = doc;
  out.mask &= keep_set(eraser, doc, mode);
  return out;
}

Document apply_pipeline(std::span<const AtomicEraser> steps, const Document& doc,
                        SemanticsMode mode) {
  Document state = doc;
  for (const AtomicEraser& step : steps) {
    state = apply(step, state, mode);
  }
  return state;
}

}  // namespace eraskit
