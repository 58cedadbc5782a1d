#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "eraskit/bitmask.hpp"
#include "eraskit/text.hpp"

namespace eraskit {

/// Keeps a window of `halfwidth` tokens on each side of every occurrence of
/// `term` (window size 2*halfwidth + 1) and erases everything else.
struct AtomicEraser {
  std::string term;  // normalized
  std::size_t halfwidth = 0;

  bool operator==(const AtomicEraser&) const = default;
};

/// Dynamic: window anchors are the *alive* occurrences of the term in the
/// current document state, so chained erasers can disturb each other and
/// application order matters.
///
/// Static: anchors and keep-sets are always computed against the pristine
/// (all-alive) token sequence; keep-sets are then fixed sets and any two
/// erasers commute.
enum class SemanticsMode { Dynamic, Static };

using KeepSet = Bitmask;

/// Positions preserved by `eraser` at the document's current state: the
/// union of clamped windows [p - w, p + w] over anchors p. A term with no
/// anchors yields the empty keep-set (the eraser erases everything).
KeepSet keep_set(const AtomicEraser& eraser, const Document& doc, SemanticsMode mode);

/// Returns a copy whose mask is the conjunction of the input mask and the
/// eraser's keep-set. Erasure is monotone: tokens are never resurrected.
Document apply(const AtomicEraser& eraser, const Document& doc, SemanticsMode mode);

/// Left-to-right fold of apply(); in dynamic mode each step sees the state
/// produced by the previous one.
Document apply_pipeline(std::span<const AtomicEraser> steps, const Document& doc,
                        SemanticsMode mode);

}  // namespace eraskit
