#pragma once

#include <string>

#include "eraskit/expr.hpp"
#include "eraskit/text.hpp"

namespace eraskit {

/// Concrete syntax for eraser expressions:
///
///   pipeline := expr ("->" expr)*
///   expr     := term ("|" term)*
///   term     := factor ("&" factor)*
///   factor   := "!" factor | "(" expr ")" | atom
///   atom     := "E(" TERM "," NAT ")"
///
/// Precedence: ! > & > |, with "->" only at the top level. Whitespace between
/// tokens is insignificant. TERM runs up to the next delimiter character
/// (whitespace or one of ",()!&|") and is normalized with the same
/// TokenizerConfig as documents; it must normalize to exactly one token, so
/// terms containing syntax delimiters are not expressible.
///
/// Throws ParseError (with byte offset and expected-token description) on
/// malformed input, including negative widths and unbalanced parentheses.
Pipeline parse_pipeline(const std::string& text, const TokenizerConfig& config);

/// Same grammar restricted to a single expression: "->" is rejected.
EraserExpr parse_expr(const std::string& text, const TokenizerConfig& config);

/// Canonical text with minimal parentheses. parse_expr(format_expr(x)) is
/// structurally equal to x.
std::string format_expr(const EraserExpr& expr);

std::string format_pipeline(const Pipeline& pipeline);

}  // namespace eraskit
