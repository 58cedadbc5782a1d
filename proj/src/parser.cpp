#include "eraskit/parser.hpp"

#include <cctype>
#include <limits>

#include "eraskit/errors.hpp"

namespace eraskit {

namespace {

bool is_term_delimiter(char c) {
  switch (c) {
    case ',':
    case '(':
    case ')':
    case '!':
    case '&':
    case '|':
      return true;
    default:
      return std::isspace(static_cast<unsigned char>(c)) != 0;
  }
}

class Parser {
 public:
  Parser(const std::string& text, const TokenizerConfig& config)
      : text_(text), config_(config) {}

  Pipeline parse() {
    Pipeline pipeline;
    pipeline.steps.push_back(parse_or());
    skip_ws();
    while (!at_end() && peek() == '-') {
      expect('-', "->");
      expect('>', "->");
      pipeline.steps.push_back(parse_or());
      skip_ws();
    }
    if (!at_end()) {
      fail("end of input, '->', '&' or '|'", "unexpected trailing input");
    }
    return pipeline;
  }

 private:
  EraserExpr parse_or() {
    EraserExpr expr = parse_and();
    skip_ws();
    while (!at_end() && peek() == '|') {
      ++pos_;
      expr = EraserExpr::disjunction(std::move(expr), parse_and());
      skip_ws();
    }
    return expr;
  }

  EraserExpr parse_and() {
    EraserExpr expr = parse_factor();
    skip_ws();
    while (!at_end() && peek() == '&') {
      ++pos_;
      expr = EraserExpr::conjunction(std::move(expr), parse_factor());
      skip_ws();
    }
    return expr;
  }

  EraserExpr parse_factor() {
    skip_ws();
    if (at_end()) fail("'!', '(' or 'E('", "unexpected end of input");
    const char c = peek();
    if (c == '!') {
      ++pos_;
      return EraserExpr::negation(parse_factor());
    }
    if (c == '(') {
      ++pos_;
      EraserExpr inner = parse_or();
      skip_ws();
      if (at_end() || peek() != ')') fail("')'", "unbalanced parentheses");
      ++pos_;
      return inner;
    }
    return parse_atom();
  }

  EraserExpr parse_atom() {
    skip_ws();
    if (at_end() || peek() != 'E') fail("'E(term,width)'", "expected an eraser atom");
    ++pos_;
    skip_ws();
    if (at_end() || peek() != '(') fail("'('", "expected '(' after 'E'");
    ++pos_;

    skip_ws();
    const std::size_t term_offset = pos_;
    std::string raw_term;
    while (!at_end() && !is_term_delimiter(peek())) raw_term.push_back(text_[pos_++]);
    if (raw_term.empty()) fail_at(term_offset, "term", "expected a term");
    const std::string term = normalize_term(raw_term, config_);
    if (term.empty()) {
      fail_at(term_offset, "term",
              "term '" + raw_term + "' does not normalize to a single token");
    }

    skip_ws();
    if (at_end() || peek() != ',') fail("','", "expected ',' after term");
    ++pos_;

    skip_ws();
    const std::size_t width_offset = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      fail_at(width_offset, "nonnegative integer", "width must be a nonnegative integer");
    }
    if (at_end() || std::isdigit(static_cast<unsigned char>(peek())) == 0) {
      fail_at(width_offset, "nonnegative integer", "width must be a nonnegative integer");
    }
    std::size_t width = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
      const std::size_t digit = static_cast<std::size_t>(peek() - '0');
      if (width > (std::numeric_limits<std::size_t>::max() - digit) / 10) {
        fail_at(width_offset, "nonnegative integer", "width out of range");
      }
      width = width * 10 + digit;
      ++pos_;
    }

    skip_ws();
    if (at_end() || peek() != ')') fail("')'", "expected ')' after width");
    ++pos_;
    return EraserExpr::atomic(AtomicEraser{term, width});
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) ++pos_;
  }

  void expect(char c, const std::string& expected) {
    if (at_end() || peek() != c) fail("'" + expected + "'", "expected '" + expected + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected, const std::string& detail) const {
    fail_at(pos_, expected, detail);
  }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& expected,
                            const std::string& detail) const {
    throw ParseError(offset, expected, detail + " (expected " + expected + ")");
  }

  const std::string& text_;
  const TokenizerConfig& config_;
  std::size_t pos_ = 0;
};

// Larger binds tighter; mirrors the grammar levels.
int precedence(EraserExpr::Kind kind) {
  switch (kind) {
    case EraserExpr::Kind::Or:
      return 1;
    case EraserExpr::Kind::And:
      return 2;
    case EraserExpr::Kind::Not:
      return 3;
    default:
      return 4;
  }
}

void format_into(const EraserExpr& expr, std::string& out) {
  switch (expr.kind()) {
    case EraserExpr::Kind::Atomic: {
      const AtomicEraser& atom = expr.atom();
      out += "E(" + atom.term + "," + std::to_string(atom.halfwidth) + ")";
      return;
    }
    case EraserExpr::Kind::Not: {
      out += '!';
      const bool parens = precedence(expr.lhs().kind()) < precedence(EraserExpr::Kind::Not);
      if (parens) out += '(';
      format_into(expr.lhs(), out);
      if (parens) out += ')';
      return;
    }
    case EraserExpr::Kind::Or:
    case EraserExpr::Kind::And: {
      const int prec = precedence(expr.kind());
      // The grammar is left-associative: the left child may share this
      // node's precedence, the right child needs parentheses to round-trip
      // structurally.
      const bool left_parens = precedence(expr.lhs().kind()) < prec;
      const bool right_parens = precedence(expr.rhs().kind()) <= prec;
      if (left_parens) out += '(';
      format_into(expr.lhs(), out);
      if (left_parens) out += ')';
      out += expr.kind() == EraserExpr::Kind::Or ? " | " : " & ";
      if (right_parens) out += '(';
      format_into(expr.rhs(), out);
      if (right_parens) out += ')';
      return;
    }
  }
}

}  // namespace

Pipeline parse_pipeline(const std::string& text, const TokenizerConfig& config) {
  return Parser(text, config).parse();
}

EraserExpr parse_expr(const std::string& text, const TokenizerConfig& config) {
  Pipeline pipeline = parse_pipeline(text, config);
  if (pipeline.steps.size() != 1) {
    throw ParseError(text.find("->"), "a single expression",
                     "pipelines are not allowed here (expected a single expression)");
  }
  return std::move(pipeline.steps.front());
}

std::string format_expr(const EraserExpr& expr) {
  std::string out;
  format_into(expr, out);
  return out;
}

std::string format_pipeline(const Pipeline& pipeline) {
  std::string out;
  for (std::size_t i = 0; i < pipeline.steps.size(); ++i) {
    if (i > 0) out += " -> ";
    out += format_expr(pipeline.steps[i]);
  }
  return out;
}

}  // namespace eraskit
