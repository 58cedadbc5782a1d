#include "eraskit/expr.hpp"

namespace eraskit {

KeepSet composite_keep_set(const EraserExpr& expr, const Document& doc,
                           SemanticsMode mode) {
  switch (expr.kind()) {
    case EraserExpr::Kind::Atomic:
      return keep_set(expr.atom(), doc, mode);
    case EraserExpr::Kind::Not: {
      KeepSet base = mode == SemanticsMode::Dynamic ? doc.mask
                                                    : Bitmask(doc.token_count(), true);
      base.and_not(composite_keep_set(expr.lhs(), doc, mode));
      return base;
    }
    case EraserExpr::Kind::Or:
      return composite_keep_set(expr.lhs(), doc, mode) |
             composite_keep_set(expr.rhs(), doc, mode);
    case EraserExpr::Kind::And:
    default:
      return composite_keep_set(expr.lhs(), doc, mode) &
             composite_keep_set(expr.rhs(), doc, mode);
  }
}

Document apply_expr(const EraserExpr& expr, const Document& doc, SemanticsMode mode) {
  Document out = doc;
  out.mask &= composite_keep_set(expr, doc, mode);
  return out;
}

Document apply_pipeline(const Pipeline& pipeline, const Document& doc,
                        SemanticsMode mode) {
  Document state = doc;
  for (const EraserExpr& step : pipeline.steps) {
    state = apply_expr(step, state, mode);
  }
  return state;
}

}  // namespace eraskit
