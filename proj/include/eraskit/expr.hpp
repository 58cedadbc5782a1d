#pragma once

#include <cassert>
#include <memory>
#include <vector>

#include "eraskit/eraser.hpp"

namespace eraskit {

/// Immutable boolean combination of atomic erasers. Shared subtrees make
/// copies cheap; nodes are never mutated after construction.
class EraserExpr {
 public:
  enum class Kind { Atomic, Not, Or, And };

  static EraserExpr atomic(AtomicEraser eraser) {
    EraserExpr e(Kind::Atomic);
    e.atom_ = std::move(eraser);
    return e;
  }
  static EraserExpr negation(EraserExpr child) {
    EraserExpr e(Kind::Not);
    e.lhs_ = std::make_shared<const EraserExpr>(std::move(child));
    return e;
  }
  static EraserExpr disjunction(EraserExpr lhs, EraserExpr rhs) {
    return binary(Kind::Or, std::move(lhs), std::move(rhs));
  }
  static EraserExpr conjunction(EraserExpr lhs, EraserExpr rhs) {
    return binary(Kind::And, std::move(lhs), std::move(rhs));
  }

  Kind kind() const { return kind_; }

  const AtomicEraser& atom() const {
    assert(kind_ == Kind::Atomic);
    return atom_;
  }
  const EraserExpr& lhs() const {
    assert(kind_ != Kind::Atomic);
    return *lhs_;
  }
  const EraserExpr& rhs() const {
    assert(kind_ == Kind::Or || kind_ == Kind::And);
    return *rhs_;
  }

  /// Structural equality.
  bool operator==(const EraserExpr& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
      case Kind::Atomic:
        return atom_ == other.atom_;
      case Kind::Not:
        return *lhs_ == *other.lhs_;
      default:
        return *lhs_ == *other.lhs_ && *rhs_ == *other.rhs_;
    }
  }

 private:
  explicit EraserExpr(Kind kind) : kind_(kind) {}

  static EraserExpr binary(Kind kind, EraserExpr lhs, EraserExpr rhs) {
    EraserExpr e(kind);
    e.lhs_ = std::make_shared<const EraserExpr>(std::move(lhs));
    e.rhs_ = std::make_shared<const EraserExpr>(std::move(rhs));
    return e;
  }

  Kind kind_;
  AtomicEraser atom_;
  std::shared_ptr<const EraserExpr> lhs_;
  std::shared_ptr<const EraserExpr> rhs_;
};

/// Ordered sequence of expressions applied left to right. Sequencing is kept
/// apart from the boolean algebra: boolean nodes are order-free propositions,
/// while pipeline steps see the state left by earlier steps (dynamic mode).
struct Pipeline {
  std::vector<EraserExpr> steps;  // nonempty

  bool operator==(const Pipeline&) const = default;
};

/// Keep-set of a composite expression at the document's current state.
/// Children of one node are evaluated against the same state ("would be
/// erased" is counterfactual, not sequential). Complement is taken relative
/// to the currently alive tokens in dynamic mode and to all positions in
/// static mode, so dynamic erasure stays monotone.
KeepSet composite_keep_set(const EraserExpr& expr, const Document& doc,
                           SemanticsMode mode);

Document apply_expr(const EraserExpr& expr, const Document& doc, SemanticsMode mode);

Document apply_pipeline(const Pipeline& pipeline, const Document& doc,
                        SemanticsMode mode);

}  // namespace eraskit
