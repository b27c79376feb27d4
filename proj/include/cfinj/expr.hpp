#ifndef CFINJ_EXPR_HPP_
#define CFINJ_EXPR_HPP_

#include <memory>
#include <string>

#include "element.hpp"

namespace cfinj {

//! Immutable expression tree over element literals, left-to-right
//! composition `*`, postfix inversion `'` and integer powers `^n`.
class Expr {
 public:
  enum class Kind { literal, compose, invert, power };

  static Expr literal(CofiniteInjection value);
  static Expr compose(Expr lhs, Expr rhs);
  static Expr invert(Expr operand);
  static Expr power(Expr operand, integer exponent);

  Kind kind() const;
  //! Literal payload; only valid on Kind::literal nodes.
  CofiniteInjection const& value() const;
  //! Children; lhs/rhs on compose nodes, operand on invert and power.
  Expr lhs() const;
  Expr rhs() const;
  Expr operand() const;
  //! Exponent; only valid on Kind::power nodes.
  integer exponent() const;

  //! Structural tree equality.
  bool operator==(Expr const& other) const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<Node const> node) : _node(std::move(node)) {}

  std::shared_ptr<Node const> _node;
};

//! Parses the grammar
//!   expr := term ('*' term)* ; term := atom ("'" | '^' int)* ;
//!   atom := 'id' | 'shift(k)' | 'idem{a,b,...}' | 'perm(a b)(c d)...'
//!         | 'cfinj{k=..; N=..; t=[..]}' | '(' expr ')'
//! ignoring whitespace between tokens.  Throws ParseError (with input
//! position) for malformed syntax and ValidationError for literals that
//! denote no valid element (non-injective tables, overlapping cycles).
Expr parse(std::string const& text);

//! Folds the tree into a normal form.  Only arithmetic overflow escapes.
CofiniteInjection eval(Expr const& e);

//! The canonical text form; parse(format(a)) evaluates back to a.
std::string format(CofiniteInjection const& a);

}  // namespace cfinj

#endif  // CFINJ_EXPR_HPP_
