#pragma once

// Curve-expression DSL over R*. Grammar (whitespace insensitive):
//   expr   := term (("+*" | "-*") term)*
//   term   := factor ((".*" | "/*") factor)*
//   factor := unary ("^*" real)?
//   unary  := "-*" unary | atom
//   atom   := "e^" real | positive-decimal | "s" | func "(" expr ")"
//           | "(" expr ")"
//   func   := "msin" | "mcos" | "mtan"
// Reals may be braced: e^{0.5}. Evaluation happens in the log chart, where
// the parameter symbol s carries logval u = log s and every multiplicative
// operator is the classical one on logvals.

#include <functional>
#include <memory>
#include <string>

#include "mulgeo/jet.hpp"
#include "mulgeo/mularith.hpp"

namespace mulgeo {

enum class BinOp { madd, msub, mmul, mdiv };
enum class FuncKind { msin, mcos, mtan };

struct ExprNode {
  enum class Kind { constant, param, neg, binary, power, func };
  Kind kind;
  double cval = 0.0;     // constant: logval of the literal
  BinOp op{};            // binary
  double exponent = 0.0; // power
  FuncKind fn{};         // func
  std::shared_ptr<const ExprNode> a, b;
  std::size_t begin = 0, end = 0;  // byte span in the source text
};

class CurveExpr {
 public:
  CurveExpr() = default;

  static CurveExpr parse(const std::string& text);

  // Canonical text; parse(print()) reproduces the AST exactly.
  std::string print() const;

  MulScalar eval(MulScalar s) const;
  // Logval of the component at parameter value s (a positive real).
  double eval_logval_at(double s_value) const;
  // Order-6 jet of the log-image g(u) = log f(e^u) at u.
  Jet eval_jet(double u) const;

  bool equals(const CurveExpr& other) const;
  bool valid() const { return root_ != nullptr; }

 private:
  std::shared_ptr<const ExprNode> root_;
  std::string source_;
};

// k-th multiplicative derivative, k in 1..4. Exact (jet) route; the logval of
// the result is d^k/du^k log f(e^u) at u = log s.
MulScalar mderiv(const CurveExpr& e, MulScalar s, int order);

// Central finite differences on g(u) = log fn(e^u); fn maps positive reals
// to positive reals. Step scales as eps^{1/(order+2)}.
MulScalar mderiv_numeric(const std::function<double(double)>& fn, MulScalar s,
                         int order);

// Definite multiplicative integral over [a, b]; logval is the classical
// integral of log f(e^u) du between log a and log b.
MulScalar mintegral(const CurveExpr& e, MulScalar a, MulScalar b);

}  // namespace mulgeo
