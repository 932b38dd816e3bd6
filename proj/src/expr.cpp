#include "mulgeo/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

#include "mulgeo/quadrature.hpp"

namespace mulgeo {

namespace {

using NodeP = std::shared_ptr<const ExprNode>;

// %.17g: exact double round-trip, required by parse(print(ast)) = ast.
std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Token {
  enum class T {
    plus_m, minus_m, times_m, div_m, pow_m,
    lparen, rparen, epow, decimal, param, func, end
  };
  T t;
  double num = 0.0;  // epow: logval payload; decimal: literal value
  FuncKind fn = FuncKind::msin;
  std::size_t begin = 0, end = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  std::size_t pos() const { return pos_; }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void error(std::size_t at, const std::string& expected) {
    fail(ErrCode::parse,
         "syntax error at offset " + std::to_string(at) + ": " + expected, at);
  }

  // signed decimal with optional exponent; optionally wrapped in braces
  double lex_real(bool allow_sign) {
    bool braced = false;
    if (pos_ < text_.size() && text_[pos_] == '{') {
      braced = true;
      ++pos_;
      skip_ws();
    }
    std::size_t start = pos_;
    if (allow_sign && pos_ < text_.size() &&
        (text_[pos_] == '+' || text_[pos_] == '-'))
      ++pos_;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      ++digits;
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++digits;
      }
    }
    if (digits == 0) error(start, "expected a decimal number");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // the 'e' belongs to the next token
      }
    }
    double v = std::strtod(text_.c_str() + start, nullptr);
    if (braced) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '}') error(pos_, "expected '}'");
      ++pos_;
    }
    return v;
  }

  void advance() {
    skip_ws();
    tok_.begin = pos_;
    if (pos_ >= text_.size()) {
      tok_.t = Token::T::end;
      tok_.end = pos_;
      return;
    }
    char c = text_[pos_];
    char c2 = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
    auto two = [&](Token::T t) {
      tok_.t = t;
      pos_ += 2;
      tok_.end = pos_;
    };
    if (c == '+' && c2 == '*') return two(Token::T::plus_m);
    if (c == '-' && c2 == '*') return two(Token::T::minus_m);
    if (c == '.' && c2 == '*') return two(Token::T::times_m);
    if (c == '/' && c2 == '*') return two(Token::T::div_m);
    if (c == '^' && c2 == '*') {
      // the exponent literal is part of the token, like the e^ form; the
      // one-token lookahead must never lex past it as an ordinary token
      tok_.t = Token::T::pow_m;
      pos_ += 2;
      skip_ws();
      tok_.num = lex_real(true);
      tok_.end = pos_;
      return;
    }
    if (c == '(') {
      tok_.t = Token::T::lparen;
      tok_.end = ++pos_;
      return;
    }
    if (c == ')') {
      tok_.t = Token::T::rparen;
      tok_.end = ++pos_;
      return;
    }
    if (c == 'e' && c2 == '^') {
      pos_ += 2;
      tok_.t = Token::T::epow;
      tok_.num = lex_real(true);
      tok_.end = pos_;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      tok_.t = Token::T::decimal;
      tok_.num = lex_real(false);
      tok_.end = pos_;
      if (!(tok_.num > 0.0))
        error(tok_.begin, "decimal literal must be a positive real");
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string word = text_.substr(start, pos_ - start);
      tok_.end = pos_;
      if (word == "s") {
        tok_.t = Token::T::param;
        return;
      }
      if (word == "msin" || word == "mcos" || word == "mtan") {
        tok_.t = Token::T::func;
        tok_.fn = word == "msin"   ? FuncKind::msin
                  : word == "mcos" ? FuncKind::mcos
                                   : FuncKind::mtan;
        return;
      }
      error(start, "unknown name '" + word +
                       "': expected 's', 'msin', 'mcos', 'mtan' or 'e^'");
    }
    error(pos_, std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token tok_;
};

NodeP make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  NodeP parse() {
    NodeP e = parse_expr();
    if (lex_.peek().t != Token::T::end)
      err(lex_.peek().begin, "expected '+*', '-*', '.*', '/*' or end of input");
    return e;
  }

 private:
  [[noreturn]] void err(std::size_t at, const std::string& expected) {
    fail(ErrCode::parse,
         "syntax error at offset " + std::to_string(at) + ": " + expected, at);
  }

  NodeP parse_expr() {
    NodeP left = parse_term();
    while (lex_.peek().t == Token::T::plus_m ||
           lex_.peek().t == Token::T::minus_m) {
      bool add = lex_.take().t == Token::T::plus_m;
      NodeP right = parse_term();
      ExprNode n;
      n.kind = ExprNode::Kind::binary;
      n.op = add ? BinOp::madd : BinOp::msub;
      n.begin = left->begin;
      n.end = right->end;
      n.a = left;
      n.b = right;
      left = make(std::move(n));
    }
    return left;
  }

  NodeP parse_term() {
    NodeP left = parse_factor();
    while (lex_.peek().t == Token::T::times_m ||
           lex_.peek().t == Token::T::div_m) {
      bool mul = lex_.take().t == Token::T::times_m;
      NodeP right = parse_factor();
      ExprNode n;
      n.kind = ExprNode::Kind::binary;
      n.op = mul ? BinOp::mmul : BinOp::mdiv;
      n.begin = left->begin;
      n.end = right->end;
      n.a = left;
      n.b = right;
      left = make(std::move(n));
    }
    return left;
  }

  NodeP parse_factor() {
    NodeP base = parse_unary();
    if (lex_.peek().t == Token::T::pow_m) {
      Token op = lex_.take();
      ExprNode n;
      n.kind = ExprNode::Kind::power;
      n.exponent = op.num;
      n.begin = base->begin;
      n.end = op.end;
      n.a = base;
      return make(std::move(n));
    }
    return base;
  }

  NodeP parse_unary() {
    if (lex_.peek().t == Token::T::minus_m) {
      Token t = lex_.take();
      NodeP child = parse_unary();
      ExprNode n;
      n.kind = ExprNode::Kind::neg;
      n.begin = t.begin;
      n.end = child->end;
      n.a = child;
      return make(std::move(n));
    }
    return parse_atom();
  }

  NodeP parse_atom() {
    Token t = lex_.peek();
    switch (t.t) {
      case Token::T::epow: {
        lex_.take();
        ExprNode n;
        n.kind = ExprNode::Kind::constant;
        n.cval = t.num;
        n.begin = t.begin;
        n.end = t.end;
        return make(std::move(n));
      }
      case Token::T::decimal: {
        lex_.take();
        ExprNode n;
        n.kind = ExprNode::Kind::constant;
        n.cval = std::log(t.num);
        n.begin = t.begin;
        n.end = t.end;
        return make(std::move(n));
      }
      case Token::T::param: {
        lex_.take();
        ExprNode n;
        n.kind = ExprNode::Kind::param;
        n.begin = t.begin;
        n.end = t.end;
        return make(std::move(n));
      }
      case Token::T::func: {
        lex_.take();
        if (lex_.peek().t != Token::T::lparen)
          err(lex_.peek().begin, "expected '('");
        lex_.take();
        NodeP arg = parse_expr();
        if (lex_.peek().t != Token::T::rparen)
          err(lex_.peek().begin, "expected ')'");
        Token close = lex_.take();
        ExprNode n;
        n.kind = ExprNode::Kind::func;
        n.fn = t.fn;
        n.begin = t.begin;
        n.end = close.end;
        n.a = arg;
        return make(std::move(n));
      }
      case Token::T::lparen: {
        lex_.take();
        NodeP inner = parse_expr();
        if (lex_.peek().t != Token::T::rparen)
          err(lex_.peek().begin, "expected ')'");
        lex_.take();
        return inner;
      }
      default:
        err(t.begin, "expected expression");
    }
  }

  Lexer lex_;
};

// Precedence for the printer: expr 1, term 2, power 3, unary 4, atom 5.
int prec(const ExprNode& n) {
  switch (n.kind) {
    case ExprNode::Kind::binary:
      return (n.op == BinOp::madd || n.op == BinOp::msub) ? 1 : 2;
    case ExprNode::Kind::power:
      return 3;
    case ExprNode::Kind::neg:
      return 4;
    default:
      return 5;
  }
}

void print_node(const ExprNode& n, std::string& out);

void print_wrapped(const ExprNode& n, std::string& out, bool wrap) {
  if (wrap) out += '(';
  print_node(n, out);
  if (wrap) out += ')';
}

void print_node(const ExprNode& n, std::string& out) {
  switch (n.kind) {
    case ExprNode::Kind::constant:
      out += "e^" + fmt17(n.cval);
      return;
    case ExprNode::Kind::param:
      out += 's';
      return;
    case ExprNode::Kind::neg:
      out += "-* ";
      print_wrapped(*n.a, out, prec(*n.a) < 4);
      return;
    case ExprNode::Kind::power:
      print_wrapped(*n.a, out, prec(*n.a) < 4);
      out += " ^* " + fmt17(n.exponent);
      return;
    case ExprNode::Kind::func:
      out += n.fn == FuncKind::msin   ? "msin("
             : n.fn == FuncKind::mcos ? "mcos("
                                      : "mtan(";
      print_node(*n.a, out);
      out += ')';
      return;
    case ExprNode::Kind::binary: {
      int p = prec(n);
      const char* sym = n.op == BinOp::madd   ? " +* "
                        : n.op == BinOp::msub ? " -* "
                        : n.op == BinOp::mmul ? " .* "
                                              : " /* ";
      print_wrapped(*n.a, out, prec(*n.a) < p);
      out += sym;
      print_wrapped(*n.b, out, prec(*n.b) <= p);
      return;
    }
  }
}

double eval_node(const ExprNode& n, double u) {
  switch (n.kind) {
    case ExprNode::Kind::constant:
      return n.cval;
    case ExprNode::Kind::param:
      return u;
    case ExprNode::Kind::neg:
      return -eval_node(*n.a, u);
    case ExprNode::Kind::binary: {
      double l = eval_node(*n.a, u);
      double r = eval_node(*n.b, u);
      switch (n.op) {
        case BinOp::madd: return l + r;
        case BinOp::msub: return l - r;
        case BinOp::mmul: return l * r;
        case BinOp::mdiv:
          if (r == 0.0)
            fail(ErrCode::domain,
                 "mdiv by multiplicative zero at offset " +
                     std::to_string(n.begin),
                 n.begin);
          return l / r;
      }
      return 0.0;
    }
    case ExprNode::Kind::power: {
      double x = eval_node(*n.a, u);
      if (n.exponent != std::floor(n.exponent) && x < 0.0)
        fail(ErrCode::domain,
             "fractional mpow of value below 1 at offset " +
                 std::to_string(n.begin),
             n.begin);
      return std::pow(x, n.exponent);
    }
    case ExprNode::Kind::func: {
      double x = eval_node(*n.a, u);
      switch (n.fn) {
        case FuncKind::msin: return std::sin(x);
        case FuncKind::mcos: return std::cos(x);
        case FuncKind::mtan:
          if (std::cos(x) == 0.0)
            fail(ErrCode::domain,
                 "mtan pole at offset " + std::to_string(n.begin), n.begin);
          return std::tan(x);
      }
      return 0.0;
    }
  }
  return 0.0;
}

Jet eval_jet_node(const ExprNode& n, double u) {
  switch (n.kind) {
    case ExprNode::Kind::constant:
      return Jet::constant(n.cval);
    case ExprNode::Kind::param:
      return Jet::variable(u);
    case ExprNode::Kind::neg:
      return -eval_jet_node(*n.a, u);
    case ExprNode::Kind::binary: {
      Jet l = eval_jet_node(*n.a, u);
      Jet r = eval_jet_node(*n.b, u);
      switch (n.op) {
        case BinOp::madd: return l + r;
        case BinOp::msub: return l - r;
        case BinOp::mmul: return l * r;
        case BinOp::mdiv:
          if (r.c[0] == 0.0)
            fail(ErrCode::domain,
                 "mdiv by multiplicative zero at offset " +
                     std::to_string(n.begin),
                 n.begin);
          return l / r;
      }
      return Jet{};
    }
    case ExprNode::Kind::power: {
      Jet x = eval_jet_node(*n.a, u);
      if (n.exponent != std::floor(n.exponent) && x.c[0] < 0.0)
        fail(ErrCode::domain,
             "fractional mpow of value below 1 at offset " +
                 std::to_string(n.begin),
             n.begin);
      if (n.exponent != std::floor(n.exponent) && x.c[0] == 0.0)
        fail(ErrCode::domain,
             "fractional mpow of multiplicative zero at offset " +
                 std::to_string(n.begin),
             n.begin);
      return jet_pow(x, n.exponent);
    }
    case ExprNode::Kind::func: {
      Jet x = eval_jet_node(*n.a, u);
      switch (n.fn) {
        case FuncKind::msin: return jet_sin(x);
        case FuncKind::mcos: return jet_cos(x);
        case FuncKind::mtan:
          if (std::cos(x.c[0]) == 0.0)
            fail(ErrCode::domain,
                 "mtan pole at offset " + std::to_string(n.begin), n.begin);
          return jet_tan(x);
      }
      return Jet{};
    }
  }
  return Jet{};
}

bool equal_nodes(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprNode::Kind::constant: return a.cval == b.cval;
    case ExprNode::Kind::param: return true;
    case ExprNode::Kind::neg: return equal_nodes(*a.a, *b.a);
    case ExprNode::Kind::binary:
      return a.op == b.op && equal_nodes(*a.a, *b.a) && equal_nodes(*a.b, *b.b);
    case ExprNode::Kind::power:
      return a.exponent == b.exponent && equal_nodes(*a.a, *b.a);
    case ExprNode::Kind::func:
      return a.fn == b.fn && equal_nodes(*a.a, *b.a);
  }
  return false;
}

}  // namespace

CurveExpr CurveExpr::parse(const std::string& text) {
  Parser p(text);
  CurveExpr e;
  e.root_ = p.parse();
  e.source_ = text;
  return e;
}

std::string CurveExpr::print() const {
  if (!root_) fail(ErrCode::invalid, "printing an empty expression");
  std::string out;
  print_node(*root_, out);
  return out;
}

MulScalar CurveExpr::eval(MulScalar s) const {
  if (!root_) fail(ErrCode::invalid, "evaluating an empty expression");
  return MulScalar{eval_node(*root_, s.logval)};
}

double CurveExpr::eval_logval_at(double s_value) const {
  if (!(s_value > 0.0))
    fail(ErrCode::domain, "curve parameter must be a positive real");
  return eval(MulScalar{std::log(s_value)}).logval;
}

Jet CurveExpr::eval_jet(double u) const {
  if (!root_) fail(ErrCode::invalid, "evaluating an empty expression");
  return eval_jet_node(*root_, u);
}

bool CurveExpr::equals(const CurveExpr& other) const {
  if (!root_ || !other.root_) return root_ == other.root_;
  return equal_nodes(*root_, *other.root_);
}

MulScalar mderiv(const CurveExpr& e, MulScalar s, int order) {
  if (order < 1 || order > 4)
    fail(ErrCode::unsupported, "mderiv supports orders 1 through 4");
  Jet j = e.eval_jet(s.logval);
  return MulScalar{j.deriv(order)};
}

MulScalar mderiv_numeric(const std::function<double(double)>& fn, MulScalar s,
                         int order) {
  if (order < 1 || order > 4)
    fail(ErrCode::unsupported, "mderiv_numeric supports orders 1 through 4");
  double u = s.logval;
  auto g = [&](double uu) {
    double v = fn(std::exp(uu));
    if (!(v > 0.0) || !std::isfinite(v))
      fail(ErrCode::domain, "function left the positive reals inside stencil");
    return std::log(v);
  };
  double eps = std::numeric_limits<double>::epsilon();
  double h = std::pow(eps, 1.0 / (order + 2)) * std::max(1.0, std::fabs(u));
  switch (order) {
    case 1:
      return MulScalar{(g(u + h) - g(u - h)) / (2.0 * h)};
    case 2:
      return MulScalar{(g(u + h) - 2.0 * g(u) + g(u - h)) / (h * h)};
    case 3:
      return MulScalar{
          (g(u + 2 * h) - 2.0 * g(u + h) + 2.0 * g(u - h) - g(u - 2 * h)) /
          (2.0 * h * h * h)};
    default:
      return MulScalar{(g(u + 2 * h) - 4.0 * g(u + h) + 6.0 * g(u) -
                        4.0 * g(u - h) + g(u - 2 * h)) /
                       (h * h * h * h)};
  }
}

MulScalar mintegral(const CurveExpr& e, MulScalar a, MulScalar b) {
  if (a.logval > b.logval)
    fail(ErrCode::domain, "mintegral needs a <= b");
  auto integrand = [&](double u) { return e.eval(MulScalar{u}).logval; };
  return MulScalar{adaptive_simpson(integrand, a.logval, b.logval, 1e-10, 40)};
}

}  // namespace mulgeo
