#include "weyl/parser.hpp"

#include <cctype>
#include <optional>

namespace weyl {

namespace {

enum class Tok { Number, X, D, T, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;  // digits for Number / index
};

class Lexer {
 public:
  Lexer(std::string_view src, Dialect dialect) : src_(src), dialect_(dialect) {}

  Token next() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= src_.size()) return {Tok::End, start, ""};
    char c = src_[i_];
    auto digits = [&] {
      std::size_t b = i_;
      while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
      return std::string(src_.substr(b, i_ - b));
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      // p/q with no spaces is a single rational literal
      if (i_ + 1 < src_.size() && src_[i_] == '/' && std::isdigit(static_cast<unsigned char>(src_[i_ + 1]))) {
        ++i_;
        num += "/" + digits();
      }
      return {Tok::Number, start, num};
    }
    switch (c) {
      case '+': ++i_; return {Tok::Plus, start, "+"};
      case '-': ++i_; return {Tok::Minus, start, "-"};
      case '*': ++i_; return {Tok::Star, start, "*"};
      case '^': ++i_; return {Tok::Caret, start, "^"};
      case '(': ++i_; return {Tok::LParen, start, "("};
      case ')': ++i_; return {Tok::RParen, start, ")"};
      default: break;
    }
    if (dialect_ == Dialect::Operator && (c == 'x' || c == 'd')) {
      ++i_;
      std::string idx = digits();
      if (idx.empty()) throw ParseError(std::string("expected an index after '") + c + "'", i_);
      return {c == 'x' ? Tok::X : Tok::D, start, idx};
    }
    if (dialect_ == Dialect::Univariate && c == 't') {
      ++i_;
      return {Tok::T, start, "t"};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  std::string_view src_;
  Dialect dialect_;
  std::size_t i_ = 0;
};

// Binding powers.
constexpr int kSum = 10;
constexpr int kProduct = 20;
constexpr int kPrefix = 25;
constexpr int kPower = 30;

int infix_power(Tok t) {
  switch (t) {
    case Tok::Plus:
    case Tok::Minus: return kSum;
    case Tok::Star: return kProduct;
    case Tok::Caret: return kPower;
    default: return -1;
  }
}

class PrattParser {
 public:
  PrattParser(std::string_view src, Dialect dialect) : lexer_(src, dialect) { advance(); }

  ExprAst parse() {
    ExprAst e = expression(0);
    if (cur_.kind != Tok::End) throw ParseError("unexpected '" + cur_.text + "'", cur_.pos);
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  ExprAst expression(int min_power) {
    ExprAst left = prefix();
    while (true) {
      int power = infix_power(cur_.kind);
      if (power < 0 || power <= min_power) break;
      Token op = cur_;
      advance();
      if (op.kind == Tok::Caret) {
        if (cur_.kind != Tok::Number || cur_.text.find('/') != std::string::npos)
          throw ParseError("exponent must be a nonnegative integer", cur_.pos);
        ExprAst pow{ExprAst::Kind::Pow, {}, 0, parse_uint(cur_), op.pos, {}};
        advance();
        pow.children.push_back(std::move(left));
        left = std::move(pow);
        continue;
      }
      ExprAst right = expression(power);
      ExprAst::Kind kind = op.kind == Tok::Plus ? ExprAst::Kind::Add
                           : op.kind == Tok::Minus ? ExprAst::Kind::Sub
                                                   : ExprAst::Kind::Mul;
      ExprAst node{kind, {}, 0, 0, op.pos, {}};
      node.children.push_back(std::move(left));
      node.children.push_back(std::move(right));
      left = std::move(node);
    }
    return left;
  }

  ExprAst prefix() {
    Token t = cur_;
    switch (t.kind) {
      case Tok::Number: {
        advance();
        Rational v;
        try {
          v = Rational::parse(t.text);
        } catch (const std::exception& e) {
          throw ParseError(e.what(), t.pos);
        }
        return {ExprAst::Kind::Number, v, 0, 0, t.pos, {}};
      }
      case Tok::X:
      case Tok::D: {
        advance();
        unsigned idx = parse_uint(t);
        return {t.kind == Tok::X ? ExprAst::Kind::XAtom : ExprAst::Kind::DAtom, {}, idx, 0, t.pos, {}};
      }
      case Tok::T:
        advance();
        return {ExprAst::Kind::TAtom, {}, 1, 0, t.pos, {}};
      case Tok::Minus: {
        advance();
        ExprAst operand = expression(kPrefix);
        ExprAst neg{ExprAst::Kind::Neg, {}, 0, 0, t.pos, {}};
        neg.children.push_back(std::move(operand));
        return neg;
      }
      case Tok::LParen: {
        advance();
        ExprAst inner = expression(0);
        if (cur_.kind != Tok::RParen) throw ParseError("expected ')'", cur_.pos);
        advance();
        return inner;
      }
      case Tok::End: throw ParseError("unexpected end of input", t.pos);
      default: throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  static unsigned parse_uint(const Token& t) {
    if (t.text.size() > 9) throw ParseError("integer too large", t.pos);
    return static_cast<unsigned>(std::stoul(t.text));
  }

  Lexer lexer_;
  Token cur_{Tok::End, 0, ""};
};

template <class Value, class Atom>
Value evaluate(const ExprAst& e, const Atom& atom, const Value& one) {
  switch (e.kind) {
    case ExprAst::Kind::Number: return one * e.value;
    case ExprAst::Kind::XAtom:
    case ExprAst::Kind::DAtom:
    case ExprAst::Kind::TAtom: return atom(e);
    case ExprAst::Kind::Add: return evaluate(e.children[0], atom, one) + evaluate(e.children[1], atom, one);
    case ExprAst::Kind::Sub: return evaluate(e.children[0], atom, one) - evaluate(e.children[1], atom, one);
    case ExprAst::Kind::Mul: return evaluate(e.children[0], atom, one) * evaluate(e.children[1], atom, one);
    case ExprAst::Kind::Neg: return -evaluate(e.children[0], atom, one);
    case ExprAst::Kind::Pow: return evaluate(e.children[0], atom, one).pow(e.exponent);
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

ExprAst parse_ast(std::string_view text, Dialect dialect) { return PrattParser(text, dialect).parse(); }

WeylOp parse_expr(std::string_view text, std::size_t dim) {
  ExprAst ast = parse_ast(text, Dialect::Operator);
  auto atom = [dim](const ExprAst& e) {
    if (e.index == 0 || e.index > dim)
      throw ParseError("index " + std::to_string(e.index) + " outside 1.." + std::to_string(dim), e.position);
    return e.kind == ExprAst::Kind::XAtom ? WeylOp::x(dim, e.index - 1) : WeylOp::d(dim, e.index - 1);
  };
  return evaluate<WeylOp>(ast, atom, WeylOp::constant(dim, 1));
}

Poly parse_univariate(std::string_view text) {
  ExprAst ast = parse_ast(text, Dialect::Univariate);
  auto atom = [](const ExprAst&) { return Poly::variable(1, 0); };
  return evaluate<Poly>(ast, atom, Poly::constant(1, 1));
}

}  // namespace weyl
