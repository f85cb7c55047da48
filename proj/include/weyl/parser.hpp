#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/poly.hpp"
#include "weyl/weyl_op.hpp"

namespace weyl {

/// Syntax or range error; `position` is a 0-based byte offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Which atoms are legal: x<i>/d<i> for operators, a single t for polynomials in d.
enum class Dialect { Operator, Univariate };

struct ExprAst {
  enum class Kind { Number, XAtom, DAtom, TAtom, Add, Sub, Mul, Pow, Neg };
  Kind kind = Kind::Number;
  Rational value;          ///< Number
  unsigned index = 0;      ///< XAtom / DAtom, 1-based
  unsigned exponent = 0;   ///< Pow
  std::size_t position = 0;
  std::vector<ExprAst> children;
};

/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := rational | 'x'<int> | 'd'<int> | 't' | '(' expr ')'
/// Products are noncommutative and read left to right.
ExprAst parse_ast(std::string_view text, Dialect dialect);

/// Parses an operator in A_d; indices must lie in 1..dim.
WeylOp parse_expr(std::string_view text, std::size_t dim);
/// Parses a polynomial in the symbol t.
Poly parse_univariate(std::string_view text);

}  // namespace weyl
