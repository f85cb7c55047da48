#pragma once

#include <string>

#include "weyl/quotient.hpp"
#include "weyl/weyl_op.hpp"

namespace weyl {

/// Left normal form, graded-lex descending, e.g. "x1*d1 + 1", "-1/2*x1^2", "0".
/// parse_expr(print_canonical(P), d) == P.
std::string print_canonical(const WeylOp& p);
/// Right normal form (d's first), e.g. "-4*d1*x1 + 2".
std::string print_right(const RightForm& r);
inline std::string print_class(const QuotientClass& v) { return print_right(v.rep()); }

}  // namespace weyl
