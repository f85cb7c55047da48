#pragma once

#include <random>

#include "weyl/quotient.hpp"

namespace weyl {

/// Random operator with at most `max_terms` terms, |b| <= max_order,
/// |a| <= max_x_degree and small integer or half-integer coefficients.
WeylOp random_op(std::mt19937_64& rng, std::size_t dim, unsigned max_order, unsigned max_x_degree,
                 unsigned max_terms);
/// Random class of D / D m^{n+1} with d-order <= max_order.
QuotientClass random_class(std::mt19937_64& rng, const QuotientSpec& spec, unsigned max_order, unsigned max_terms);
/// Random exponent vector with total degree <= bound.
MultiIndex random_index(std::mt19937_64& rng, std::size_t dim, unsigned bound);

}  // namespace weyl
