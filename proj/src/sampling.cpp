#include "weyl/sampling.hpp"

namespace weyl {

MultiIndex random_index(std::mt19937_64& rng, std::size_t dim, unsigned bound) {
  std::uniform_int_distribution<unsigned> total_dist(0, bound);
  std::uniform_int_distribution<std::size_t> axis_dist(0, dim - 1);
  MultiIndex m(dim);
  unsigned total = total_dist(rng);
  for (unsigned k = 0; k < total; ++k) m[axis_dist(rng)] += 1;
  return m;
}

namespace {

Rational random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 2);
  long p = num(rng);
  if (p == 0) p = 1;
  return Rational(p, den(rng));
}

}  // namespace

WeylOp random_op(std::mt19937_64& rng, std::size_t dim, unsigned max_order, unsigned max_x_degree,
                 unsigned max_terms) {
  std::uniform_int_distribution<unsigned> count(1, std::max(1u, max_terms));
  WeylOp p(dim);
  for (unsigned k = count(rng); k > 0; --k) {
    p.add_term(random_index(rng, dim, max_x_degree), random_index(rng, dim, max_order), random_coefficient(rng));
  }
  return p;
}

QuotientClass random_class(std::mt19937_64& rng, const QuotientSpec& spec, unsigned max_order, unsigned max_terms) {
  std::uniform_int_distribution<unsigned> count(1, std::max(1u, max_terms));
  RightForm r(spec.dim);
  for (unsigned k = count(rng); k > 0; --k)
    r.add_term(random_index(rng, spec.dim, max_order), random_index(rng, spec.dim, spec.n), random_coefficient(rng));
  return QuotientClass(spec, std::move(r));
}

}  // namespace weyl
