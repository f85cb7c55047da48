#include "weyl/univariate.hpp"

#include <algorithm>
#include <set>

namespace weyl {

namespace {

using Dense = std::vector<Rational>;

void require_univariate(const Poly& p) {
  if (p.dim() != 1) throw std::invalid_argument("expected a univariate polynomial");
}

Dense to_dense(const Poly& p) {
  require_univariate(p);
  Dense d(static_cast<std::size_t>(std::max(0L, p.total_degree() + 1)));
  for (const auto& [e, c] : p.terms()) d[e[0]] = c;
  return d;
}

void trim(Dense& d) {
  while (!d.empty() && d.back().is_zero()) d.pop_back();
}

}  // namespace

Poly univariate(const std::vector<Rational>& ascending) {
  Poly p(1);
  for (std::size_t i = 0; i < ascending.size(); ++i)
    p.add_term(MultiIndex{static_cast<MultiIndex::value_type>(i)}, ascending[i]);
  return p;
}

Poly linear_factor(const Rational& root) { return univariate({-root, Rational(1)}); }

long degree(const Poly& p) {
  require_univariate(p);
  return p.total_degree();
}

Rational leading_coefficient(const Poly& p) {
  require_univariate(p);
  return p.is_zero() ? Rational(0) : p.terms().begin()->second;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * leading_coefficient(p).inverse();
}

DivMod divmod(const Poly& f, const Poly& g) {
  Dense r = to_dense(f);
  Dense b = to_dense(g);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Dense q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0);
  Rational lead_inv = b.back().inverse();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = r[k + b.size() - 1] * lead_inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  trim(r);
  return {univariate(q), univariate(r)};
}

BezoutResult bezout(const Poly& f, const Poly& g) {
  require_univariate(f);
  require_univariate(g);
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("bezout of two zero polynomials");
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::constant(1, 1), s1(1);
  Poly t0(1), t1 = Poly::constant(1, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational scale = leading_coefficient(r0).inverse();
  return {r0 * scale, s0 * scale, t0 * scale};
}

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) return Poly(1);
  return bezout(f, g).gcd;
}

std::vector<SquarefreeFactor> yun_squarefree(const Poly& p) {
  require_univariate(p);
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  Poly a = monic(p);
  if (degree(a) == 0) return out;
  Poly da = a.derivative(0);
  Poly c = gcd(a, da);
  Poly w = divmod(a, c).quotient;
  Poly y = divmod(da, c).quotient;
  Poly z = y - w.derivative(0);
  for (unsigned i = 1; degree(w) > 0; ++i) {
    Poly g = gcd(w, z);
    if (degree(g) > 0) out.push_back({g, i});
    w = divmod(w, g).quotient;
    y = divmod(z, g).quotient;
    z = y - w.derivative(0);
  }
  return out;
}

Poly expand_factors(const std::vector<SquarefreeFactor>& factors) {
  Poly out = Poly::constant(1, 1);
  for (const auto& f : factors) out = out * f.factor.pow(f.multiplicity);
  return out;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      if (i * i != n) large.push_back(n / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate(const Dense& d, const Rational& x) {
  Rational acc(0);
  for (std::size_t k = d.size(); k-- > 0;) acc = acc * x + d[k];
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
  require_univariate(p);
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  Dense d = to_dense(p);
  std::set<Rational> roots;
  std::size_t shift = 0;
  while (shift < d.size() && d[shift].is_zero()) ++shift;
  if (shift > 0) roots.insert(Rational(0));
  d.erase(d.begin(), d.begin() + static_cast<long>(shift));
  if (d.size() <= 1) return {roots.begin(), roots.end()};

  mpz_class lcm_den = 1;
  for (const auto& c : d) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : d) ints.push_back((c * Rational(lcm_den)).numerator());

  for (const auto& num : positive_divisors(ints.front())) {
    for (const auto& den : positive_divisors(ints.back())) {
      for (int s : {1, -1}) {
        Rational candidate(mpz_class(s * num), den);
        if (evaluate(d, candidate).is_zero()) roots.insert(candidate);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace weyl
