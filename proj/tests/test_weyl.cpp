#include "helpers.hpp"
#include "weyl/sampling.hpp"

using namespace weyl;
using namespace weyl::testing;

namespace {

// Applies a right-form operator to f by differentiating after multiplying,
// independently of the conversion code.
Poly apply_right(const RightForm& r, const Poly& f) {
  Poly out(f.dim());
  for (const auto& [k, c] : r.terms()) {
    Poly g = Poly::monomial(k.second, c) * f;
    for (std::size_t i = 0; i < k.first.dim(); ++i)
      for (unsigned t = 0; t < k.first[i]; ++t) g = g.derivative(i);
    out = out + g;
  }
  return out;
}

}  // namespace

TEST_SUITE("weyl multiplication") {
  TEST_CASE("examples") {
    WeylOp x = WeylOp::x(1, 0), d = WeylOp::d(1, 0);
    CHECK(d * x == left1({{1, 1, 1}, {0, 0, 1}}));
    CHECK(d * d * x == left1({{1, 2, 1}, {0, 1, 2}}));
    WeylOp one = WeylOp::constant(1, 1);
    CHECK((one + d * x) * (WeylOp::constant(1, 2) + d * x) == left1({{2, 2, 1}, {1, 1, 6}, {0, 0, 6}}));
  }

  TEST_CASE("defining relations") {
    for (std::size_t dim = 1; dim <= 3; ++dim)
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          CHECK(commutator(WeylOp::d(dim, i), WeylOp::x(dim, j)) == WeylOp::constant(dim, i == j ? 1 : 0));
          CHECK(commutator(WeylOp::x(dim, i), WeylOp::x(dim, j)).is_zero());
          CHECK(commutator(WeylOp::d(dim, i), WeylOp::d(dim, j)).is_zero());
        }
  }

  TEST_CASE("dimension mismatch") {
    CHECK_THROWS_AS(weyl_mul(WeylOp::x(1, 0), WeylOp::x(2, 0)), std::invalid_argument);
    CHECK_THROWS_AS(apply_to_poly(WeylOp::x(1, 0), Poly::variable(2, 0)), std::invalid_argument);
  }

  TEST_CASE("associativity and bilinearity") {
    auto rng = seeded(10);
    for (int k = 0; k < 100; ++k) {
      std::size_t dim = 1 + k % 3;
      WeylOp a = random_op(rng, dim, 2, 2, 3), b = random_op(rng, dim, 2, 2, 3), c = random_op(rng, dim, 2, 2, 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * Rational(3, 2)) * b == (a * b) * Rational(3, 2));
    }
  }

  TEST_CASE("faithful on polynomials of degree at most 8") {
    auto rng = seeded(11);
    for (int k = 0; k < 30; ++k) {
      std::size_t dim = 1 + k % 3;
      WeylOp p = random_op(rng, dim, 3, 3, 4), q = random_op(rng, dim, 3, 3, 4);
      WeylOp pq = p * q;
      for (const auto& g : monomials_up_to(dim, 8)) {
        Poly f = Poly::monomial(g);
        CHECK(apply_to_poly(pq, f) == apply_to_poly(p, apply_to_poly(q, f)));
      }
    }
  }

  TEST_CASE("power") {
    WeylOp d = WeylOp::d(1, 0), x = WeylOp::x(1, 0);
    CHECK((d * x).pow(3) == (d * x) * (d * x) * (d * x));
    CHECK(x.pow(0) == WeylOp::constant(1, 1));
  }
}

TEST_SUITE("normal forms") {
  TEST_CASE("right form examples") {
    CHECK(to_right_form(left1({{1, 1, 1}})) == right1({{1, 1, 1}, {0, 0, -1}}));
    CHECK(to_right_form(left1({{2, 2, 1}})) == right1({{2, 2, 1}, {1, 1, -4}, {0, 0, 2}}));
    WeylOp pure = WeylOp::monomial(mi({0, 0}), mi({2, 1}));
    RightForm expect(2);
    expect.add_term(mi({2, 1}), mi({0, 0}), Rational(1));
    CHECK(to_right_form(pure) == expect);
  }

  TEST_CASE("round trip and action agree on random operators") {
    auto rng = seeded(12);
    for (int k = 0; k < 200; ++k) {
      std::size_t dim = 1 + k % 3;
      WeylOp p = random_op(rng, dim, 3, 3, 5);
      RightForm r = to_right_form(p);
      CHECK(from_right_form(r) == p);
      for (const auto& g : monomials_up_to(dim, 4)) {
        Poly f = Poly::monomial(g);
        CHECK(apply_right(r, f) == apply_to_poly(p, f));
      }
    }
  }
}

TEST_SUITE("polynomial action") {
  TEST_CASE("examples") {
    Poly x = Poly::variable(1, 0);
    CHECK(apply_to_poly(WeylOp::d(1, 0), x * x) == Poly::constant(1, 2) * x);
    CHECK(apply_to_poly(WeylOp::x(1, 0) * WeylOp::d(1, 0), x.pow(3)) == Poly::constant(1, 3) * x.pow(3));
    WeylOp q = WeylOp::constant(1, 1) + WeylOp::d(1, 0) * WeylOp::x(1, 0);
    CHECK(apply_to_poly(q, x * x) == Poly::constant(1, 4) * x * x);
  }
}

TEST_SUITE("automorphisms") {
  TEST_CASE("fourier examples") {
    WeylOp x = WeylOp::x(1, 0), d = WeylOp::d(1, 0);
    CHECK(fourier(x) == d);
    CHECK(fourier(x * d) == left1({{1, 1, -1}, {0, 0, -1}}));
    CHECK(fourier(d * d) == x * x);
  }

  TEST_CASE("translation examples") {
    WeylOp x = WeylOp::x(1, 0), d = WeylOp::d(1, 0);
    CHECK(translate_x(x, 0, Rational(1)) == left1({{1, 0, 1}, {0, 0, 1}}));
    CHECK(translate_x(d, 0, Rational(5)) == d);
    CHECK(translate_x(x * d, 0, Rational(1)) == left1({{1, 1, 1}, {0, 1, 1}}));
  }

  TEST_CASE("homomorphisms and fourier has order four") {
    auto rng = seeded(13);
    for (int k = 0; k < 100; ++k) {
      std::size_t dim = 1 + k % 3;
      WeylOp p = random_op(rng, dim, 2, 2, 3), q = random_op(rng, dim, 2, 2, 3);
      CHECK(fourier(p * q) == fourier(p) * fourier(q));
      CHECK(translate_x(p * q, k % dim, Rational(-2, 3)) ==
            translate_x(p, k % dim, Rational(-2, 3)) * translate_x(q, k % dim, Rational(-2, 3)));
      CHECK(fourier(fourier(fourier(fourier(p)))) == p);
      CHECK(fourier_inverse(fourier(p)) == p);
    }
  }

  TEST_CASE("euler operator") {
    // x1 d1 + x2 d2 scales a monomial by its degree.
    Poly f = Poly::monomial(mi({2, 3}));
    CHECK(apply_to_poly(euler_operator(2), f) == Poly::constant(2, 5) * f);
  }
}

TEST_SUITE("shift identities") {
  TEST_CASE("shift identity") {
    for (std::size_t dim = 1; dim <= 3; ++dim)
      for (std::size_t i = 0; i < dim; ++i)
        for (unsigned k = 0; k <= 5; ++k) {
          MultiIndex a(dim);
          a[i] = k;
          WeylOp xk = WeylOp::monomial(a, MultiIndex(dim));
          a[i] = k + 1;
          WeylOp lhs = xk * (WeylOp::constant(dim, static_cast<long>(k)) + WeylOp::d(dim, i) * WeylOp::x(dim, i));
          CHECK(lhs == WeylOp::d(dim, i) * WeylOp::monomial(a, MultiIndex(dim)));
        }
  }
}
