#include "helpers.hpp"
#include "weyl/linalg.hpp"

using namespace weyl;
using namespace weyl::testing;

namespace {

Poly random_univariate(std::mt19937_64& rng, unsigned max_degree) {
  std::uniform_int_distribution<long> coeff(-6, 6);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& v : c) v = Rational(coeff(rng));
  if (c.back().is_zero()) c.back() = Rational(1);
  return univariate(c);
}

Poly random_monic_linear(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> root(-4, 4);
  return linear_factor(Rational(root(rng)));
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("canonical form") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0, -5).denominator() == 1);
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational(7).to_string() == "7");
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  }

  TEST_CASE("combinatorial helpers") {
    CHECK(factorial(5) == Rational(120));
    CHECK(binomial(6, 2) == Rational(15));
    CHECK(binomial(2, 6) == Rational(0));
    CHECK(falling_factorial(5, 2) == Rational(20));
    CHECK(falling_factorial(2, 3) == Rational(0));
  }

  TEST_CASE("exactness under random arithmetic") {
    auto rng = seeded(1);
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 99999);
    for (int k = 0; k < 500; ++k) {
      Rational a(num(rng), den(rng)), b(num(rng), den(rng));
      CHECK((a + b) - b == a);
      if (!b.is_zero()) CHECK((a * b) / b == a);
    }
  }
}

TEST_SUITE("poly") {
  TEST_CASE("arithmetic examples") {
    Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1), one = Poly::constant(2, 1);
    CHECK((x1 + (-x1)).is_zero());
    CHECK((x1 + one) * (x1 - one) == x1 * x1 - one);
    CHECK((x1 + x2).pow(2) == x1 * x1 + Poly::constant(2, 2) * x1 * x2 + x2 * x2);
    CHECK(Poly::constant(2, 0).is_zero());
  }

  TEST_CASE("dimension mismatch") {
    CHECK_THROWS_AS(Poly::variable(1, 0) + Poly::variable(2, 0), std::invalid_argument);
  }

  TEST_CASE("monomial enumeration") {
    auto ms = monomials_up_to(2, 2);
    REQUIRE(ms.size() == 6);
    CHECK(ms[0] == mi({0, 0}));
    CHECK(ms[1] == mi({1, 0}));
    CHECK(ms[2] == mi({0, 1}));
    CHECK(ms[3] == mi({2, 0}));
    CHECK(monomials_of_degree(3, 3).size() == 10);
  }

  TEST_CASE("multi-index checked subtraction") {
    CHECK_THROWS_AS(mi({1, 0}) - mi({0, 1}), std::domain_error);
    CHECK(mi({2, 3}).factorial() == Rational(12));
    CHECK(mi({1, 2}).divides(mi({1, 3})));
    CHECK_FALSE(mi({2, 0}).divides(mi({1, 3})));
  }
}

TEST_SUITE("univariate") {
  TEST_CASE("division") {
    auto [q, r] = divmod(t_poly("t^3 + 2*t + 1"), t_poly("t - 1"));
    CHECK(q == t_poly("t^2 + t + 3"));
    CHECK(r == t_poly("4"));
    CHECK_THROWS(divmod(t_poly("t"), Poly(1)));
  }

  TEST_CASE("bezout examples") {
    auto r1 = bezout(t_poly("t"), t_poly("t-1"));
    CHECK(r1.gcd == t_poly("1"));
    CHECK(r1.u == t_poly("1"));
    CHECK(r1.v == t_poly("-1"));

    auto r2 = bezout(t_poly("t^2"), t_poly("t-1"));
    CHECK(r2.gcd == t_poly("1"));
    CHECK(r2.u == t_poly("1"));
    CHECK(r2.v == t_poly("-(t+1)"));

    auto r3 = bezout(t_poly("t"), t_poly("t"));
    CHECK(r3.gcd == t_poly("t"));
    CHECK(r3.u == t_poly("0"));
    CHECK(r3.v == t_poly("1"));

    CHECK_THROWS_AS(bezout(Poly(1), Poly(1)), std::invalid_argument);
  }

  TEST_CASE("bezout identity on random coprime pairs") {
    auto rng = seeded(2);
    int tested = 0;
    while (tested < 100) {
      Poly f = random_univariate(rng, 6), g = random_univariate(rng, 6);
      if (degree(gcd(f, g)) != 0) continue;
      auto r = bezout(f, g);
      CHECK(r.u * f + r.v * g == r.gcd);
      CHECK(r.gcd == t_poly("1"));
      ++tested;
    }
  }

  TEST_CASE("yun examples") {
    auto a = yun_squarefree(t_poly("t^3 - t^2"));
    REQUIRE(a.size() == 2);
    CHECK(a[0].factor == t_poly("t - 1"));
    CHECK(a[0].multiplicity == 1);
    CHECK(a[1].factor == t_poly("t"));
    CHECK(a[1].multiplicity == 2);

    auto b = yun_squarefree(t_poly("t^2 - 1"));
    REQUIRE(b.size() == 1);
    CHECK(b[0].factor == t_poly("t^2 - 1"));
    CHECK(b[0].multiplicity == 1);

    auto c = yun_squarefree(t_poly("(t-2)^3"));
    REQUIRE(c.size() == 1);
    CHECK(c[0].factor == t_poly("t - 2"));
    CHECK(c[0].multiplicity == 3);

    CHECK_THROWS(yun_squarefree(Poly(1)));
  }

  TEST_CASE("yun re-expands random products") {
    auto rng = seeded(3);
    std::uniform_int_distribution<unsigned> pieces(1, 4), mult(1, 3);
    for (int k = 0; k < 100; ++k) {
      Poly p = t_poly("1");
      unsigned deg = 0;
      for (unsigned j = pieces(rng); j > 0 && deg < 8; --j) {
        unsigned e = std::min(mult(rng), 8 - deg);
        p = p * random_monic_linear(rng).pow(e);
        deg += e;
      }
      p = p * Rational(-3, 2);
      auto factors = yun_squarefree(p);
      CHECK(expand_factors(factors) == monic(p));
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const Poly& f = factors[i].factor;
        CHECK(degree(gcd(f, f.derivative(0))) == 0);
        for (std::size_t j = i + 1; j < factors.size(); ++j) CHECK(degree(gcd(f, factors[j].factor)) == 0);
      }
    }
  }

  TEST_CASE("rational roots") {
    auto roots = rational_roots(t_poly("(2*t - 1)*(t + 3)*t*(t^2 + 1)"));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rational(-3));
    CHECK(roots[1] == Rational(0));
    CHECK(roots[2] == Rational(1, 2));
    CHECK(rational_roots(t_poly("t^2 - 2")).empty());
  }
}

TEST_SUITE("linear algebra") {
  TEST_CASE("identity solve") {
    Matrix b = Matrix::column({Rational(3), Rational(-1, 2), Rational(7)});
    auto r = linear_solve_exact(Matrix::identity(3), b);
    REQUIRE(r.consistent);
    CHECK(r.solution == b);
    CHECK(r.kernel.empty());
  }

  TEST_CASE("back substitution") {
    Matrix a{{1, 1}, {0, 1}};
    auto r = linear_solve_exact(a, Matrix::column({Rational(3), Rational(1)}));
    REQUIRE(r.consistent);
    CHECK(r.solution == Matrix::column({Rational(2), Rational(1)}));
  }

  TEST_CASE("kernel of a single relation") {
    auto k = kernel_basis(Matrix{{1, 1}});
    REQUIRE(k.size() == 1);
    // Any nonzero multiple of (1, -1) is a correct basis.
    CHECK(k[0][0] == -k[0][1]);
    CHECK_FALSE(k[0][0].is_zero());
  }

  TEST_CASE("inconsistency is reported") {
    Matrix a{{1, 1}, {1, 1}};
    auto r = linear_solve_exact(a, Matrix::column({Rational(1), Rational(2)}));
    CHECK_FALSE(r.consistent);
    CHECK_THROWS_AS(linear_solve_exact(a, Matrix::column({Rational(1)})), std::invalid_argument);
  }

  TEST_CASE("A x reproduces x for random invertible A") {
    auto rng = seeded(4);
    std::uniform_int_distribution<long> e(-5, 5);
    int done = 0;
    while (done < 50) {
      const std::size_t n = 1 + done % 6;
      Matrix a(n, n);
      std::vector<Rational> xs(n);
      for (std::size_t i = 0; i < n; ++i) {
        xs[i] = Rational(e(rng), 1 + (e(rng) + 5) % 3);
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(e(rng));
      }
      if (!kernel_basis(a).empty()) continue;
      Matrix x = Matrix::column(xs);
      auto r = linear_solve_exact(a, a * x);
      REQUIRE(r.consistent);
      CHECK(r.solution == x);
      ++done;
    }
  }

  TEST_CASE("sparse kernel vectors are in the kernel") {
    auto rng = seeded(5);
    std::uniform_int_distribution<long> e(-3, 3);
    for (int k = 0; k < 40; ++k) {
      SparseMatrix a(4, 7);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 7; ++j) a.add(i, j, Rational(e(rng)));
      auto ker = sparse_kernel(a);
      CHECK(ker.size() + sparse_rank(a) == 7);
      for (const auto& v : ker)
        for (const auto& row : a.row_data()) {
          Rational s;
          for (const auto& [j, c] : row)
            if (auto it = v.find(j); it != v.end()) s += c * it->second;
          CHECK(s.is_zero());
        }
    }
  }
}
