#include "helpers.hpp"
#include "weyl/ode_split.hpp"
#include "weyl/sampling.hpp"

using namespace weyl;
using namespace weyl::testing;

TEST_SUITE("constant-coefficient reduction") {
  TEST_CASE("examples") {
    CHECK(reduce_mod_constcoeff(left1({{0, 3, 1}}), t_poly("t^2")).is_zero());
    CHECK(reduce_mod_constcoeff(WeylOp::d(1, 0) * WeylOp::x(1, 0), t_poly("t")) == WeylOp::constant(1, 1));
    CHECK(reduce_mod_constcoeff(left1({{1, 2, 1}}), t_poly("t^2")).is_zero());
    CHECK_THROWS_AS(reduce_mod_constcoeff(WeylOp::x(1, 0), t_poly("5")), std::invalid_argument);
  }

  TEST_CASE("agrees with the quotient engine across the Fourier swap") {
    auto rng = seeded(40);
    for (int k = 0; k < 100; ++k) {
      unsigned n = k % 4;
      Poly p = t_poly("t").pow(n + 1);
      WeylOp w = random_op(rng, 1, 4, 3, 3);
      if (k % 2) w = w * constcoeff_operator(p);  // force membership half the time
      bool in_ode = reduce_mod_constcoeff(w, p).is_zero();
      bool in_quotient = is_in_ideal(fourier_inverse(w), QuotientSpec(1, n));
      CHECK(in_ode == in_quotient);
      if (k % 2) CHECK(in_ode);
    }
  }
}

TEST_SUITE("crt split") {
  TEST_CASE("t(t-1)") {
    auto s = crt_split(default_factorization(t_poly("t*(t-1)")));
    CHECK(s.verified());
    REQUIRE(s.components.size() == 2);
    CHECK(s.components[0].q == t_poly("t"));
    CHECK(s.components[0].idempotent == left1({{0, 0, 1}, {0, 1, -1}}));
    CHECK(s.components[1].q == t_poly("t-1"));
    CHECK(s.components[1].idempotent == WeylOp::d(1, 0));
  }

  TEST_CASE("t^2(t-1)") {
    auto s = crt_split(default_factorization(t_poly("t^2*(t-1)")));
    CHECK(s.verified());
    REQUIRE(s.components.size() == 2);
    CHECK(s.components[0].multiplicity == 2);
    CHECK(s.components[0].idempotent == left1({{0, 0, 1}, {0, 2, -1}}));
    CHECK(s.components[1].idempotent == left1({{0, 2, 1}}));
  }

  TEST_CASE("single factor") {
    auto s = crt_split(default_factorization(t_poly("t^2 + 1")));
    REQUIRE(s.components.size() == 1);
    CHECK(s.components[0].idempotent == WeylOp::constant(1, 1));
  }

  TEST_CASE("user factor lists are validated") {
    CHECK_THROWS_AS(make_constcoeff_spec(t_poly("t^2"), {{t_poly("t"), 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_constcoeff_spec(t_poly("t^2"), {{t_poly("t"), 1}, {t_poly("t"), 1}}), std::invalid_argument);
    auto ok = make_constcoeff_spec(t_poly("2*t^3 - 4*t"), {{t_poly("t^2-2"), 1}, {t_poly("t"), 1}});
    CHECK(ok.factors.size() == 2);
  }

  TEST_CASE("random products of prime powers") {
    auto rng = seeded(41);
    const std::vector<std::string> primes = {"t", "t-1", "t+2", "t-1/2", "t^2+1", "t^2-3"};
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    std::uniform_int_distribution<unsigned> count(1, 3), mult(1, 3);
    int done = 0;
    while (done < 60) {
      std::vector<SquarefreeFactor> fs;
      unsigned deg = 0;
      bool clash = false;
      for (unsigned j = count(rng); j > 0; --j) {
        Poly q = t_poly(primes[pick(rng)]);
        for (const auto& f : fs) clash = clash || f.factor == q;
        unsigned e = mult(rng);
        fs.push_back({q, e});
        deg += e * static_cast<unsigned>(degree(q));
      }
      if (clash || deg > 6) continue;
      auto s = ode_split(expand_factors(fs), fs);
      CHECK(s.verified());
      for (const auto& c : s.transcript) {
        CAPTURE(c.name);
        CHECK(c.pass);
      }
      ++done;
    }
  }
}

TEST_SUITE("linear prime powers") {
  TEST_CASE("examples") {
    auto a = split_prime_power_linear(t_poly("t"), 1);
    REQUIRE(a.size() == 1);
    CHECK(a[0] == WeylOp::constant(1, 1));

    auto b = split_prime_power_linear(t_poly("t"), 2);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == left1({{1, 1, -1}, {0, 0, 1}}));
    CHECK(b[1] == left1({{0, 1, -1}}));
    CHECK(reduce_mod_constcoeff(WeylOp::d(1, 0) * b[0], t_poly("t^2")).is_zero());

    CHECK_THROWS_AS(split_prime_power_linear(t_poly("t^2+1"), 1), std::invalid_argument);
  }

  TEST_CASE("translated generators") {
    for (const std::string root : {"1", "-2", "3/4"}) {
      Poly q = t_poly("t - " + root);
      if (root[0] == '-') q = t_poly("t + " + root.substr(1));
      for (unsigned e = 1; e <= 4; ++e) {
        auto gens = split_prime_power_linear(q, e);
        REQUIRE(gens.size() == e);
        Poly qe = q.pow(e);
        for (const auto& g : gens) {
          CHECK(reduce_mod_constcoeff(constcoeff_operator(q) * g, qe).is_zero());
          CHECK_FALSE(reduce_mod_constcoeff(g, qe).is_zero());
        }
        // Translating by the root undoes the shift: x -> x, d -> d - a.
        auto base = split_prime_power_linear(t_poly("t"), e);
        for (std::size_t k = 0; k < e; ++k) {
          WeylOp back = substitute(gens[k], {WeylOp::x(1, 0)}, {WeylOp::d(1, 0) + WeylOp::constant(1, Rational::parse(root))});
          CHECK(back == base[k]);
        }
      }
    }
  }
}

TEST_SUITE("ode split") {
  TEST_CASE("t^2 (t-1)") {
    auto s = ode_split(t_poly("t^2*(t-1)"));
    CHECK(s.verified());
    CHECK(s.components.size() == 2);
    CHECK(s.simple_count() == 3);
    CHECK(s.unsplit_blocks() == 0);
  }

  TEST_CASE("t") {
    auto s = ode_split(t_poly("t"));
    CHECK(s.verified());
    REQUIRE(s.components.size() == 1);
    REQUIRE(s.components[0].linear_split);
    CHECK(*s.components[0].linear_split == std::vector<WeylOp>{WeylOp::constant(1, 1)});
    CHECK(s.simple_count() == 1);
  }

  TEST_CASE("(t^2 - 2) t keeps the nonlinear block") {
    auto s = ode_split(t_poly("(t^2-2)*t"));
    CHECK(s.verified());
    REQUIRE(s.components.size() == 2);
    CHECK(s.unsplit_blocks() == 1);
    int nonlinear = 0;
    for (const auto& c : s.components) nonlinear += !c.linear_split.has_value();
    CHECK(nonlinear == 1);
  }

  TEST_CASE("constant operator is rejected") { CHECK_THROWS_AS(ode_split(t_poly("3")), std::invalid_argument); }
}
