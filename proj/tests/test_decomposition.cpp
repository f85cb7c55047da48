#include "helpers.hpp"
#include "weyl/decomposition.hpp"
#include "weyl/sampling.hpp"

using namespace weyl;
using namespace weyl::testing;

namespace {

WeylOp d_poly(std::initializer_list<std::pair<unsigned, long>> terms) {
  WeylOp out(1);
  for (const auto& [b, c] : terms) out.add_term(mi({0}), mi({b}), Rational(c));
  return out;
}

}  // namespace

TEST_SUITE("pochhammer") {
  TEST_CASE("examples") {
    CHECK(build_pochhammer(1, 0).op == WeylOp::constant(1, 1));
    CHECK(build_pochhammer(3, 0).op == WeylOp::constant(3, 1));
    CHECK(build_pochhammer(1, 1).op == left1({{1, 1, 1}, {0, 0, 2}}));
    CHECK(build_pochhammer(1, 2).op == left1({{2, 2, 1}, {1, 1, 6}, {0, 0, 6}}));
  }

  TEST_CASE("order is d*n") {
    for (std::size_t d = 1; d <= 3; ++d)
      for (unsigned n = 0; n <= 3; ++n) CHECK(build_pochhammer(d, n).op.order() == static_cast<long>(d * n));
  }

  TEST_CASE("x (1 + d x)_m = d^m x^(m+1)") {
    for (unsigned m = 0; m <= 4; ++m) {
      WeylOp lhs = WeylOp::x(1, 0) * rising_factorial(WeylOp::constant(1, 1) + WeylOp::d(1, 0) * WeylOp::x(1, 0), m);
      CHECK(lhs == left1({{0, m, 1}}) * left1({{m + 1, 0, 1}}));
    }
  }
}

TEST_SUITE("certificate") {
  TEST_CASE("D/Dx") {
    auto c = build_certificate(QuotientSpec(1, 0));
    CHECK(c.verified());
    REQUIRE(c.entries.size() == 1);
    CHECK(c.entries[0].generator_op == WeylOp::constant(1, 1));
    CHECK(c.invariant_dimension == 1);
  }

  TEST_CASE("d=1, n=2") {
    auto c = build_certificate(QuotientSpec(1, 2));
    CHECK(c.verified());
    REQUIRE(c.entries.size() == 3);
    CHECK(c.invariant_dimension == 3);
    CHECK(c.entries[0].generator_op == build_pochhammer(1, 2).op);
    CHECK(c.entries[1].generator_op == build_pochhammer(1, 1).op * WeylOp::x(1, 0));
    CHECK(c.entries[2].generator_op == left1({{2, 0, 1}}));
    CHECK(c.entries[0].euler_weight == Rational(-1));
    CHECK(c.entries[1].euler_weight == Rational(-2));
    CHECK(c.entries[2].euler_weight == Rational(-3));
  }

  TEST_CASE("d=2, n=1") {
    auto c = build_certificate(QuotientSpec(2, 1));
    CHECK(c.verified());
    REQUIRE(c.entries.size() == 3);
    CHECK(c.entries[0].generator_op == build_pochhammer(2, 1).op);
    CHECK(c.entries[1].generator_op == WeylOp::x(2, 0));
    CHECK(c.entries[2].generator_op == WeylOp::x(2, 1));
    CHECK(c.entries[0].euler_weight == Rational(-2));
    CHECK(c.entries[1].euler_weight == Rational(-3));
    CHECK(c.entries[2].euler_weight == Rational(-3));
  }

  TEST_CASE("all checks on the grid") {
    for (std::size_t d = 1; d <= 3; ++d)
      for (unsigned n = 0; n <= 3; ++n) {
        QuotientSpec s(d, n);
        auto c = build_certificate(s);
        CAPTURE(d);
        CAPTURE(n);
        CHECK(c.verified());
        CHECK(c.entries.size() == expected_invariant_dimension(s));
        std::vector<std::string> names;
        for (const auto& chk : c.checks) names.push_back(chk.name);
        CHECK(names == std::vector<std::string>{"well_defined", "nonzero", "independent", "dimension_match", "euler_weights"});
        // per-layer count is the number of degree-j monomials
        for (unsigned j = 0; j <= n; ++j) {
          std::size_t count = 0;
          for (const auto& e : c.entries) count += e.layer == j;
          CHECK(count == monomials_of_degree(d, j).size());
        }
        for (const auto& e : c.entries) CHECK(e.euler_weight == -Rational(static_cast<long>(d + e.layer)));
      }
  }

  TEST_CASE("generator span equals the invariant space") {
    for (std::size_t d = 1; d <= 2; ++d)
      for (unsigned n = 0; n <= 3; ++n) {
        QuotientSpec s(d, n);
        auto c = build_certificate(s);
        auto inv = invariants_auto(s);
        std::vector<QuotientClass> all = inv.vectors;
        for (const auto& e : c.entries) all.push_back(e.m_class);
        CHECK(classes_rank(all) == c.entries.size());
      }
  }

  TEST_CASE("euler check examples") {
    auto c = build_certificate(QuotientSpec(1, 1));
    CHECK(euler_check(c.entries[0], c.spec) == Rational(-1));
    CHECK(euler_check(c.entries[1], c.spec) == Rational(-2));
    auto c2 = build_certificate(QuotientSpec(2, 0));
    CHECK(euler_check(c2.entries[0], c2.spec) == Rational(-2));
  }
}

TEST_SUITE("psi") {
  TEST_CASE("apply examples") {
    QuotientSpec s(1, 1);
    auto c = build_certificate(s);
    Components one{{mi({0}), WeylOp::constant(1, 1)}};
    CHECK(psi_apply(one, c) == reduce_mod_mpow(left1({{1, 1, 1}, {0, 0, 2}}), s));
    Components second{{mi({1}), WeylOp::constant(1, 1)}};
    CHECK(psi_apply(second, c) == reduce_mod_mpow(WeylOp::x(1, 0), s));
    Components mixed{{mi({0}), d_poly({{1, 1}})}, {mi({1}), d_poly({{2, -1}})}};
    CHECK(psi_apply(mixed, c) == reduce_mod_mpow(WeylOp::d(1, 0), s));
  }

  TEST_CASE("apply kills D m in each component") {
    auto rng = seeded(30);
    for (int k = 0; k < 30; ++k) {
      std::size_t d = 1 + k % 2;
      auto c = build_certificate(QuotientSpec(d, 2));
      Components comps;
      for (const auto& e : c.entries) comps.emplace(e.alpha, random_op(rng, d, 2, 2, 2) * WeylOp::x(d, k % d));
      CHECK(psi_apply(comps, c).is_zero());
    }
  }

  TEST_CASE("apply rejects bad keys") {
    auto c = build_certificate(QuotientSpec(1, 1));
    Components bad{{mi({2}), WeylOp::constant(1, 1)}};
    CHECK_THROWS_AS(psi_apply(bad, c), std::invalid_argument);
  }

  TEST_CASE("invert examples") {
    QuotientSpec s(1, 1);
    auto c = build_certificate(s);

    auto a = psi_invert(c.entries[0].m_class, c);
    CHECK(a.at(mi({0})) == WeylOp::constant(1, 1));
    CHECK(a.at(mi({1})).is_zero());

    auto b = psi_invert(reduce_mod_mpow(WeylOp::constant(1, 1), s), c);
    CHECK(b.at(mi({0})) == WeylOp::constant(1, 1));
    CHECK(b.at(mi({1})) == d_poly({{1, -1}}));

    auto e = psi_invert(reduce_mod_mpow(WeylOp::d(1, 0), s), c);
    CHECK(e.at(mi({0})) == d_poly({{1, 1}}));
    CHECK(e.at(mi({1})) == d_poly({{2, -1}}));
  }

  TEST_CASE("round trips") {
    auto rng = seeded(31);
    for (std::size_t d = 1; d <= 3; ++d)
      for (unsigned n = 0; n <= 2; ++n) {
        QuotientSpec s(d, n);
        auto c = build_certificate(s);
        for (int k = 0; k < 20; ++k) {
          QuotientClass v = random_class(rng, s, 4, 4);
          auto comps = psi_invert(v, c);
          for (const auto& [alpha, p] : comps) CHECK(p.x_degree() <= 0);
          CHECK(psi_apply(comps, c) == v);
        }
      }
  }

  TEST_CASE("invert rejects a foreign class") {
    auto c = build_certificate(QuotientSpec(1, 1));
    CHECK_THROWS_AS(psi_invert(reduce_mod_mpow(WeylOp::constant(1, 1), QuotientSpec(1, 2)), c), std::invalid_argument);
  }
}

TEST_SUITE("cyclic") {
  TEST_CASE("single summand") {
    auto r = cyclic_generator({QuotientSpec(1, 0)});
    CHECK(r.verified());
    REQUIRE(r.generator.size() == 1);
    CHECK(r.generator[0] == reduce_mod_mpow(WeylOp::constant(1, 1), QuotientSpec(1, 0)));
  }

  TEST_CASE("two copies of D/Dx") {
    QuotientSpec s(1, 0);
    auto r = cyclic_generator({s, s});
    CHECK(r.verified());
    REQUIRE(r.generator.size() == 2);
    CHECK(r.generator[0] == reduce_mod_mpow(WeylOp::d(1, 0), s));
    CHECK(r.generator[1] == reduce_mod_mpow(WeylOp::constant(1, 1), s));
  }

  TEST_CASE("recovery operators reproduce the unit vectors") {
    std::vector<std::vector<QuotientSpec>> cases = {
        {QuotientSpec(1, 0), QuotientSpec(1, 1)},
        {QuotientSpec(1, 1), QuotientSpec(1, 0), QuotientSpec(1, 0)},
        {QuotientSpec(2, 0), QuotientSpec(2, 0)},
    };
    for (const auto& summands : cases) {
      auto r = cyclic_generator(summands);
      CHECK(r.verified());
      REQUIRE(r.recovery.size() == summands.size());
      for (std::size_t k = 0; k < summands.size(); ++k) {
        auto image = act_on_sum(r.recovery[k], r.generator);
        for (std::size_t j = 0; j < summands.size(); ++j) {
          auto unit = reduce_mod_mpow(WeylOp::constant(summands[j].dim, j == k ? 1 : 0), summands[j]);
          CHECK(image[j] == unit);
        }
      }
    }
  }

  TEST_CASE("empty input") { CHECK_THROWS_AS(cyclic_generator({}), std::invalid_argument); }
}
