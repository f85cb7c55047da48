#pragma once

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "weyl/format.hpp"
#include "weyl/parser.hpp"
#include "weyl/quotient.hpp"
#include "weyl/univariate.hpp"

namespace weyl::testing {

// One variable: c x^a d^b.
struct Term1 {
  unsigned a, b;
  Rational c;
};

// Builds a d=1 operator straight from left-normal-form terms, bypassing the
// multiplication code so it can serve as an oracle.
inline WeylOp left1(std::initializer_list<Term1> terms) {
  WeylOp out(1);
  for (const auto& t : terms) {
    MultiIndex a(1), b(1);
    a[0] = t.a;
    b[0] = t.b;
    out.add_term(a, b, t.c);
  }
  return out;
}

// Same for right normal form: c d^b x^a.
inline RightForm right1(std::initializer_list<Term1> terms) {
  RightForm out(1);
  for (const auto& t : terms) {
    MultiIndex a(1), b(1);
    a[0] = t.a;
    b[0] = t.b;
    out.add_term(b, a, t.c);
  }
  return out;
}

inline MultiIndex mi(std::initializer_list<unsigned> e) {
  MultiIndex m(e.size());
  std::size_t i = 0;
  for (unsigned v : e) m[i++] = v;
  return m;
}

inline Poly t_poly(const std::string& text) { return parse_univariate(text); }

inline std::mt19937_64 seeded(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

}  // namespace weyl::testing

namespace doctest {
template <>
struct StringMaker<weyl::WeylOp> {
  static String convert(const weyl::WeylOp& p) { return weyl::print_canonical(p).c_str(); }
};
template <>
struct StringMaker<weyl::Rational> {
  static String convert(const weyl::Rational& r) { return r.to_string().c_str(); }
};
template <>
struct StringMaker<weyl::QuotientClass> {
  static String convert(const weyl::QuotientClass& v) { return weyl::print_class(v).c_str(); }
};
template <>
struct StringMaker<weyl::Poly> {
  static String convert(const weyl::Poly& p) { return p.to_string("t").c_str(); }
};
}  // namespace doctest
