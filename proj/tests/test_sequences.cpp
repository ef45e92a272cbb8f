#include "doctest.h"
#include "gen.hpp"
#include "lucasx/oracles.hpp"
#include "lucasx/parser.hpp"
#include "lucasx/sequences.hpp"

using namespace lucasx;

namespace {

CtSpec spec(const char* P, const char* Q, const char* vars) {
  auto v = parse_variable_list(vars);
  return CtSpec(parse(P, v), parse(Q, v));
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long v : xs) out.emplace_back(v);
  return out;
}

struct NamedSpec {
  const char* P;
  const char* Q;
  const char* vars;
  std::size_t n_max;
};

// Constant-term representations used throughout.
const NamedSpec kSpecs[] = {
    {"x^-1 + 2 + x", "1 - x", "x", 200},
    {"x^-1 + 2 + x", "1", "x", 200},
    {"x^-1 + 1 + x", "1", "x", 200},
    {"(1 + x)*(1 + 1/x)", "1", "x", 200},
    {"(1 + x + y)*(1 + 1/x + 1/y)", "1", "x,y", 200},
    {"(1 + x)*(1 + y + 1/(x*y))", "1", "x,y", 200},
    {"x + y + 1/x - 1/y", "1 + x + x*y", "x,y", 200},
    {"4 + x + y + x^-1 + y^-1", "x", "x,y", 200},
    {"(x+y)*(z+1)*(x+y+z)*(y+z+1)/(x*y*z)", "1", "x,y,z", 60},
};

}  // namespace

TEST_SUITE("sequences") {
  TEST_CASE("ct_sequence examples") {
    CHECK(ct_sequence(spec("x^-1 + 2 + x", "1 - x", "x"), 5).values == ints({1, 1, 2, 5, 14, 42}));
    CHECK(ct_sequence(spec("4 + x + y + x^-1 + y^-1", "x", "x,y"), 7).values ==
          ints({0, 1, 8, 57, 400, 2820, 20064, 144137}));
    CHECK(ct_sequence(spec("x^3 + 2/y", "1", "x,y"), 0).values == ints({1}));
    auto w = ct_sequence(spec("x^-1 + 1 + x", "1", "x"), 7, Modulus(5));
    CHECK(w.modulus == Modulus(5));
    CHECK(w.values == ints({1, 1, 3, 2, 4, 1, 1, 3}));
  }

  TEST_CASE("CtSpec invariants") {
    CHECK_THROWS_AS(CtSpec(LaurentPoly(1)), std::invalid_argument);
    CHECK_THROWS_AS(CtSpec(parse("x", {"x"}), parse("y", {"x", "y"})), std::invalid_argument);
  }

  TEST_CASE("memory cap") {
    PoweringLimits tight;
    tight.max_cells = 1000;
    CHECK_THROWS_AS(ct_sequence(spec("(x+y)*(z+1)*(x+y+z)*(y+z+1)/(x*y*z)", "1", "x,y,z"), 40,
                                std::nullopt, tight),
                    std::length_error);
  }

  TEST_CASE("shared powering") {
    auto P = parse("x^-1 + 2 + x", {"x"});
    std::vector<LaurentPoly> qs{parse("1", {"x"}), parse("1 - x", {"x"}), LaurentPoly(1)};
    std::vector<std::size_t> ns{10, 7, 3};
    auto ws = ct_sequences(P, qs, ns);
    CHECK(ws[0].values == ct_sequence(CtSpec(P), 10).values);
    CHECK(ws[1].values == ct_sequence(CtSpec(P, qs[1]), 7).values);
    CHECK(ws[2].values == ints({0, 0, 0, 0}));
  }

  TEST_CASE("oracle examples") {
    using namespace oracles;
    CHECK(central_binomial(4) == 70);
    CHECK(catalan(0) == 1);
    CHECK(catalan(5) == 42);
    CHECK(central_trinomial(1, 1, 1, 4) == 19);
    CHECK(central_trinomial(3, -2, 5, 0) == 1);
    CHECK(central_trinomial(1, 2, 1, 4) == 70);
    CHECK(apery(0) == 1);
    CHECK(apery(1) == 5);
    CHECK(apery(2) == 73);
    CHECK(abelian_squares(1, 9) == 1);
    CHECK(abelian_squares(2, 2) == 6);
    CHECK(abelian_squares(3, 1) == 3);
    CHECK(abelian_squares(3, 5) == 4653);
    CHECK(S(0) == 1);
    CHECK(S(0, SVariant::trinomial_style) == 1);
    CHECK(S(2) == 5);
    CHECK(S(2, SVariant::trinomial_style) == 5);
    CHECK(S(3) == S(3, SVariant::trinomial_style));
    CHECK(S(9) == 248365);
    CHECK(D(0) == 1);
    CHECK(D(2) == -2);
    CHECK(D(4) == -12);
    CHECK(D(11) == -4620);
    CHECK(zagierE(0) == 1);
    CHECK(zagierE(1) == 4);
    CHECK(zagierE_shift(0) == 0);
    CHECK(zagierE_shift(2) == 8);
    CHECK(lambda_family(17, 0, LambdaWhich::A) == 0);
    CHECK(lambda_family(0, 1, LambdaWhich::A) == 1);
    CHECK(lambda_family(1, 4, LambdaWhich::B) == -11);
    CHECK(lambda_family(1, 11, LambdaWhich::A) == 61886);
  }

  TEST_CASE("oracle registry") {
    for (const auto& name : oracles::names()) CHECK(oracles::named(name).has_value());
    CHECK_FALSE(oracles::named("no-such-sequence").has_value());
    CHECK((*oracles::named("S"))(4) == 85);
  }

  TEST_CASE("cross checks") {
    CHECK(cross_check(spec("x^-1 + 2 + x", "1 - x", "x"), "catalan", oracles::catalan, 100).passed());
    CHECK(cross_check(spec("x + y + 1/x - 1/y", "1 + x + x*y", "x,y"), "D", oracles::D, 60).passed());
    CHECK(cross_check(spec("x^-1 + 1 + x", "1", "x"), "central-trinomial",
                      *oracles::named("central-trinomial"), 100)
              .passed());
    CHECK(cross_check(spec("(1 + x)*(1 + 1/x)", "1", "x"), "abelian-squares-2",
                      *oracles::named("abelian-squares-2"), 60)
              .passed());
    CHECK(cross_check(spec("(1 + x + y)*(1 + 1/x + 1/y)", "1", "x,y"), "abelian-squares-3",
                      *oracles::named("abelian-squares-3"), 60)
              .passed());
    CHECK(cross_check(spec("(1 + x)*(1 + y + 1/(x*y))", "1", "x,y"), "S", *oracles::named("S"), 80)
              .passed());
    CHECK(cross_check(spec("(x+y)*(z+1)*(x+y+z)*(y+z+1)/(x*y*z)", "1", "x,y,z"), "apery",
                      oracles::apery, 30)
              .passed());
    CHECK(cross_check(spec("4 + x + y + x^-1 + y^-1", "x", "x,y"), "zagier-E-shift",
                      oracles::zagierE_shift, 80)
              .passed());
    CHECK(cross_check(spec("4 + x + y + x^-1 + y^-1", "1", "x,y"), "zagier-E", oracles::zagierE, 80)
              .passed());
    auto bad = cross_check(spec("x^-1 + 2 + x", "1 + x", "x"), "catalan", oracles::catalan, 50);
    REQUIRE(bad.verdict == Verdict::fail);
    CHECK(bad.counterexample->indices == std::vector<std::pair<std::string, std::int64_t>>{{"n", 1}});
    CHECK(bad.counterexample->expected == 1);
    CHECK(bad.counterexample->actual == 3);
  }

  TEST_CASE("property: modular windows reduce the exact ones") {
    const std::uint64_t moduli[] = {2, 9, 125, 2310, 65521, 4294967311ULL};
    for (const auto& s : kSpecs) {
      CtSpec sp = spec(s.P, s.Q, s.vars);
      auto exact = ct_sequence(sp, s.n_max);
      for (auto m : moduli) {
        auto w = ct_sequence(sp, s.n_max, Modulus(m));
        CHECK(w.values == exact.reduced(Modulus(m)).values);
      }
    }
  }

  TEST_CASE("property: random specs agree with naive powering") {
    testgen::Gen g(1111);
    for (int i = 0; i < 200; ++i) {
      std::size_t d = static_cast<std::size_t>(g.uniform(1, 3));
      LaurentPoly P = g.nonzero_poly(d, 5, -2, 2, 4);
      LaurentPoly Q = g.poly(d, 4, -3, 3, 4);
      std::size_t n_max = static_cast<std::size_t>(g.uniform(0, 9));
      auto w = ct_sequence(CtSpec(P, Q), n_max);
      std::uint64_t m = g.uniform_u(2, 50);
      auto wm = ct_sequence(CtSpec(P, Q), n_max, Modulus(m));
      LaurentPoly power = LaurentPoly::constant(d, 1);
      for (std::size_t n = 0; n <= n_max; ++n) {
        Integer expected = constant_term(power * Q);
        CHECK(w[n] == expected);
        CHECK(wm.residue(n, m) == mod_canonical(expected, m));
        power *= P;
      }
    }
  }

  TEST_CASE("D(n) companion sequences") {
    auto v = parse_variable_list("x,y");
    auto P = parse("x + y + 1/x - 1/y", v);
    std::vector<LaurentPoly> qs{parse("x", v), parse("1", v)};
    std::vector<std::size_t> ns{100, 100};
    auto ws = ct_sequences(P, qs, ns);
    for (unsigned long n = 0; n <= 100; ++n) {
      CHECK(ws[0][n] == (n % 2 == 1 ? oracles::D(n) : Integer(0)));
      CHECK(ws[1][n] == (n % 4 == 0 ? oracles::D(n) : Integer(0)));
    }
  }

  TEST_CASE("Zagier symmetry B(n+1) = 4(B(n) + A(n))") {
    auto v = parse_variable_list("x,y");
    auto P = parse("4 + x + y + x^-1 + y^-1", v);
    std::vector<LaurentPoly> qs{parse("x", v), parse("1", v)};
    std::vector<std::size_t> ns{100, 101};
    auto ws = ct_sequences(P, qs, ns);
    for (std::size_t n = 0; n <= 100; ++n) CHECK(ws[1][n + 1] == 4 * (ws[1][n] + ws[0][n]));
  }

  TEST_CASE("S variants agree") {
    for (unsigned long n = 0; n <= 200; ++n) {
      CHECK(oracles::S(n) == oracles::S(n, oracles::SVariant::trinomial_style));
    }
  }

  TEST_CASE("trinomial times x decomposition") {
    testgen::Gen g(1212);
    for (int i = 0; i < 20; ++i) {
      int a = g.uniform(-4, 4);
      int b = g.uniform(-4, 4);
      int c = g.uniform(1, 4) * (g.coin() ? 1 : -1);
      LaurentPoly P(1);
      P.add_term(Monomial{-1}, a);
      P.add_term(Monomial{0}, b);
      P.add_term(Monomial{1}, c);
      if (P.is_zero()) continue;
      auto w = ct_sequence(CtSpec(P, parse("x", {"x"})), 100);
      for (unsigned long n = 0; n <= 100; ++n) {
        Integer t1 = oracles::central_trinomial(a, b, c, n + 1);
        Integer t0 = oracles::central_trinomial(a, b, c, n);
        mpq_class rhs(t1 - b * t0, 2 * c);
        rhs.canonicalize();
        CHECK(mpq_class(w[n]) == rhs);
      }
    }
  }
}
