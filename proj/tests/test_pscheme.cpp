#include "doctest.h"
#include "gen.hpp"
#include "lucasx/congruence.hpp"
#include "lucasx/oracles.hpp"
#include "lucasx/parser.hpp"
#include "lucasx/pscheme.hpp"

using namespace lucasx;

namespace {

CtSpec spec(const char* P, const char* Q, const char* vars) {
  auto v = parse_variable_list(vars);
  return CtSpec(parse(P, v), parse(Q, v));
}

LinearPScheme catalan3() {
  LinearPScheme s;
  s.p = 3;
  s.r = 1;
  s.states = 2;
  s.matrices = {{{0, 1}, {0, 1}}, {{0, 1}, {0, 2}}, {{1, 1}, {0, 0}}};
  s.init = {1, 1};
  return s;
}

CtSpec catalan_spec() { return spec("x^-1 + 2 + x", "1 - x", "x"); }

LinearPScheme random_scheme(testgen::Gen& g) {
  LinearPScheme s;
  s.p = g.pick(std::vector<std::uint64_t>{2, 3, 5, 7});
  s.r = static_cast<unsigned>(g.uniform(1, 2));
  s.states = static_cast<std::size_t>(g.uniform(1, 4));
  std::uint64_t m = s.modulus();
  s.matrices.assign(s.p, std::vector<std::vector<Residue>>(s.states, std::vector<Residue>(s.states)));
  for (auto& mk : s.matrices)
    for (auto& row : mk)
      for (auto& v : row) v = g.uniform_u(0, m - 1);
  for (std::size_t i = 0; i < s.states; ++i) s.init.push_back(g.uniform_u(0, m - 1));
  return s;
}

}  // namespace

TEST_SUITE("pscheme") {
  TEST_CASE("evaluate the Catalan scheme") {
    auto s = catalan3();
    CHECK_NOTHROW(s.validate());
    CHECK(evaluate(s, 5) == 0);
    CHECK(evaluate(s, 0) == 1);
    for (unsigned long n = 0; n <= 400; ++n) CHECK(evaluate(s, n) == mod_canonical(oracles::catalan(n), 3));
    CHECK(verify(s, catalan_spec(), 2186).passed());
  }

  TEST_CASE("validate") {
    auto s = catalan3();
    s.matrices[1][0][0] = 3;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = catalan3();
    s.init.pop_back();
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = catalan3();
    s.matrices.pop_back();
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  }

  TEST_CASE("from_lucas_table") {
    std::vector<Residue> cb3{1, 2, 0};
    auto s = from_lucas_table(cb3, 3);
    CHECK(s.states == 1);
    CHECK(s.matrices == std::vector<std::vector<std::vector<Residue>>>{{{1}}, {{2}}, {{0}}});
    CHECK(s.init == std::vector<Residue>{1});
    CHECK(evaluate(s, 4) == 1);
    std::vector<Residue> ones{1, 1, 1, 1, 1};
    auto o = from_lucas_table(ones, 5);
    for (const auto& mk : o.matrices) CHECK(mk[0][0] == 1);
    std::vector<Residue> bad{0, 1, 1};
    CHECK_THROWS_AS(from_lucas_table(bad, 3), std::invalid_argument);

    auto cb = spec("x^-1 + 2 + x", "1", "x");
    auto w = ct_sequence(cb, 6, Modulus(7));
    std::vector<Residue> base;
    for (std::size_t k = 0; k < 7; ++k) base.push_back(w.residue(k, 7));
    CHECK(verify(from_lucas_table(base, 7), cb, 2400).passed());
  }

  TEST_CASE("perturbed scheme fails at the smallest n") {
    auto s = catalan3();
    s.matrices[2][0][0] = 2;
    auto rep = verify(s, catalan_spec(), 500);
    REQUIRE(rep.verdict == Verdict::fail);
    // M_2 first matters at n = 2.
    CHECK(rep.counterexample->indices == std::vector<std::pair<std::string, std::int64_t>>{{"n", 2}});
    CHECK(rep.counterexample->expected == 2);
    CHECK(rep.counterexample->actual == 0);
  }

  TEST_CASE("two_state_from_glc") {
    auto cat = two_state_from_glc(parse("x^-1 + 2 + x", {"x"}), parse("1 - x", {"x"}), 3);
    CHECK(cat.states == 2);
    CHECK(verify(cat, catalan_spec(), 1000).passed());
    for (unsigned long n = 0; n <= 1000; ++n) CHECK(evaluate(cat, n) == evaluate(catalan3(), n));

    auto one = two_state_from_glc(parse("x^-1 + 1 + x", {"x"}), parse("1", {"x"}), 5);
    for (std::size_t k = 0; k < 5; ++k) CHECK(one.matrices[k][0] == one.matrices[k][1]);
    auto w = ct_sequence(spec("x^-1 + 1 + x", "1", "x"), 4, Modulus(5));
    std::vector<Residue> base;
    for (std::size_t k = 0; k < 5; ++k) base.push_back(w.residue(k, 5));
    for (std::uint64_t n = 0; n <= 2000; ++n) CHECK(evaluate(one, n) == lucas_predict(base, n));

    auto XY = [](const char* s) { return parse(s, {"x", "y"}); };
    auto z = two_state_from_glc(XY("4 + x + y + x^-1 + y^-1"), XY("x"), 5);
    CHECK(verify(z, CtSpec(XY("4 + x + y + x^-1 + y^-1"), XY("x")), 1000).passed());

    CHECK_THROWS_AS(two_state_from_glc(XY("x + y + y^-1 + x^-1*y + 2*x*y"), XY("x"), 5), HypothesisError);
  }

  TEST_CASE("synthesize") {
    auto cat = synthesize(catalan_spec(), 3, 1);
    CHECK(cat.states <= 3);
    CHECK(verify(cat, catalan_spec(), 2000).passed());
    CHECK(cat.labels.at(0) == "1 + 2*x");  // 1 - x mod 3
    CHECK(scheme_dump(cat) ==
          "{\"p\":3,\"r\":1,\"states\":3,\"matrices\":[[[0,1,0],[0,1,0],[0,2,0]],[[0,1,0],[0,2,0],"
          "[0,0,0]],[[0,0,1],[0,0,0],[0,0,1]]],\"init\":[1,1,2],\"labels\":[\"1 + 2*x\",\"1\","
          "\"2 + 2*x\"]}\n");

    auto cb = synthesize(spec("x^-1 + 2 + x", "1", "x"), 5, 1);
    CHECK(cb.states == 1);

    auto ap = spec("(x+y)*(z+1)*(x+y+z)*(y+z+1)/(x*y*z)", "1", "x,y,z");
    auto aps = synthesize(ap, 2, 1);
    CHECK(verify(aps, ap, 40).passed());
    // Powering P^256 in three variables is out of reach; use the binomial sum.
    for (unsigned long n = 0; n <= 256; ++n) CHECK(evaluate(aps, n) == mod_canonical(oracles::apery(n), 2));

    auto r2 = synthesize(catalan_spec(), 3, 2);
    CHECK(r2.modulus() == 9);
    CHECK(verify(r2, catalan_spec(), 500).passed());

    CHECK_THROWS_AS(synthesize(catalan_spec(), 3, 1, 2), std::length_error);
    CHECK_THROWS_AS(synthesize(catalan_spec(), 4, 1), std::invalid_argument);
  }

  TEST_CASE("single-state reducibility") {
    auto cat = is_single_state_reducible(catalan_spec(), 3);
    CHECK_FALSE(cat.reducible);
    CHECK_FALSE(cat.witness.has_value());
    CHECK(cat.report.verdict == Verdict::fail);

    auto tri = is_single_state_reducible(spec("x^-1 + 1 + x", "1", "x"), 5);
    CHECK(tri.reducible);
    REQUIRE(tri.witness.has_value());
    CHECK(tri.witness->states == 1);

    auto S = is_single_state_reducible(spec("(1 + x)*(1 + y + 1/(x*y))", "1", "x,y"), 5, 300);
    CHECK(S.reducible);

    CHECK_FALSE(is_single_state_reducible(catalan3()).reducible);
    CHECK(is_single_state_reducible(*tri.witness).reducible);
    CHECK_THROWS_AS(is_single_state_reducible(spec("x^-1 + 2 + x", "x", "x"), 3), std::invalid_argument);
  }

  TEST_CASE("JSON round trip") {
    auto s = catalan3();
    s.labels = {"A", "B"};
    std::string text = scheme_dump(s);
    CHECK(text.back() == '\n');
    CHECK(scheme_parse(text) == s);
    CHECK(scheme_dump(scheme_parse(text)) == text);
    CHECK_THROWS_AS(scheme_parse("{\"p\":3}"), std::invalid_argument);
    CHECK_THROWS_AS(scheme_parse("not json"), std::invalid_argument);
    CHECK_THROWS_AS(scheme_parse("{\"p\":3,\"r\":1,\"states\":1,\"matrices\":[[[1]],[[1]],[[5]]],\"init\":[1]}"),
                    std::invalid_argument);

    testgen::Gen g(2121);
    for (int i = 0; i < 200; ++i) {
      auto r = random_scheme(g);
      CHECK(scheme_parse(scheme_dump(r)) == r);
    }
  }

  TEST_CASE("property: digit-compositional evaluation") {
    testgen::Gen g(2222);
    for (int i = 0; i < 250; ++i) {
      auto s = random_scheme(g);
      std::uint64_t m = s.modulus();
      std::uint64_t q = g.uniform_u(0, 100000);
      std::uint64_t k = g.uniform_u(0, s.p - 1);
      std::uint64_t n = s.p * q + k;
      auto vq = evaluate_states(s, q);
      auto vn = evaluate_states(s, n);
      if (n == 0) continue;  // n = 0 returns c
      for (std::size_t row = 0; row < s.states; ++row) {
        Residue acc = 0;
        for (std::size_t j = 0; j < s.states; ++j) acc = (acc + mul_mod(s.matrices[k][row][j], vq[j], m)) % m;
        CHECK(vn[row] == acc);
      }
      CHECK(evaluate(s, n) == vn[0]);
    }
  }

  TEST_CASE("property: one-state schemes reproduce lucas_predict") {
    testgen::Gen g(2323);
    for (int i = 0; i < 200; ++i) {
      std::uint64_t p = g.pick(std::vector<std::uint64_t>{2, 3, 5, 7, 11});
      std::vector<Residue> base{1};
      for (std::uint64_t k = 1; k < p; ++k) base.push_back(g.uniform_u(0, p - 1));
      auto s = from_lucas_table(base, p);
      for (int t = 0; t < 50; ++t) {
        std::uint64_t n = g.uniform_u(0, 10000);
        CHECK(evaluate(s, n) == lucas_predict(base, n));
      }
    }
  }

  TEST_CASE("property: synthesized schemes match ct sequences") {
    const std::vector<CtSpec> specs = {
        catalan_spec(),
        spec("x^-1 + 2 + x", "1", "x"),
        spec("x^-1 + 1 + x", "1", "x"),
        spec("x^-1 + 1 + x", "x", "x"),
        spec("x + y + x^-1 - y^-1", "1 + x + x*y", "x,y"),
        spec("4 + x + y + x^-1 + y^-1", "x", "x,y"),
        spec("(1 + x)*(1 + y + 1/(x*y))", "1", "x,y"),
    };
    int cases = 0;
    for (const auto& s : specs) {
      for (std::uint64_t p : {2, 3, 5}) {
        for (unsigned r : {1u, 2u}) {
          auto sch = synthesize(s, p, r, 400);
          auto rep = verify(sch, s, 500);
          CHECK(rep.passed());
          cases += 1;
        }
      }
    }
    CHECK(cases == 42);
  }

  TEST_CASE("property: two-state schemes agree with glc_simple_verify") {
    testgen::Gen g(2424);
    int checked = 0, applicable = 0;
    while (checked < 200) {
      LaurentPoly P = g.dense_box(2, -1, 1, 2);
      if (P.is_zero()) continue;
      LaurentPoly Q(2);
      for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j) Q.add_term(Monomial{i, j}, Integer(g.uniform(-2, 2)));
      if (Q.is_zero()) continue;
      std::uint64_t p = g.pick(std::vector<std::uint64_t>{3, 5, 7});
      ++checked;
      auto rep = glc_simple_verify(P, Q, p, 40);
      if (!rep.passed()) continue;
      ++applicable;
      auto sch = two_state_from_glc(P, Q, p);
      CHECK(verify(sch, CtSpec(P, Q), p * 40 + p - 1).passed());
    }
    CHECK(applicable > 0);
  }
}
