// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lucasx/cli.hpp"
#include "lucasx/congruence.hpp"
#include "lucasx/oracles.hpp"
#include "lucasx/parser.hpp"
#include "lucasx/pscheme.hpp"

using namespace lucasx;

namespace {

// Collects the first few problems of a criterion.
struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (notes.size() < 5) notes.push_back(what);
  }
};

CtSpec spec(const std::string& P, const std::string& Q, const std::string& vars) {
  auto v = parse_variable_list(vars);
  return CtSpec(parse(P, v), parse(Q, v));
}

int cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run_args(args, out, err);
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// --------------------------------------------------------------------------

Outcome catalan_scheme() {
  Outcome o;
  LinearPScheme lit;
  lit.p = 3;
  lit.states = 2;
  lit.matrices = {{{0, 1}, {0, 1}}, {{0, 1}, {0, 2}}, {{1, 1}, {0, 0}}};
  lit.init = {1, 1};
  CtSpec cat = spec("x^-1 + 2 + x", "1 - x", "x");
  auto w = ct_sequence(cat, 2186, Modulus(3));
  for (std::uint64_t n = 0; n <= 2186; ++n) {
    if (evaluate(lit, n) != w.residue(n, 3)) {
      o.require(false, "literal scheme differs at n = " + std::to_string(n));
      break;
    }
  }
  o.require(verify(lit, cat, 2186).passed(), "verify(literal, 2186)");
  auto syn = synthesize(cat, 3, 1);
  o.require(syn.states <= 3, "synthesized state count " + std::to_string(syn.states));
  o.require(verify(syn, cat, 2000).passed(), "verify(synthesized, 2000)");
  return o;
}

Outcome lucas_sweeps() {
  Outcome o;
  const std::string small = "2,3,5,7,11";
  o.require(cli({"lucas", "--vars", "x", "--P", "x^-1+2+x", "--primes", small, "--n-max", "2000"}) == 0,
            "central binomial");
  o.require(cli({"lucas", "--vars", "x", "--P", "x^-1+1+x", "--primes", small, "--n-max", "2000"}) == 0,
            "central trinomial");
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int c = 0; c <= 4; ++c) {
        std::string tag = "trinomial (" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")";
        if (a == 0 && b == 0 && c == 0) {
          // P = 0: A = 1, 0, 0, ... from the closed form.
          SequenceWindow w;
          for (unsigned long n = 0; n <= 200; ++n) w.values.push_back(oracles::central_trinomial(0, 0, 0, n));
          for (std::uint64_t p : {2, 3, 5}) o.require(lucas_verify(w, p, 200).passed(), tag);
          continue;
        }
        std::string P = std::to_string(a) + "/x + " + std::to_string(b) + " + " + std::to_string(c) + "*x";
        o.require(cli({"lucas", "--vars", "x", "--P", P, "--primes", "2,3,5", "--n-max", "200"}) == 0, tag);
      }
    }
  }
  o.require(cli({"lucas", "--vars", "x", "--P", "(1+x)*(1+1/x)", "--primes", "2,3,5", "--n-max", "200"}) == 0,
            "abelian squares s = 2");
  o.require(cli({"lucas", "--vars", "x,y", "--P", "(1+x+y)*(1+1/x+1/y)", "--primes", "2,3,5", "--n-max",
                 "200"}) == 0,
            "abelian squares s = 3");
  o.require(cli({"lucas", "--vars", "x,y,z", "--P", "(x+y)*(z+1)*(x+y+z)*(y+z+1)/(x*y*z)", "--primes", "2,3,5",
                 "--n-max", "150"}) == 0,
            "Apery");
  o.require(cli({"lucas", "--vars", "x,y", "--P", "(1+x)*(1+y+1/(x*y))", "--primes", "2,3,5,7", "--n-max",
                 "500"}) == 0,
            "S");
  // The constant-term forms really are the named sequences.
  o.require(cross_check(spec("(1+x)*(1+1/x)", "1", "x"), "abelian-squares-2",
                        *oracles::named("abelian-squares-2"), 60).passed(), "abelian-2 cross check");
  o.require(cross_check(spec("(1+x+y)*(1+1/x+1/y)", "1", "x,y"), "abelian-squares-3",
                        *oracles::named("abelian-squares-3"), 40).passed(), "abelian-3 cross check");
  o.require(cross_check(spec("(1+x)*(1+y+1/(x*y))", "1", "x,y"), "S", *oracles::named("S"), 60).passed(),
            "S cross check");
  o.require(cross_check(spec("(x+y)*(z+1)*(x+y+z)*(y+z+1)/(x*y*z)", "1", "x,y,z"), "apery",
                        *oracles::named("apery"), 30).passed(), "Apery cross check");
  return o;
}

Outcome trinomial_closed_forms() {
  Outcome o;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    Modulus mod(p);
    for (int a = 0; a < static_cast<int>(p); ++a) {
      for (int b = 0; b < static_cast<int>(p); ++b) {
        for (int c = 0; c < static_cast<int>(p); ++c) {
          LaurentPoly P(1);
          P.add_term(Monomial{-1}, a);
          P.add_term(Monomial{0}, b);
          P.add_term(Monomial{1}, c);
          LaurentPoly f = pow(P, p - 1, mod);
          std::string tag = "p=" + std::to_string(p) + " (" + std::to_string(a) + "," + std::to_string(b) +
                            "," + std::to_string(c) + ")";
          o.require(trinomial_pm1(a, b, c, p) == mod_canonical(coeff_at(f, Monomial{0}), p), "ct " + tag);
          o.require(trinomial_pm1_x(a, b, c, p) == mod_canonical(coeff_at(f, Monomial{-1}), p), "ct*x " + tag);
        }
      }
    }
  }
  return o;
}

Outcome glc_fuzz() {
  Outcome o;
  std::mt19937_64 rng(20240501);
  auto coef = [&] { return Integer(std::uniform_int_distribution<int>(-3, 3)(rng)); };
  const std::vector<std::uint64_t> primes{2, 3, 5, 7};
  int cases = 0;
  while (cases < 500) {
    LaurentPoly P(2), Q(2);
    for (int i = -1; i <= 1; ++i)
      for (int j = -1; j <= 1; ++j) P.add_term(Monomial{i, j}, coef());
    for (int i = 0; i <= 1; ++i)
      for (int j = 0; j <= 1; ++j) Q.add_term(Monomial{i, j}, coef());
    std::uint64_t p = primes[std::uniform_int_distribution<std::size_t>(0, 3)(rng)];
    if (P.is_zero()) continue;
    ++cases;
    auto rep = glc_verify(P, Q, p, 100);
    o.require(rep.passed(), "P = " + to_canonical_string(P) + ", Q = " + to_canonical_string(Q) +
                                ", p = " + std::to_string(p));
  }
  return o;
}

Outcome example_d() {
  Outcome o;
  auto v = parse_variable_list("x,y");
  LaurentPoly P = parse("x + y + x^-1 - y^-1", v);
  o.require(cross_check(CtSpec(P, parse("1 + x + x*y", v)), "D", oracles::D, 100).passed(), "D closed form");
  auto at = ct_sequence(CtSpec(P, parse("x", v)), 100);
  auto b = ct_sequence(CtSpec(P), 100);
  for (unsigned long n = 0; n <= 100; ++n) {
    Integer d = oracles::D(n);
    o.require(at[n] == (n % 2 == 1 ? d : Integer(0)), "Atilde at n = " + std::to_string(n));
    o.require(b[n] == (n % 4 == 0 ? d : Integer(0)), "B at n = " + std::to_string(n));
  }
  for (std::uint64_t p : {3, 5, 7}) {
    for (std::uint64_t n = 0; n <= 100; ++n) {
      for (std::uint64_t k = 0; k < p; ++k) {
        Integer lhs = oracles::D(p * n + k);
        Integer rhs = 0;
        if (n % 4 == 0) rhs = oracles::D(n) * oracles::D(k);
        else if (n % 2 == 1 && k == p - 1) rhs = oracles::D(n);
        o.require(mod_canonical(lhs, p) == mod_canonical(rhs, p),
                  "three-case congruence p=" + std::to_string(p) + " n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
      }
    }
    o.require(glc_verify(P, parse("1 + x + x*y", v), p, 100).passed(), "glc_verify p=" + std::to_string(p));
  }
  return o;
}

Outcome example_zagier() {
  Outcome o;
  auto v = parse_variable_list("x,y");
  LaurentPoly P = parse("4 + x + y + x^-1 + y^-1", v);
  LaurentPoly X = parse("x", v);
  auto a = ct_sequence(CtSpec(P, X), 201);
  const std::vector<long> start{0, 1, 8, 57, 400, 2820, 20064, 144137};
  for (std::size_t n = 0; n < start.size(); ++n) o.require(a[n] == start[n], "A(" + std::to_string(n) + ")");
  auto b = ct_sequence(CtSpec(P), 201);
  for (std::size_t n = 0; n <= 200; ++n) {
    o.require(4 * a[n] == b[n + 1] - 4 * b[n], "shift identity at n = " + std::to_string(n));
    o.require(b[n] == oracles::zagierE(n), "E at n = " + std::to_string(n));
  }
  for (std::uint64_t p : {3, 5, 7}) {
    o.require(glc_simple_verify(P, X, p, 100).passed(), "glc_simple p=" + std::to_string(p));
    o.require(shift_combination_check(CtSpec(P), mpq_class(-1), mpq_class(1, 4), p, 100).passed(),
              "shift combination p=" + std::to_string(p));
  }
  return o;
}

Outcome lambda_control() {
  Outcome o;
  std::vector<Integer> A, B;
  for (unsigned long n = 0; n <= 12; ++n) {
    A.push_back(oracles::lambda_family(1, n, oracles::LambdaWhich::A));
    B.push_back(oracles::lambda_family(1, n, oracles::LambdaWhich::B));
  }
  auto v = parse_variable_list("x,y");
  LaurentPoly P = parse("1 + x + y + x^-1 - y^-1", v);
  auto ca = ct_sequence(CtSpec(P, parse("x", v)), 11);
  auto cb = ct_sequence(CtSpec(P), 11);
  for (std::size_t n = 0; n <= 11; ++n) {
    o.require(ca[n] == A[n] && cb[n] == B[n], "lambda sums vs ct at n = " + std::to_string(n));
  }
  o.require(!fit_shift_combination(A, B, 10).has_value(), "a rational (alpha, beta) fit exists");
  return o;
}

Outcome catalan_stack() {
  Outcome o;
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t n = 0; n <= 10000; ++n) {
      Residue d = catalan_direct_mod(n, p);
      bool same = catalan_by_steps(n, p) == d && catalan_digit_formula(n, p) == d;
      if (p == 3) same = same && catalan_mod3(n) == d;
      if (p == 5) same = same && catalan_mod5(n) == d;
      if (!same) {
        o.require(false, "p=" + std::to_string(p) + " n=" + std::to_string(n));
        break;
      }
    }
  }
  return o;
}

// C(n, k) mod p by Lucas' theorem for binomials.
Residue binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  Residue r = 1;
  while (n > 0 || k > 0) {
    std::uint64_t a = n % p, b = k % p;
    if (b > a) return 0;
    r = r * mod_canonical(binomial(a, b), p) % p;
    n /= p;
    k /= p;
  }
  return r;
}

// sum_k C(n,k)^2 C(n-k,k) mod p; the exact sum is too slow at n = 10^4.
Residue s_sum_mod(std::uint64_t n, std::uint64_t p) {
  Residue acc = 0;
  for (std::uint64_t k = 0; 2 * k <= n; ++k) {
    Residue c = binom_mod(n, k, p);
    acc = (acc + c * c % p * binom_mod(n - k, k, p)) % p;
  }
  return acc;
}

Outcome s_mod5_and_primes() {
  Outcome o;
  for (unsigned long n = 0; n <= 300; ++n) {
    o.require(s_sum_mod(n, 5) == mod_canonical(oracles::S(n), 5), "binomial sum mod 5 at n = " + std::to_string(n));
  }
  for (unsigned long n = 0; n <= 10000; ++n) {
    if (s_mod5(n) != s_sum_mod(n, 5)) {
      o.require(false, "S mod 5 at n = " + std::to_string(n));
      break;
    }
  }
  auto primes = never_divisible_primes(*oracles::named("S"), 100);
  o.require(primes == std::vector<std::uint64_t>{2, 3, 7, 11, 31, 41, 67, 73, 79, 89, 97},
            "never-dividing primes " + join(primes));
  return o;
}

Outcome dwork_spot() {
  Outcome o;
  for (const char* P : {"x^-1 + 2 + x", "x^-1 + 1 + x"}) {
    CtSpec s = spec(P, "1", "x");
    for (std::uint64_t p : {2, 3, 5}) {
      std::string tag = std::string(P) + " p=" + std::to_string(p);
      o.require(dwork_verify(s, p, 2, 40, 40).passed(), "r=2 " + tag);
      auto w = ct_sequence(s, p * 40 + 40);
      o.require(dwork_verify(w, p, 1, 40, 40).passed() == lucas_verify(w, p, p * 40 + 40).passed(),
                "r=1 vs Lucas " + tag);
    }
  }
  return o;
}

Outcome property_suites(const std::string& test_binary) {
  Outcome o;
  if (test_binary.empty()) {
    o.require(false, "path to the unit test binary not given");
    return o;
  }
  std::string cmd = "\"" + test_binary + "\" --test-case='property:*' --minimal > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  o.require(rc == 0, "property cases exited with status " + std::to_string(rc));
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0 = no runtime limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::string test_binary = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {1, "Catalan scheme fidelity", 5, catalan_scheme},
      {2, "Lucas sweeps", 60, lucas_sweeps},
      {3, "trinomial closed forms vs brute force", 30, trinomial_closed_forms},
      {4, "generalized Lucas fuzz (500 cases)", 120, glc_fuzz},
      {5, "D(n) end to end", 0, example_d},
      {6, "Zagier E and the shift identity", 0, example_zagier},
      {7, "lambda = 1 shift fit negative control", 0, lambda_control},
      {8, "Catalan congruence stack", 20, catalan_stack},
      {9, "S(n) mod 5 and never-dividing primes", 0, s_mod5_and_primes},
      {10, "Dwork spot check", 0, dwork_spot},
      {11, "property suites", 0, [&] { return property_suites(test_binary); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    }
    std::printf("criterion %2d: %s  %-42s %7.2f s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
