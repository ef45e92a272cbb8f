#include "lucasx/oracles.hpp"

#include <map>
#include <stdexcept>

namespace lucasx::oracles {

Integer central_binomial(unsigned long n) { return binomial(2 * n, n); }

Integer catalan(unsigned long n) {
  Integer c = central_binomial(n);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 1);
  return c;
}

Integer central_trinomial(const Integer& a, const Integer& b, const Integer& c, unsigned long n) {
  Integer sum = 0;
  Integer ac = a * c;
  for (unsigned long k = 0; 2 * k <= n; ++k) {
    sum += binomial(n, 2 * k) * binomial(2 * k, k) * power(ac, k) * power(b, n - 2 * k);
  }
  return sum;
}

Integer apery(unsigned long n) {
  Integer sum = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    Integer t = binomial(n, k) * binomial(n + k, k);
    sum += t * t;
  }
  return sum;
}

Integer abelian_squares(unsigned s, unsigned long n) {
  if (s == 0) throw std::invalid_argument("abelian_squares: s must be positive");
  // row[j] = A_t(j) for the current number of letters t.
  std::vector<Integer> row(n + 1, Integer(1));
  for (unsigned t = 2; t <= s; ++t) {
    std::vector<Integer> next(n + 1);
    for (unsigned long j = 0; j <= n; ++j) {
      Integer acc = 0;
      for (unsigned long k = 0; k <= j; ++k) {
        Integer b = binomial(j, k);
        acc += b * b * row[j - k];
      }
      next[j] = acc;
    }
    row = std::move(next);
  }
  return row[n];
}

Integer S(unsigned long n, SVariant variant) {
  Integer sum = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    if (variant == SVariant::squared) {
      if (2 * k > n) break;
      Integer b = binomial(n, k);
      sum += b * b * binomial(n - k, k);
    } else {
      if (2 * k > n) break;
      sum += binomial(n, k) * binomial(n, 2 * k) * binomial(2 * k, k);
    }
  }
  return sum;
}

Integer D(unsigned long n) {
  unsigned long h = n / 2;
  unsigned long q = n / 4;
  Integer v = binomial(n, h) * binomial(h, q);
  return ((h + q) % 2 == 0) ? v : Integer(-v);
}

Integer zagierE(unsigned long n) {
  Integer sum = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    sum += binomial(n, k) * binomial(2 * k, k) * binomial(2 * (n - k), n - k);
  }
  return sum;
}

Integer zagierE_shift(unsigned long n) {
  Integer num = zagierE(n + 1) - 4 * zagierE(n);
  if (!mpz_divisible_ui_p(num.get_mpz_t(), 4)) {
    throw std::logic_error("zagierE_shift: E(n+1) - 4E(n) is not divisible by 4");
  }
  Integer out;
  mpz_divexact_ui(out.get_mpz_t(), num.get_mpz_t(), 4);
  return out;
}

Integer lambda_family(const Integer& lambda, unsigned long n, LambdaWhich which) {
  Integer sum = 0;
  if (which == LambdaWhich::A) {
    for (unsigned long k = 1; k <= n; k += 2) sum += power(lambda, n - k) * binomial(n, k) * D(k);
    return sum;
  }
  for (unsigned long k = 0; 4 * k <= n; ++k) {
    Integer t = power(lambda, n - 4 * k) * binomial(n, 4 * k) * binomial(4 * k, 2 * k) *
                binomial(2 * k, k);
    sum += (k % 2 == 0) ? t : Integer(-t);
  }
  return sum;
}

namespace {

const std::map<std::string, Oracle, std::less<>>& registry() {
  static const std::map<std::string, Oracle, std::less<>> table = {
      {"catalan", [](unsigned long n) { return catalan(n); }},
      {"central-binomial", [](unsigned long n) { return central_binomial(n); }},
      {"central-trinomial",
       [](unsigned long n) { return central_trinomial(1, 1, 1, n); }},
      {"apery", [](unsigned long n) { return apery(n); }},
      {"abelian-squares-2", [](unsigned long n) { return abelian_squares(2, n); }},
      {"abelian-squares-3", [](unsigned long n) { return abelian_squares(3, n); }},
      {"S", [](unsigned long n) { return S(n); }},
      {"D", [](unsigned long n) { return D(n); }},
      {"zagier-E", [](unsigned long n) { return zagierE(n); }},
      {"zagier-E-shift", [](unsigned long n) { return zagierE_shift(n); }},
      {"one", [](unsigned long) { return Integer(1); }},
  };
  return table;
}

}  // namespace

std::optional<Oracle> named(std::string_view name) {
  const auto& table = registry();
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

}  // namespace lucasx::oracles
