#include "lucasx/congruence.hpp"

#include <algorithm>
#include <stdexcept>

#include "lucasx/oracles.hpp"
#include "lucasx/parser.hpp"

namespace lucasx {

namespace {

Residue signed_residue(int s, std::uint64_t p) { return mod_canonical(std::int64_t{s}, p); }

Integer as_integer(Residue r) { return Integer(static_cast<unsigned long>(r)); }

std::int64_t idx(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// Lucas theorem for binomial coefficients mod p.
Residue binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  Residue acc = 1 % p;
  while (n > 0 || k > 0) {
    std::uint64_t ni = n % p;
    std::uint64_t ki = k % p;
    if (ki > ni) return 0;
    acc = mul_mod(acc, mod_canonical(binomial(ni, ki), p), p);
    n /= p;
    k /= p;
  }
  return acc;
}

Residue central_binomial_mod_p(std::uint64_t n, std::uint64_t p) {
  return binomial_mod_p(2 * n, n, p);
}

Residue small_catalan_mod(std::uint64_t k, std::uint64_t p) {
  return mod_canonical(oracles::catalan(k), p);
}

}  // namespace

// ---------------------------------------------------------------------------

std::uint64_t DigitExpansion::value() const {
  std::uint64_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return v;
}

DigitExpansion digits(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("digits: base must be at least 2");
  DigitExpansion e;
  e.p = p;
  while (n > 0) {
    e.digits.push_back(static_cast<unsigned>(n % p));
    n /= p;
  }
  return e;
}

std::uint64_t CatalanDigitSplit::value() const {
  std::uint64_t v = 0;
  for (std::size_t i = tail.size(); i-- > 0;) v = v * p + tail[i];
  for (unsigned i = 0; i < m; ++i) v = v * p + (p - 1);
  return v;
}

CatalanDigitSplit catalan_split(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("catalan_split: base must be at least 2");
  CatalanDigitSplit s;
  s.p = p;
  while (n % p == p - 1) {
    ++s.m;
    n /= p;
  }
  do {
    s.tail.push_back(static_cast<unsigned>(n % p));
    n /= p;
  } while (n > 0);
  return s;
}

// ---------------------------------------------------------------------------

Residue lucas_predict(std::span<const Residue> base, std::uint64_t n) {
  const std::uint64_t p = base.size();
  if (p < 2) throw std::invalid_argument("lucas_predict: need p >= 2 base values");
  Residue acc = 1 % p;
  while (n > 0) {
    acc = mul_mod(acc, base[n % p] % p, p);
    if (acc == 0) return 0;
    n /= p;
  }
  return acc;
}

CongruenceReport lucas_verify(const SequenceWindow& seq, std::uint64_t p, std::size_t n_max) {
  require_prime(p, "lucas_verify");
  if (seq.size() <= n_max) throw std::invalid_argument("lucas_verify: window too short");
  CongruenceReport report;
  report.kind = "lucas";
  report.params["p"] = p;
  report.params["n_max"] = n_max;
  Residue a0 = seq.residue(0, p);
  if (a0 != 1) {
    report.reason = "A(0) is not 1 modulo p";
    report.fail({{{"n", 0}}, 1, as_integer(a0)});
    return report;
  }
  for (std::uint64_t n = 0; p * n <= n_max; ++n) {
    Residue an = seq.residue(n, p);
    for (std::uint64_t k = 0; k < p && p * n + k <= n_max; ++k) {
      ++report.checked;
      Residue expected = mul_mod(an, seq.residue(k, p), p);
      Residue actual = seq.residue(p * n + k, p);
      if (expected != actual) {
        report.fail({{{"n", idx(n)}, {"k", idx(k)}}, as_integer(expected), as_integer(actual)});
        return report;
      }
    }
  }
  return report;
}

CongruenceReport lucas_verify(const CtSpec& spec, std::uint64_t p, std::size_t n_max) {
  require_prime(p, "lucas_verify");
  auto report = lucas_verify(ct_sequence(spec, n_max, Modulus(p)), p, n_max);
  report.params["P"] = to_canonical_string(spec.P);
  report.params["Q"] = to_canonical_string(spec.Q);
  return report;
}

CongruenceReport dwork_verify(const SequenceWindow& seq, std::uint64_t p, unsigned r,
                              std::size_t m_max, std::size_t n_max) {
  require_prime(p, "dwork_verify");
  if (r < 1) throw std::invalid_argument("dwork_verify: r must be at least 1");
  const std::uint64_t pr = prime_power(p, r);
  const std::uint64_t pr1 = pr / p;
  if (seq.size() <= pr * m_max + n_max) throw std::invalid_argument("dwork_verify: window too short");
  CongruenceReport report;
  report.kind = "dwork";
  report.params["p"] = p;
  report.params["r"] = r;
  report.params["m_max"] = m_max;
  report.params["n_max"] = n_max;
  for (std::uint64_t m = 0; m <= m_max; ++m) {
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      ++report.checked;
      Residue lhs = mul_mod(seq.residue(pr * m + n, pr), seq.residue(n / p, pr), pr);
      Residue rhs = mul_mod(seq.residue(pr1 * m + n / p, pr), seq.residue(n, pr), pr);
      if (lhs != rhs) {
        report.fail({{{"m", idx(m)}, {"n", idx(n)}}, as_integer(rhs), as_integer(lhs)});
        return report;
      }
    }
  }
  return report;
}

CongruenceReport dwork_verify(const CtSpec& spec, std::uint64_t p, unsigned r, std::size_t m_max,
                              std::size_t n_max) {
  require_prime(p, "dwork_verify");
  const std::uint64_t pr = prime_power(p, r);
  auto report = dwork_verify(ct_sequence(spec, pr * m_max + n_max, Modulus(pr)), p, r, m_max, n_max);
  report.params["P"] = to_canonical_string(spec.P);
  report.params["Q"] = to_canonical_string(spec.Q);
  return report;
}

// ---------------------------------------------------------------------------

int kronecker_mod_p(const Integer& d, std::uint64_t p) {
  require_prime(p, "kronecker_mod_p");
  Residue r = mod_canonical(d, p);
  if (p == 2) return static_cast<int>(r);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

Residue trinomial_pm1(const Integer& a, const Integer& b, const Integer& c, std::uint64_t p) {
  return signed_residue(kronecker_mod_p(b * b - 4 * a * c, p), p);
}

Residue trinomial_pm1_x(const Integer& a, const Integer& b, const Integer& c, std::uint64_t p) {
  require_prime(p, "trinomial_pm1_x");
  if (p != 2 && mod_canonical(c, p) != 0) {
    int sigma = kronecker_mod_p(b * b - 4 * a * c, p);
    Residue inv = inverse_mod(static_cast<std::int64_t>(mod_canonical(2 * c, p)), p);
    Residue one_minus = signed_residue(1 - sigma, p);
    return mul_mod(mul_mod(mod_canonical(b, p), inv, p), one_minus, p);
  }
  Residue bp = p == 2 ? 1 : pow_mod(mod_canonical(b, p), p - 2, p);
  return mod_canonical(Integer(-a * static_cast<unsigned long>(bp)), p);
}

// ---------------------------------------------------------------------------

std::string to_string(GlcBranch b) {
  return b == GlcBranch::odd_p_unit_a11 ? "odd-p-unit-a11" : "p2-or-p-divides-a11";
}

namespace {

LaurentPoly lift_to_2d(const LaurentPoly& f) {
  if (f.dim() == 2) return f;
  LaurentPoly g(2);
  for (const auto& [m, c] : f.terms()) g.add_term(Monomial{m[0], 0}, c);
  return g;
}

LaurentPoly project_to_1d(const LaurentPoly& f) {
  LaurentPoly g(1);
  for (const auto& [m, c] : f.terms()) {
    if (m[1] != 0) throw std::logic_error("project_to_1d: term depends on y");
    g.add_term(Monomial{m[0]}, c);
  }
  return g;
}

}  // namespace

GlcData glc_data(const LaurentPoly& P, const LaurentPoly& Q, std::uint64_t p) {
  require_prime(p, "glc_data");
  if (P.dim() != Q.dim()) throw std::invalid_argument("glc_data: P and Q dimensions differ");
  if (P.dim() > 2) throw std::invalid_argument("glc_data: only one or two variables supported");
  if (P.is_zero()) throw std::invalid_argument("glc_data: P must be nonzero");
  for (const auto& [m, c] : P.terms()) {
    for (std::size_t i = 0; i < P.dim(); ++i) {
      if (m[i] < -1 || m[i] > 1) {
        throw std::invalid_argument("glc_data: support of P must lie in {-1,0,1}^d");
      }
    }
  }
  for (const auto& [m, c] : Q.terms()) {
    for (std::size_t i = 0; i < Q.dim(); ++i) {
      if (m[i] < 0 || m[i] > 1) {
        throw std::invalid_argument(
            "glc_data: support of Q must lie in {0,1}^d (reflect variables first)");
      }
    }
  }

  GlcData g;
  g.p = p;
  g.P = P;
  const LaurentPoly P2 = lift_to_2d(P);
  const LaurentPoly Q2 = lift_to_2d(Q);
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) g.a[i + 1][j + 1] = P2.coeff(Monomial{i, j});
  }
  g.alpha = Q2.coeff(Monomial{0, 0});
  g.beta = Q2.coeff(Monomial{1, 0});
  g.gamma = Q2.coeff(Monomial{0, 1});
  g.delta = Q2.coeff(Monomial{1, 1});

  const Integer& a10 = g.coeff(1, 0);
  const Integer& a01 = g.coeff(0, 1);
  const Integer& a11 = g.coeff(1, 1);
  const Integer& a1m1 = g.coeff(1, -1);
  const Integer& am11 = g.coeff(-1, 1);
  g.sigma_x = kronecker_mod_p(a10 * a10 - 4 * a1m1 * a11, p);
  g.sigma_y = kronecker_mod_p(a01 * a01 - 4 * am11 * a11, p);
  const int sxy = g.sigma_x * g.sigma_y;

  Residue cx = 0;
  Residue cy = 0;
  Residue cxy = 0;
  if (p != 2 && mod_canonical(a11, p) != 0) {
    g.branch = GlcBranch::odd_p_unit_a11;
    Residue inv = inverse_mod(static_cast<std::int64_t>(mod_canonical(2 * a11, p)), p);
    cx = mul_mod(mul_mod(mod_canonical(a10, p), inv, p), signed_residue(1 - g.sigma_x, p), p);
    cy = mul_mod(mul_mod(mod_canonical(a01, p), inv, p), signed_residue(1 - g.sigma_y, p), p);
    cxy = signed_residue(1 - sxy, p);
  } else {
    g.branch = GlcBranch::p2_or_p_divides_a11;
    auto pw = [p](const Integer& v) -> Residue {
      return p == 2 ? 1 : pow_mod(mod_canonical(v, p), p - 2, p);
    };
    cx = mod_canonical(Integer(-a1m1 * static_cast<unsigned long>(pw(a10))), p);
    cy = mod_canonical(Integer(-am11 * static_cast<unsigned long>(pw(a01))), p);
    cxy = mod_canonical(Integer(a11 - sxy), p);
  }
  const Modulus mod(p);
  LaurentPoly qhat(2);
  qhat.add_term(Monomial{1, 0}, as_integer(cx));
  qhat.add_term(Monomial{0, 1}, as_integer(cy));
  qhat.add_term(Monomial{1, 1}, as_integer(cxy));
  g.q_hat = qhat;

  LaurentPoly qt(2);
  qt.add_term(Monomial{1, 0}, g.beta * g.sigma_x);
  qt.add_term(Monomial{0, 1}, g.gamma * g.sigma_y);
  qt.add_term(Monomial{1, 1}, g.delta * sxy);
  qt += scale(qhat, g.delta);
  qt = reduce_mod(qt, mod);
  g.q_tilde = P.dim() == 1 ? project_to_1d(qt) : qt;
  return g;
}

CongruenceReport glc_verify(const LaurentPoly& P, const LaurentPoly& Q, std::uint64_t p,
                            std::size_t n_max) {
  GlcData g = glc_data(P, Q, p);
  CongruenceReport report;
  report.kind = "glc";
  report.params["p"] = p;
  report.params["n_max"] = n_max;
  report.params["P"] = to_canonical_string(P);
  report.params["Q"] = to_canonical_string(Q);
  report.params["sigma_x"] = g.sigma_x;
  report.params["sigma_y"] = g.sigma_y;
  report.params["Q_tilde"] = to_canonical_string(g.q_tilde);

  std::array<LaurentPoly, 3> qs{Q, LaurentPoly::constant(P.dim(), 1), g.q_tilde};
  std::array<std::size_t, 3> ns{p * n_max + p - 1, n_max, n_max};
  auto w = ct_sequences(P, qs, ns, Modulus(p));
  const auto& A = w[0];
  const auto& B = w[1];
  const auto& At = w[2];
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    Residue bn = B.residue(n, p);
    for (std::uint64_t k = 0; k < p; ++k) {
      ++report.checked;
      Residue expected = mul_mod(bn, A.residue(k, p), p);
      if (k == p - 1) expected = (expected + At.residue(n, p)) % p;
      Residue actual = A.residue(p * n + k, p);
      if (expected != actual) {
        report.fail({{{"n", idx(n)}, {"k", idx(k)}}, as_integer(expected), as_integer(actual)});
        return report;
      }
    }
  }
  return report;
}

std::optional<std::string> glc_simple_obstruction(const GlcData& g) {
  // Q constant: Q~ = 0 and A = alpha B, so the simplified form always holds.
  if (g.beta == 0 && g.gamma == 0 && g.delta == 0) return std::nullopt;
  if (g.delta != 0 && g.branch != GlcBranch::odd_p_unit_a11) {
    return "requires delta = 0, or p odd with p not dividing a11";
  }
  if (g.sigma_x != 1) return "requires sigma_x = 1, got " + std::to_string(g.sigma_x);
  // In one variable gamma = delta = 0, so sigma_y never enters.
  if (g.P.dim() == 2 && g.sigma_y != 1) {
    return "requires sigma_y = 1, got " + std::to_string(g.sigma_y);
  }
  return std::nullopt;
}

CongruenceReport check_simplified(const SequenceWindow& A, const SequenceWindow& B,
                                  std::uint64_t p, std::size_t n_max) {
  require_prime(p, "check_simplified");
  if (A.size() < p * n_max + p || B.size() <= n_max) {
    throw std::invalid_argument("check_simplified: window too short");
  }
  CongruenceReport report;
  report.kind = "glc-simple";
  report.params["p"] = p;
  report.params["n_max"] = n_max;
  const Residue a0 = A.residue(0, p);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    Residue bn = B.residue(n, p);
    for (std::uint64_t k = 0; k < p; ++k) {
      ++report.checked;
      Residue expected = mul_mod(bn, A.residue(k, p), p);
      if (k == p - 1) {
        expected = (expected + A.residue(n, p) + p - mul_mod(a0, bn, p)) % p;
      }
      Residue actual = A.residue(p * n + k, p);
      if (expected != actual) {
        report.fail({{{"n", idx(n)}, {"k", idx(k)}}, as_integer(expected), as_integer(actual)});
        return report;
      }
    }
  }
  return report;
}

CongruenceReport glc_simple_verify(const LaurentPoly& P, const LaurentPoly& Q, std::uint64_t p,
                                   std::size_t n_max) {
  GlcData g = glc_data(P, Q, p);
  CongruenceReport report;
  if (auto why = glc_simple_obstruction(g)) {
    report.kind = "glc-simple";
    report.params["p"] = p;
    report.params["n_max"] = n_max;
    report.verdict = Verdict::inapplicable;
    report.reason = *why;
  } else {
    std::array<LaurentPoly, 2> qs{Q, LaurentPoly::constant(P.dim(), 1)};
    std::array<std::size_t, 2> ns{p * n_max + p - 1, n_max};
    auto w = ct_sequences(P, qs, ns, Modulus(p));
    report = check_simplified(w[0], w[1], p, n_max);
  }
  report.params["P"] = to_canonical_string(P);
  report.params["Q"] = to_canonical_string(Q);
  report.params["sigma_x"] = g.sigma_x;
  report.params["sigma_y"] = g.sigma_y;
  return report;
}

CongruenceReport shift_combination_check(const CtSpec& B_spec, const mpq_class& alpha,
                                         const mpq_class& beta, std::uint64_t p,
                                         std::size_t n_max) {
  require_prime(p, "shift_combination_check");
  auto fill = [&](CongruenceReport& r) {
    r.kind = "shift-combination";
    r.params["p"] = p;
    r.params["n_max"] = n_max;
    r.params["P"] = to_canonical_string(B_spec.P);
    r.params["alpha"] = alpha.get_str();
    r.params["beta"] = beta.get_str();
  };
  auto as_residue = [p](const mpq_class& q) -> std::optional<Residue> {
    Residue den = mod_canonical(Integer(q.get_den()), p);
    if (den == 0) return std::nullopt;
    return mul_mod(mod_canonical(Integer(q.get_num()), p),
                   inverse_mod(static_cast<std::int64_t>(den), p), p);
  };
  auto ra = as_residue(alpha);
  auto rb = as_residue(beta);
  if (!ra || !rb) {
    CongruenceReport r;
    fill(r);
    r.verdict = Verdict::inapplicable;
    r.reason = "denominator of alpha or beta divisible by p";
    return r;
  }
  const std::size_t top = p * n_max + p;
  SequenceWindow B = ct_sequence(CtSpec(B_spec.P), top, Modulus(p));
  CongruenceReport pre = lucas_verify(B, p, top);
  if (!pre.passed()) {
    CongruenceReport r;
    fill(r);
    r.verdict = Verdict::inapplicable;
    r.reason = "B does not satisfy the Lucas congruences modulo p";
    r.counterexample = pre.counterexample;
    return r;
  }
  SequenceWindow A;
  A.modulus = Modulus(p);
  for (std::size_t n = 0; n < top; ++n) {
    Residue v = (mul_mod(*ra, B.residue(n, p), p) + mul_mod(*rb, B.residue(n + 1, p), p)) % p;
    A.values.push_back(as_integer(v));
  }
  CongruenceReport r = check_simplified(A, B, p, n_max);
  fill(r);
  return r;
}

std::optional<std::pair<mpq_class, mpq_class>> fit_shift_combination(
    std::span<const Integer> A, std::span<const Integer> B, std::size_t n_max) {
  if (A.size() <= n_max || B.size() <= n_max + 1) {
    throw std::invalid_argument("fit_shift_combination: window too short");
  }
  // Rows (B(n), B(n+1) | A(n)), reduced to echelon form.
  std::vector<std::array<mpq_class, 3>> rows;
  for (std::size_t n = 0; n <= n_max; ++n) rows.push_back({B[n], B[n + 1], A[n]});
  std::size_t r = 0;
  std::array<int, 2> pivot_row{-1, -1};
  for (int c = 0; c < 2; ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpq_class f = rows[i][c] / rows[r][c];
      for (int cc = 0; cc < 3; ++cc) rows[i][cc] -= f * rows[r][cc];
    }
    pivot_row[c] = static_cast<int>(r);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (rows[i][2] != 0) return std::nullopt;
  }
  std::array<mpq_class, 2> sol{0, 0};
  for (int c = 0; c < 2; ++c) {
    if (pivot_row[c] >= 0) sol[c] = rows[pivot_row[c]][2] / rows[pivot_row[c]][c];
  }
  return std::make_pair(sol[0], sol[1]);
}

CongruenceReport univariate_glc(const Integer& a, const Integer& b, const Integer& c,
                                const Integer& alpha, const Integer& beta, std::uint64_t p,
                                std::size_t n_max) {
  require_prime(p, "univariate_glc");
  LaurentPoly P(1);
  P.add_term(Monomial{-1}, a);
  P.add_term(Monomial{0}, b);
  P.add_term(Monomial{1}, c);
  LaurentPoly Q(1);
  Q.add_term(Monomial{0}, alpha);
  Q.add_term(Monomial{1}, beta);
  if (P.is_zero()) throw std::invalid_argument("univariate_glc: P must be nonzero");

  CongruenceReport report;
  if (mod_canonical(c, p) != 0) {
    report = glc_simple_verify(P, Q, p, n_max);
  } else {
    report.kind = "glc-degenerate";
    report.params["p"] = p;
    report.params["n_max"] = n_max;
    std::array<LaurentPoly, 2> qs{Q, LaurentPoly::constant(1, 1)};
    std::array<std::size_t, 2> ns{p * n_max + p - 1, n_max};
    auto w = ct_sequences(P, qs, ns, Modulus(p));
    for (std::uint64_t n = 0; n <= n_max && report.passed(); ++n) {
      for (std::uint64_t k = 0; k < p; ++k) {
        ++report.checked;
        Residue expected = mul_mod(w[1].residue(n, p), w[0].residue(k, p), p);
        Residue actual = w[0].residue(p * n + k, p);
        if (expected != actual) {
          report.fail({{{"n", idx(n)}, {"k", idx(k)}}, as_integer(expected), as_integer(actual)});
          break;
        }
      }
    }
  }
  report.kind = report.kind == "glc-degenerate" ? "univariate-glc-degenerate" : "univariate-glc";
  report.params["P"] = to_canonical_string(P);
  report.params["Q"] = to_canonical_string(Q);
  return report;
}

// ---------------------------------------------------------------------------

Residue catalan_direct_mod(std::uint64_t n, std::uint64_t p) {
  return mod_canonical(oracles::catalan(n), p);
}

Residue catalan_step(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
  require_prime(p, "catalan_step");
  if (k >= p) throw std::invalid_argument("catalan_step: k must be below p");
  if (k < p - 1) return mul_mod(central_binomial_mod_p(n, p), small_catalan_mod(k, p), p);
  Residue two_n1 = (2 * (n % p) + 1) % p;
  return mul_mod((p - two_n1) % p, catalan_by_steps(n, p), p);
}

Residue catalan_by_steps(std::uint64_t n, std::uint64_t p) {
  require_prime(p, "catalan_by_steps");
  if (n == 0) return 1 % p;
  return catalan_step(p, n / p, n % p);
}

Residue catalan_digit_formula(std::uint64_t n, std::uint64_t p) {
  require_prime(p, "catalan_digit_formula");
  CatalanDigitSplit s = catalan_split(n, p);
  const std::uint64_t n0 = s.tail[0];
  Residue acc = small_catalan_mod(n0, p);
  if (s.m >= 1) acc = mul_mod(acc, (p - (2 * n0 + 1) % p) % p, p);
  for (std::size_t i = 1; i < s.tail.size() && acc != 0; ++i) {
    acc = mul_mod(acc, central_binomial_mod_p(s.tail[i], p), p);
  }
  return acc;
}

Residue catalan_mod3(std::uint64_t n) {
  DigitExpansion e = digits(n + 1, 3);
  unsigned ones = 0;
  for (std::size_t i = 1; i < e.digits.size(); ++i) {
    if (e.digits[i] == 2) return 0;
    if (e.digits[i] == 1) ++ones;
  }
  return ones % 2 == 0 ? 1 : 2;
}

Residue catalan_mod5(std::uint64_t n) {
  CatalanDigitSplit s = catalan_split(n, 5);
  const unsigned n0 = s.tail[0];
  bool in_z = n0 == 3 || (n0 == 2 && s.m >= 1);
  for (std::size_t i = 1; i < s.tail.size(); ++i) {
    if (s.tail[i] == 3 || s.tail[i] == 4) in_z = true;
  }
  if (in_z) return 0;
  unsigned lambda = 0;
  for (std::size_t i = 1; i < s.tail.size(); ++i) {
    if (s.tail[i] == 1) ++lambda;
  }
  if (n0 == 2 || (n0 == 1 && s.m >= 1)) lambda += 1;
  if (n0 == 0 && s.m >= 1) lambda += 2;
  return pow_mod(2, lambda, 5);
}

Residue s_mod5(std::uint64_t n) {
  unsigned threes = 0;
  for (unsigned d : digits(n, 5).digits) {
    if (d == 2 || d == 4) return 0;
    if (d == 3) ++threes;
  }
  return threes % 2 == 0 ? 1 : 4;
}

std::vector<std::uint64_t> never_divisible_primes(const Oracle& seq, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  std::vector<Integer> values;
  for (std::uint64_t p : primes_up_to(bound)) {
    const std::size_t range = 2 * p + 1;
    while (values.size() <= range) values.push_back(seq(values.size()));
    SequenceWindow w;
    w.values.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(range + 1));
    if (!lucas_verify(w, p, range).passed()) {
      throw std::domain_error("never_divisible_primes: sequence fails the Lucas congruences mod " +
                              std::to_string(p));
    }
    bool never = true;
    for (std::uint64_t k = 0; k < p && never; ++k) never = w.residue(k, p) != 0;
    if (never) out.push_back(p);
  }
  return out;
}

}  // namespace lucasx
