#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lucasx/integer.hpp"
#include "lucasx/laurent.hpp"
#include "lucasx/report.hpp"
#include "lucasx/sequences.hpp"

namespace lucasx {

/// Raised when a theorem's hypotheses do not hold for the given input. Kept
/// distinct from a congruence failure.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Digits

/// Base-p digits, least significant first; n = 0 has no digits.
struct DigitExpansion {
  std::uint64_t p = 2;
  std::vector<unsigned> digits;

  std::uint64_t value() const;
};

DigitExpansion digits(std::uint64_t n, std::uint64_t p);

/// n written as m digits equal to p-1 followed by tail = n0, n1, ..., nr with
/// n0 != p-1. For n = p^m - 1 the tail is {0}.
struct CatalanDigitSplit {
  std::uint64_t p = 2;
  unsigned m = 0;
  std::vector<unsigned> tail;

  std::uint64_t value() const;
};

CatalanDigitSplit catalan_split(std::uint64_t n, std::uint64_t p);

// ---------------------------------------------------------------------------
// Lucas and Dwork congruences

/// Product of base[d] over the base-p digits d of n, where p = base.size().
Residue lucas_predict(std::span<const Residue> base, std::uint64_t n);

/// Checks A(pn + k) == A(n) A(k) mod p for every pn + k <= n_max, scanning
/// (n, k) lexicographically. A(0) must be 1 mod p.
CongruenceReport lucas_verify(const SequenceWindow& seq, std::uint64_t p, std::size_t n_max);
CongruenceReport lucas_verify(const CtSpec& spec, std::uint64_t p, std::size_t n_max);

/// Checks A(p^r m + n) A(n/p) == A(p^(r-1) m + n/p) A(n) mod p^r over the
/// grid 0 <= m <= m_max, 0 <= n <= n_max. The window must reach
/// p^r m_max + n_max.
CongruenceReport dwork_verify(const SequenceWindow& seq, std::uint64_t p, unsigned r,
                              std::size_t m_max, std::size_t n_max);
CongruenceReport dwork_verify(const CtSpec& spec, std::uint64_t p, unsigned r,
                              std::size_t m_max, std::size_t n_max);

// ---------------------------------------------------------------------------
// Quadratic characters and trinomial evaluations

/// (d/p) in {-1, 0, 1}: d^((p-1)/2) lifted for odd p, d mod 2 for p = 2.
int kronecker_mod_p(const Integer& d, std::uint64_t p);

/// Closed form for ct[(a/x + b + c x)^(p-1)] mod p.
Residue trinomial_pm1(const Integer& a, const Integer& b, const Integer& c, std::uint64_t p);

/// Closed form for ct[(a/x + b + c x)^(p-1) x] mod p.
Residue trinomial_pm1_x(const Integer& a, const Integer& b, const Integer& c, std::uint64_t p);

// ---------------------------------------------------------------------------
// Generalized Lucas congruences for P(x, y) with support in {-1,0,1}^2 and
// Q = alpha + beta x + gamma y + delta xy.

enum class GlcBranch { odd_p_unit_a11, p2_or_p_divides_a11 };

std::string to_string(GlcBranch b);

struct GlcData {
  std::uint64_t p = 2;
  int sigma_x = 0;
  int sigma_y = 0;
  GlcBranch branch = GlcBranch::p2_or_p_divides_a11;
  /// a[i+1][j+1] is the coefficient of x^i y^j in P.
  std::array<std::array<Integer, 3>, 3> a{};
  Integer alpha, beta, gamma, delta;
  /// Two-variable correction polynomial, coefficients reduced mod p.
  LaurentPoly q_hat{2};
  /// Q(sigma_x x, sigma_y y) - alpha + delta q_hat, reduced mod p, in the
  /// dimension of P.
  LaurentPoly q_tilde{2};
  LaurentPoly P{2};

  const Integer& coeff(int i, int j) const { return a[i + 1][j + 1]; }
  /// B(n) = ct[P^n].
  CtSpec B_spec() const { return CtSpec(P); }
  /// Atilde(n) = ct[P^n q_tilde].
  CtSpec A_tilde_spec() const { return CtSpec(P, q_tilde); }
};

/// Throws std::invalid_argument when supp(P) is not in {-1,0,1}^d or supp(Q)
/// is not in {0,1}^d (d = 1 or 2). Reflect Q first for other unit monomials.
GlcData glc_data(const LaurentPoly& P, const LaurentPoly& Q, std::uint64_t p);

/// A(pn + k) == B(n) A(k) + [k = p-1] Atilde(n) mod p for n <= n_max and all k.
CongruenceReport glc_verify(const LaurentPoly& P, const LaurentPoly& Q, std::uint64_t p,
                            std::size_t n_max);

/// Why the simplified form does not apply, or nullopt when it does.
std::optional<std::string> glc_simple_obstruction(const GlcData& data);

/// A(pn + k) == B(n) A(k) + [k = p-1] (A(n) - A(0) B(n)) mod p. Reports
/// Verdict::inapplicable when the hypotheses fail.
CongruenceReport glc_simple_verify(const LaurentPoly& P, const LaurentPoly& Q, std::uint64_t p,
                                   std::size_t n_max);

/// The simplified congruence checked on precomputed windows; A must reach
/// p n_max + p - 1 and B must reach n_max.
CongruenceReport check_simplified(const SequenceWindow& A, const SequenceWindow& B,
                                  std::uint64_t p, std::size_t n_max);

/// A(n) = alpha B(n) + beta B(n+1) with rational alpha, beta whose
/// denominators are prime to p. B is first checked for Lucas congruences.
CongruenceReport shift_combination_check(const CtSpec& B_spec, const mpq_class& alpha,
                                         const mpq_class& beta, std::uint64_t p,
                                         std::size_t n_max);

/// Rational (alpha, beta) with A(n) = alpha B(n) + beta B(n+1) for all
/// n <= n_max, or nullopt if no such pair exists. B must reach n_max + 1.
std::optional<std::pair<mpq_class, mpq_class>> fit_shift_combination(
    std::span<const Integer> A, std::span<const Integer> B, std::size_t n_max);

/// A(n) = ct[(a/x + b + c x)^n (alpha + beta x)]. With c != 0 mod p this is
/// the simplified generalized congruence; otherwise plain A(pn+k) == B(n)A(k).
CongruenceReport univariate_glc(const Integer& a, const Integer& b, const Integer& c,
                                const Integer& alpha, const Integer& beta, std::uint64_t p,
                                std::size_t n_max);

// ---------------------------------------------------------------------------
// Catalan numbers and S(n)

Residue catalan_direct_mod(std::uint64_t n, std::uint64_t p);

/// C(pn + k) mod p from one step: C(2n,n) C(k) for k < p-1, -(2n+1) C(n)
/// for k = p-1. C(n) is itself evaluated by iterating this step.
Residue catalan_step(std::uint64_t p, std::uint64_t n, std::uint64_t k);

/// C(n) mod p by repeatedly peeling the least significant digit.
Residue catalan_by_steps(std::uint64_t n, std::uint64_t p);

/// delta(n0, m) C(n0) prod C(2 n_i, n_i) mod p over the digit split of n.
Residue catalan_digit_formula(std::uint64_t n, std::uint64_t p);

/// Ternary characterization through the digits of n + 1.
Residue catalan_mod3(std::uint64_t n);

/// Base-5 characterization through the Z set and the exponent lambda(n).
Residue catalan_mod5(std::uint64_t n);

/// (-1)^(number of 3s) if all base-5 digits are 0, 1 or 3, else 0.
Residue s_mod5(std::uint64_t n);

/// Primes p <= bound with A(0..p-1) all nonzero mod p. Each prime is first
/// checked for Lucas congruences on n <= 2p + 1; throws std::domain_error
/// if that check fails.
std::vector<std::uint64_t> never_divisible_primes(const Oracle& seq, std::uint64_t bound);

}  // namespace lucasx
