#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lucasx/integer.hpp"

namespace lucasx {

inline constexpr std::size_t kMaxDim = 4;

/// Exponent vector x1^e1 ... xd^ed. Slots beyond the owning polynomial's
/// dimension are always zero.
struct Monomial {
  std::array<int, kMaxDim> exps{};

  Monomial() = default;
  Monomial(std::initializer_list<int> e);

  int& operator[](std::size_t i) { return exps[i]; }
  int operator[](std::size_t i) const { return exps[i]; }

  /// Total degree (sum of the signed exponents).
  int degree() const;
  bool is_zero() const;

  Monomial operator+(const Monomial& o) const;
  Monomial operator-() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: lower total degree first, ties broken so that
/// x comes before y before z before w.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Modulus for coefficient reduction, typically p^r.
class Modulus {
 public:
  explicit Modulus(std::uint64_t m);

  std::uint64_t value() const { return m_; }
  Residue reduce(const Integer& v) const { return mod_canonical(v, m_); }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::uint64_t m_;
};

/// Sparse Laurent polynomial in d <= 4 variables with exact integer
/// coefficients. No zero coefficients are ever stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer, GradedLex>;

  explicit LaurentPoly(std::size_t dim = 1);

  static LaurentPoly constant(std::size_t dim, const Integer& c);
  static LaurentPoly term(std::size_t dim, const Monomial& m, const Integer& c = 1);
  /// The single variable x_i (0-based).
  static LaurentPoly variable(std::size_t dim, std::size_t i);

  std::size_t dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Integer coeff(const Monomial& m) const;
  std::vector<Monomial> support() const;

  /// Adds c * x^m, dropping the term if the result cancels.
  void add_term(const Monomial& m, const Integer& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  void check_monomial(const Monomial& m) const;

  std::size_t dim_;
  TermMap terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g,
                const std::optional<Modulus>& mod = std::nullopt);
LaurentPoly pow(const LaurentPoly& f, unsigned long n,
                const std::optional<Modulus>& mod = std::nullopt);
LaurentPoly scale(const LaurentPoly& f, const Integer& c);

/// Incremental powers f^0, f^1, f^2, ...; each advance() costs one
/// multiplication by f.
class PowerSequence {
 public:
  explicit PowerSequence(LaurentPoly base,
                         std::optional<Modulus> mod = std::nullopt);

  const LaurentPoly& current() const { return current_; }
  unsigned long exponent() const { return exponent_; }
  void advance();

 private:
  LaurentPoly base_;
  std::optional<Modulus> mod_;
  LaurentPoly current_;
  unsigned long exponent_ = 0;
};

/// Cartier operator: keeps terms whose exponents are all divisible by p and
/// divides those exponents by p.
LaurentPoly cartier(const LaurentPoly& f, std::uint64_t p);

/// cartier(f * g, p) without forming the full product.
LaurentPoly cartier_of_product(const LaurentPoly& f, const LaurentPoly& g,
                               std::uint64_t p,
                               const std::optional<Modulus>& mod = std::nullopt);

/// f(x^p): every exponent multiplied by p.
LaurentPoly frobenius_substitute(const LaurentPoly& f, std::uint64_t p);

Integer constant_term(const LaurentPoly& f);
Integer coeff_at(const LaurentPoly& f, const Monomial& k);

/// Substitutes x_i -> 1/x_i for each set flag.
using ReflectFlags = std::bitset<kMaxDim>;
LaurentPoly reflect(const LaurentPoly& f, ReflectFlags flags);

/// Coefficients replaced by canonical residues in [0, m); zeros dropped.
LaurentPoly reduce_mod(const LaurentPoly& f, const Modulus& m);

/// Per-variable exponent range [lo, hi] over the support; both zero for the
/// zero polynomial.
struct ExponentBox {
  Monomial lo;
  Monomial hi;
};
ExponentBox exponent_box(const LaurentPoly& f);

/// Largest |exponent| appearing in f.
int exponent_radius(const LaurentPoly& f);

}  // namespace lucasx
