#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucasx/integer.hpp"
#include "lucasx/sequences.hpp"

// Closed forms and binomial sums for the named constant-term sequences.
// Nothing here touches LaurentPoly: these are the independent side of every
// cross-check.
namespace lucasx::oracles {

Integer central_binomial(unsigned long n);
Integer catalan(unsigned long n);

/// sum_k C(n,2k) C(2k,k) (ac)^k b^(n-2k) = ct[(a/x + b + c x)^n].
Integer central_trinomial(const Integer& a, const Integer& b, const Integer& c, unsigned long n);

/// sum_k C(n,k)^2 C(n+k,k)^2.
Integer apery(unsigned long n);

/// sum over k_1 + ... + k_s = n of the squared multinomial.
Integer abelian_squares(unsigned s, unsigned long n);

enum class SVariant { squared, trinomial_style };

/// sum_k C(n,k)^2 C(n-k,k)  or  sum_k C(n,k) C(n,2k) C(2k,k).
Integer S(unsigned long n, SVariant variant = SVariant::squared);

/// (-1)^(floor(n/2)+floor(n/4)) C(n, floor(n/2)) C(floor(n/2), floor(n/4)).
Integer D(unsigned long n);

/// Zagier's sequence E: sum_k C(n,k) C(2k,k) C(2(n-k), n-k).
Integer zagierE(unsigned long n);

/// (E(n+1) - 4 E(n)) / 4; throws std::logic_error if the division is inexact.
Integer zagierE_shift(unsigned long n);

enum class LambdaWhich { A, B };

/// A: sum over odd k of lambda^(n-k) C(n,k) D(k).
/// B: sum_k (-1)^k lambda^(n-4k) C(n,4k) C(4k,2k) C(2k,k).
Integer lambda_family(const Integer& lambda, unsigned long n, LambdaWhich which);

/// Lookup by name ("catalan", "central-binomial", "central-trinomial",
/// "apery", "abelian-squares-2", "abelian-squares-3", "S", "D", "zagier-E",
/// "zagier-E-shift", "one").
std::optional<Oracle> named(std::string_view name);
std::vector<std::string> names();

}  // namespace lucasx::oracles
