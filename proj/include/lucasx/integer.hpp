#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace lucasx {

/// Arbitrary-precision signed integer used for every exact coefficient.
using Integer = mpz_class;

/// Canonical residue type. Moduli handled by the library fit in 64 bits.
using Residue = std::uint64_t;

inline std::string to_string(const Integer& v) { return v.get_str(); }

/// Canonical representative of v in [0, m).
inline Residue mod_canonical(const Integer& v, std::uint64_t m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
  return static_cast<Residue>(r.get_ui());
}

inline Residue mod_canonical(std::int64_t v, std::uint64_t m) {
  auto sm = static_cast<std::int64_t>(m);
  std::int64_t r = v % sm;
  return static_cast<Residue>(r < 0 ? r + sm : r);
}

/// Balanced representative in (-m/2, m/2], used for `--signed` printing.
inline std::int64_t balanced(Residue r, std::uint64_t m) {
  auto v = static_cast<std::int64_t>(r);
  return 2 * r > m ? v - static_cast<std::int64_t>(m) : v;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Residue mul_mod(Residue a, Residue b, std::uint64_t m) {
  return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % m);
}

inline Residue pow_mod(Residue base, std::uint64_t e, std::uint64_t m) {
  Residue result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

/// Inverse of a modulo m by extended Euclid; throws when gcd(a, m) != 1.
Residue inverse_mod(std::int64_t a, std::uint64_t m);

bool is_prime(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Throws std::invalid_argument unless p is prime.
void require_prime(std::uint64_t p, const char* what);

/// p^r, throwing std::overflow_error when it leaves 64 bits.
std::uint64_t prime_power(std::uint64_t p, unsigned r);

}  // namespace lucasx
