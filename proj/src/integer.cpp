#include "lucasx/integer.hpp"

#include <stdexcept>
#include <string>

namespace lucasx {

Residue inverse_mod(std::int64_t a, std::uint64_t m) {
  // Extended Euclid over signed 128-bit to avoid overflow for large m.
  __int128 old_r = static_cast<__int128>(mod_canonical(a, m));
  __int128 r = static_cast<__int128>(m);
  __int128 old_s = 1;
  __int128 s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw std::domain_error("inverse_mod: " + std::to_string(a) +
                            " is not invertible modulo " + std::to_string(m));
  }
  __int128 mm = static_cast<__int128>(m);
  __int128 v = old_s % mm;
  if (v < 0) v += mm;
  return static_cast<Residue>(v);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(p) +
                                " is not prime");
  }
}

std::uint64_t prime_power(std::uint64_t p, unsigned r) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (out > UINT64_MAX / p) throw std::overflow_error("prime_power: p^r exceeds 64 bits");
    out *= p;
  }
  return out;
}

}  // namespace lucasx
