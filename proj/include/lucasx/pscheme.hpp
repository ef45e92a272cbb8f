#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "lucasx/integer.hpp"
#include "lucasx/laurent.hpp"
#include "lucasx/report.hpp"
#include "lucasx/sequences.hpp"

namespace lucasx {

/// States A_0..A_{s-1} with A_i(pn + k) == sum_j M_k[i][j] A_j(n) mod p^r and
/// initial values c_i = A_i(0). State 0 is the output.
struct LinearPScheme {
  std::uint64_t p = 2;
  unsigned r = 1;
  std::size_t states = 1;
  /// matrices[k][i][j], canonical residues mod p^r.
  std::vector<std::vector<std::vector<Residue>>> matrices;
  std::vector<Residue> init;
  /// Optional human-readable description of each state.
  std::vector<std::string> labels;

  std::uint64_t modulus() const { return prime_power(p, r); }

  /// Throws std::invalid_argument on inconsistent shapes or non-canonical entries.
  void validate() const;

  friend bool operator==(const LinearPScheme&, const LinearPScheme&) = default;
};

/// Component 0 of M_{n0} M_{n1} ... M_{nr} c, digits least significant first.
Residue evaluate(const LinearPScheme& sch, std::uint64_t n);

/// The full state vector (A_0(n), ..., A_{s-1}(n)).
std::vector<Residue> evaluate_states(const LinearPScheme& sch, std::uint64_t n);

/// One state with M_k = [A(k)], c = (1). base[0] must be 1.
LinearPScheme from_lucas_table(std::span<const Residue> base, std::uint64_t p);

/// States A and B = ct[P^n] under the simplified generalized Lucas
/// congruences. Throws HypothesisError when they do not apply.
LinearPScheme two_state_from_glc(const LaurentPoly& P, const LaurentPoly& Q, std::uint64_t p);

/// Breadth-first closure starting from Q mod p^r. For r = 1 the states are
/// polynomials R with A_R(n) = ct[P^n R] and A_R(pn + k) = A_{R'}(n) where
/// R' = cartier(P^k R). For r > 1 a state also carries a level t < r and
/// stands for ct[P^(p^t n) R]; levels below r - 1 advance by R' = P^(p^t k) R,
/// the top level applies the Cartier step to P^(p^(r-1) k) R. States are
/// matched up to a unit multiple. Throws std::length_error past max_states or
/// when a state's exponents leave the radius bound.
LinearPScheme synthesize(const CtSpec& spec, std::uint64_t p, unsigned r,
                         std::size_t max_states = 64);

/// evaluate(sch, n) == ct[P^n Q] mod p^r for n <= n_max.
CongruenceReport verify(const LinearPScheme& sch, const CtSpec& spec, std::size_t n_max);

struct SingleStateResult {
  bool reducible = false;
  std::optional<LinearPScheme> witness;
  CongruenceReport report;
};

/// Lucas congruences mod p on n <= n_max (default p^3), with the one-state
/// scheme as witness. A finite certificate only. Throws std::invalid_argument
/// when A(0) is not 1 mod p.
SingleStateResult is_single_state_reducible(const CtSpec& spec, std::uint64_t p,
                                            std::optional<std::size_t> n_max = std::nullopt);
SingleStateResult is_single_state_reducible(const LinearPScheme& sch,
                                            std::optional<std::size_t> n_max = std::nullopt);

nlohmann::ordered_json scheme_json(const LinearPScheme& sch);
LinearPScheme scheme_from_json(const nlohmann::ordered_json& j);

/// scheme_json dumped on one line with a trailing newline.
std::string scheme_dump(const LinearPScheme& sch);
LinearPScheme scheme_parse(const std::string& text);

}  // namespace lucasx
