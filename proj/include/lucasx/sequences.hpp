#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lucasx/laurent.hpp"
#include "lucasx/report.hpp"

namespace lucasx {

/// A(n) = ct[P^n Q].
struct CtSpec {
  LaurentPoly P;
  LaurentPoly Q;

  /// Q defaults to 1. Throws if P = 0 or the dimensions differ.
  explicit CtSpec(LaurentPoly p);
  CtSpec(LaurentPoly p, LaurentPoly q);
};

/// values[n] for n = 0..size()-1. With a modulus attached every value is a
/// canonical residue.
struct SequenceWindow {
  std::vector<Integer> values;
  std::optional<Modulus> modulus;

  std::size_t size() const { return values.size(); }
  const Integer& operator[](std::size_t n) const { return values[n]; }
  Residue residue(std::size_t n, std::uint64_t m) const { return mod_canonical(values[n], m); }

  /// Same window reduced modulo m (m must divide the attached modulus, if any).
  SequenceWindow reduced(const Modulus& m) const;
};

struct PoweringLimits {
  /// Abort once a single power would store more coefficients than this.
  std::size_t max_cells = 10'000'000;
};

/// ct[P^n Q] for n = 0..n_max by incremental powering. The powers are kept
/// on a dense exponent box pruned to the region that can still reach the
/// constant term by n_max, with coefficients reduced after every step when a
/// modulus is given. Throws std::length_error past limits.max_cells.
SequenceWindow ct_sequence(const CtSpec& spec, std::size_t n_max,
                           const std::optional<Modulus>& mod = std::nullopt,
                           const PoweringLimits& limits = {});

/// Several multipliers sharing one powering of P: out[i] holds
/// ct[P^n Q_i] for n = 0..n_max[i].
std::vector<SequenceWindow> ct_sequences(const LaurentPoly& P, std::span<const LaurentPoly> Q,
                                         std::span<const std::size_t> n_max,
                                         const std::optional<Modulus>& mod = std::nullopt,
                                         const PoweringLimits& limits = {});

/// Sequence given by a closed form or binomial sum.
using Oracle = std::function<Integer(unsigned long)>;

/// Compares ct_sequence(spec) with the oracle on 0..n_max, exactly. Reports
/// the smallest mismatching n.
CongruenceReport cross_check(const CtSpec& spec, const std::string& oracle_name,
                             const Oracle& oracle, std::size_t n_max);

}  // namespace lucasx
