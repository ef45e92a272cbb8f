#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lucasx/integer.hpp"

namespace lucasx {

enum class Verdict { pass, fail, inapplicable };

std::string to_string(Verdict v);

/// The smallest violating index tuple, e.g. {{"n", 1}, {"k", 0}}, with the
/// value the congruence predicts and the value actually observed.
struct Counterexample {
  std::vector<std::pair<std::string, std::int64_t>> indices;
  Integer expected;
  Integer actual;
};

/// Outcome of a finite congruence sweep. A counterexample is present iff the
/// verdict is fail; `reason` explains inapplicable verdicts.
struct CongruenceReport {
  std::string kind;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Verdict verdict = Verdict::pass;
  std::uint64_t checked = 0;
  std::optional<Counterexample> counterexample;
  std::string reason;

  bool passed() const { return verdict == Verdict::pass; }

  void fail(Counterexample cx) {
    verdict = Verdict::fail;
    counterexample = std::move(cx);
  }
};

/// Stable JSON field order: kind, params, verdict, checked, then
/// counterexample and/or reason when present.
nlohmann::ordered_json report_json(const CongruenceReport& report);

/// report_json dumped on one line, newline-terminated.
std::string report_format(const CongruenceReport& report);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json integer_json(const Integer& v);

}  // namespace lucasx
