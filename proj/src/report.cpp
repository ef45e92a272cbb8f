#include "lucasx/report.hpp"

namespace lucasx {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inapplicable:
      return "inapplicable";
  }
  return "unknown";
}

nlohmann::ordered_json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

nlohmann::ordered_json report_json(const CongruenceReport& report) {
  nlohmann::ordered_json j;
  j["kind"] = report.kind;
  j["params"] = report.params;
  j["verdict"] = to_string(report.verdict);
  j["checked"] = report.checked;
  if (report.counterexample) {
    nlohmann::ordered_json cx;
    for (const auto& [name, value] : report.counterexample->indices) cx[name] = value;
    cx["expected"] = integer_json(report.counterexample->expected);
    cx["actual"] = integer_json(report.counterexample->actual);
    j["counterexample"] = cx;
  }
  if (!report.reason.empty()) j["reason"] = report.reason;
  return j;
}

std::string report_format(const CongruenceReport& report) {
  return report_json(report).dump() + "\n";
}

}  // namespace lucasx
