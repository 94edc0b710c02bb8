#include "torustam/report.hpp"

#include <cmath>

namespace torustam {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {
int severity(Verdict v) { return v == Verdict::pass ? 0 : (v == Verdict::inconclusive ? 1 : 2); }
}  // namespace

Verdict worst(Verdict a, Verdict b) { return severity(a) >= severity(b) ? a : b; }

void VerificationReport::downgrade(Verdict v, const std::string& why) {
  if (severity(v) > severity(verdict)) {
    verdict = v;
    cause = why;
  } else if (severity(v) == severity(verdict) && cause.empty()) {
    cause = why;
  }
}

Json VerificationReport::to_json() const {
  Json j;
  j["identity"] = identity;
  j["torus"] = torus;
  j["inputs"] = inputs;
  j["values"] = values;
  j["rows"] = rows;
  j["verdict"] = to_string(verdict);
  if (verdict != Verdict::pass) j["cause"] = cause;
  if (seconds) j["seconds"] = *seconds;
  return j;
}

Json rational_json(const BigRat& r) { return r.to_string(); }

Json real_json(double value, double abs_err) {
  Json j;
  j["value"] = value;
  j["abs_err"] = abs_err;
  return j;
}

Json render_report(const std::vector<VerificationReport>& reports, const Json& config_echo) {
  Json doc;
  doc["version"] = kReportSchemaVersion;
  doc["config_echo"] = config_echo;
  doc["reports"] = Json::array();
  for (const auto& r : reports) doc["reports"].push_back(r.to_json());
  return doc;
}

Verdict overall_verdict(const std::vector<VerificationReport>& reports) {
  Verdict v = Verdict::pass;
  for (const auto& r : reports) v = worst(v, r.verdict);
  return v;
}

}  // namespace torustam
