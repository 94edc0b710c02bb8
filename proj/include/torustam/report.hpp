#pragma once

#include "torustam/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace torustam {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchemaVersion = "1.0.0";

enum class Verdict { pass, fail, inconclusive };

const char* to_string(Verdict v);
/// FAIL dominates INCONCLUSIVE, which dominates PASS.
Verdict worst(Verdict a, Verdict b);

/// One checked identity with its inputs, intermediate values and outcome.
struct VerificationReport {
  std::string identity;  ///< euler | lifting | globalinv | local-density | sha | sha-bk | tnc
  std::string torus;
  Json inputs = Json::object();
  Json values = Json::object();  ///< each entry carries a "provenance" label where useful
  Json rows = Json::array();
  Verdict verdict = Verdict::pass;
  std::string cause;  ///< machine-readable; required unless PASS
  std::optional<double> seconds;

  void fail(const std::string& why) { downgrade(Verdict::fail, why); }
  void inconclusive(const std::string& why) { downgrade(Verdict::inconclusive, why); }
  Json to_json() const;

 private:
  void downgrade(Verdict v, const std::string& why);
};

Json rational_json(const BigRat& r);  ///< "a/b"
Json real_json(double value, double abs_err);

/// {version, config_echo, reports: [...]}.
Json render_report(const std::vector<VerificationReport>& reports, const Json& config_echo = Json::object());

Verdict overall_verdict(const std::vector<VerificationReport>& reports);

}  // namespace torustam
