#include "torustam/cli.hpp"

#include "torustam/error.hpp"
#include "torustam/global_assembly.hpp"
#include "torustam/kernels.hpp"
#include "torustam/local_measure.hpp"
#include "torustam/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unistd.h>

namespace torustam {

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> cmds{"euler", "lifting", "globalinv", "density", "sha", "tnc", "all"};
  return cmds;
}

void RunConfig::validate() const {
  const auto& cmds = known_commands();
  if (std::find(cmds.begin(), cmds.end(), command) == cmds.end())
    throw ConfigError("field 'command': unknown command '" + command + "'");
  if (tori.empty()) throw ConfigError("field 'torus': at least one torus is required");
  if (!(tol > 0)) throw ConfigError("field 'tol': tolerance must be positive");
  if (pmax < 3) throw ConfigError("field 'pmax': prime bound must be at least 3");
  if (kmax < 1 || kmax > 12) throw ConfigError("field 'kmax': must lie in 1..12");
  if (budget != 0 && budget < 10'000) throw ConfigError("field 'budget': must be at least 10000");
  if (jobs < 0) throw ConfigError("field 'jobs': must be non-negative");
}

std::uint64_t RunConfig::effective_budget() const { return budget ? budget : default_enumeration_budget(); }

Json RunConfig::echo() const {
  Json j;
  j["command"] = command;
  j["torus"] = tori;
  j["pmax"] = pmax;
  j["kmax"] = kmax;
  j["tol"] = tol;
  j["budget"] = effective_budget();
  return j;
}

void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& origin) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // translate the byte offset into line:column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError(origin + ": top level must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const Json& v = it.value();
    try {
      if (key == "command") {
        cfg.command = v.get<std::string>();
      } else if (key == "torus") {
        cfg.tori = v.is_array() ? v.get<std::vector<std::string>>() : std::vector<std::string>{v.get<std::string>()};
      } else if (key == "pmax") {
        cfg.pmax = v.get<std::int64_t>();
      } else if (key == "kmax") {
        cfg.kmax = v.get<int>();
      } else if (key == "tol") {
        cfg.tol = v.get<double>();
      } else if (key == "budget") {
        cfg.budget = v.get<std::uint64_t>();
      } else if (key == "jobs") {
        cfg.jobs = v.get<int>();
      } else if (key == "out") {
        cfg.out = v.get<std::string>();
      } else if (key == "timings") {
        cfg.timings = v.get<bool>();
      } else {
        throw ConfigError(origin + ": field '" + key + "': unknown key");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(origin + ": field '" + key + "': " + e.what());
    }
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  apply_config_text(cfg, ss.str(), path);
}

namespace {

using Clock = std::chrono::steady_clock;

void add(RunResult& res, VerificationReport r, const RunConfig& cfg, Clock::time_point start) {
  if (cfg.timings) r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  res.reports.push_back(std::move(r));
}

bool sha_applies(const TorusSpec& t) {
  return t.family == Family::norm_one || (t.family == Family::quotient_by_gm && t.field.is_quadratic());
}

void run_one(RunResult& res, const RunConfig& cfg, const TorusSpec& t, Json& skipped) {
  const std::string& c = cfg.command;
  const bool all = c == "all";
  const std::uint64_t budget = cfg.effective_budget();
  const std::int64_t small = std::min<std::int64_t>(cfg.pmax, 13);
  auto skip = [&](const std::string& what, const std::string& why) {
    skipped.push_back({{"torus", t.to_string()}, {"identity", what}, {"reason", why}});
  };
  auto timed = [&](auto&& fn) {
    auto start = Clock::now();
    add(res, fn(), cfg, start);
  };

  if (all || c == "euler") timed([&] { return verify_euler(t, cfg.pmax); });
  if (all && !t.model) {
    skip("lifting", "no integral model for this torus");
    skip("density", "no integral model for this torus");
  } else {
    if (all || c == "lifting") timed([&] { return verify_lifting(t, small, cfg.kmax, budget); });
    if (all || c == "density") timed([&] { return verify_density(t, small, std::max(cfg.kmax, 6), budget); });
  }

  const bool rank0 = q_rank(t) == 0;
  if (all || c == "globalinv") {
    if (rank0) timed([&] { return verify_globalinv(t); });
    else if (all) skip("globalinv", "positive Q-rank");
    else throw AssumptionViolated("Assumption violated: Q-rank " + std::to_string(q_rank(t)));
  }
  if (all || c == "sha") {
    if (sha_applies(t)) timed([&] { return verify_sha(t); });
    else if (all) skip("sha", "knot group is modelled for norm-one tori only");
    else throw Unsupported("sha: only norm-one tori (and the quadratic quotient torus) are supported");
  }
  if (all || c == "tnc") {
    if (!rank0) {
      if (all) skip("tnc", "positive Q-rank");
      else throw AssumptionViolated("Assumption violated: Q-rank " + std::to_string(q_rank(t)));
    } else if (!t.field.is_quadratic()) {
      if (all) skip("tnc", "archimedean volume is implemented for quadratic fields only");
      else throw Unsupported("tnc: archimedean volume is implemented for quadratic fields only");
    } else {
      TncOptions opt;
      opt.tol = cfg.tol;
      opt.pmax = cfg.pmax;
      opt.budget = budget;
      timed([&] { return verify_tnc(t, opt); });
      timed([&] { return verify_sha_bk(t); });
    }
  }
}

}  // namespace

RunResult execute(const RunConfig& cfg) {
  RunResult res;
  try {
    cfg.validate();
    if (cfg.jobs > 0) kernels::set_worker_count(cfg.jobs);
    std::vector<TorusSpec> tori;
    for (const auto& s : cfg.tori) {
      try {
        tori.push_back(parse_torus(s));
      } catch (const DomainError& e) {
        throw ConfigError(std::string("field 'torus': ") + e.what());
      }
    }
    Json skipped = Json::array();
    for (const auto& t : tori) run_one(res, cfg, t, skipped);
    Json echo = cfg.echo();
    if (!skipped.empty()) echo["skipped"] = skipped;
    res.document = render_report(res.reports, echo);
    switch (overall_verdict(res.reports)) {
      case Verdict::pass: res.exit_code = kExitPass; break;
      case Verdict::fail: res.exit_code = kExitFail; break;
      case Verdict::inconclusive: res.exit_code = kExitInconclusive; break;
    }
  } catch (const ConfigError& e) {
    res.exit_code = kExitConfig;
    res.error = e.what();
  } catch (const AssumptionViolated& e) {
    res.exit_code = kExitConfig;
    res.error = e.what();
  } catch (const Unsupported& e) {
    res.exit_code = kExitConfig;
    res.error = e.what();
  } catch (const DomainError& e) {
    res.exit_code = kExitConfig;
    res.error = e.what();
  }
  if (res.exit_code == kExitConfig) {
    res.reports.clear();
    Json echo = Json::object();
    echo["error"] = res.error;
    res.document = render_report({}, echo);
  }
  return res;
}

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    o << text;
    o.flush();
    if (!o) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  fs::rename(tmp, target);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  RunResult res = execute(cfg);
  if (res.exit_code == kExitConfig) log << "error: " << res.error << "\n";
  for (const auto& r : res.reports) {
    log << to_string(r.verdict) << "  " << r.identity << "  " << r.torus;
    if (r.verdict != Verdict::pass) log << "  (" << r.cause << ")";
    log << "\n";
  }
  const std::string text = res.document.dump(2) + "\n";
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_atomically(cfg.out, text);
  }
  return res.exit_code;
}

}  // namespace torustam
