#include "hmat/report.hpp"

#include <sstream>

namespace hmat {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    default:
      return "skipped";
  }
}

Json report_to_json(const VerificationReport& report) {
  Json args = Json::object();
  for (const auto& [key, value] : report.arguments) args[key] = value;
  Json checks = Json::array();
  for (const CheckRecord& record : report.checks) {
    Json r;
    r["name"] = record.name;
    r["anchor"] = record.anchor;
    r["verdict"] = to_string(record.verdict);
    r["witness"] = record.witness;
    checks.push_back(std::move(r));
  }
  Json out;
  out["command"] = report.command;
  out["arguments"] = std::move(args);
  out["checks"] = std::move(checks);
  out["output"] = report.output;
  out["verdict"] = report.ok ? "pass" : "fail";
  return out;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << report.command;
  for (const auto& [key, value] : report.arguments) out << " " << key << "=" << value;
  out << "\n";
  for (const CheckRecord& record : report.checks) {
    out << "  [" << to_string(record.verdict) << "] " << record.name << " "
        << record.anchor;
    if (!record.witness_text.empty()) out << ": " << record.witness_text;
    out << "\n";
  }
  out << "verdict: " << (report.ok ? "pass" : "fail") << " (" << report.elapsed_ms
      << " ms)\n";
  return out.str();
}

}  // namespace hmat
