#include "report.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace selfloop::cli {

namespace {

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

OutputFormat parse_format(std::string_view tag) {
  if (tag == "json") return OutputFormat::kJson;
  if (tag == "csv") return OutputFormat::kCsv;
  if (tag == "text") return OutputFormat::kText;
  throw std::invalid_argument("unknown format '" + std::string(tag) + "'");
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  if (std::strtod(buf, nullptr) != x) std::snprintf(buf, sizeof buf, "%#.12g", x);
  return buf;
}

double round_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

nlohmann::ordered_json to_json(const EnergyReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["alpha"] = r.alpha;
  j["shift"] = round_real(r.shift);
  j["energy"] = round_real(r.energy);
  auto& spectrum = j["spectrum"] = nlohmann::ordered_json::array();
  for (double x : r.spectrum.values()) spectrum.push_back(round_real(x));
  return j;
}

nlohmann::ordered_json to_json(const CheckSummary& s) {
  nlohmann::ordered_json j;
  j["total"] = s.total;
  j["passed"] = s.passed;
  auto& failures = j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : s.failures) failures.push_back({{"id", f.input_id}, {"detail", f.detail}});
  return j;
}

nlohmann::ordered_json to_json(const ClusteredSpectrum& c) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& cl : c) j.push_back({round_real(cl.value), cl.multiplicity});
  return j;
}

std::string emit_report(const EnergyReport& r, OutputFormat format, bool with_header) {
  switch (format) {
    case OutputFormat::kJson:
      return to_json(r).dump() + "\n";
    case OutputFormat::kCsv: {
      std::string out = with_header ? "n,alpha,shift,energy\n" : "";
      return out + std::to_string(r.n) + "," + std::to_string(r.alpha) + "," +
             format_real(r.shift) + "," + format_real(r.energy) + "\n";
    }
    case OutputFormat::kText: {
      std::string out = "n=" + std::to_string(r.n) + " alpha=" + std::to_string(r.alpha) +
                        " shift=" + format_real(r.shift) + " energy=" + format_real(r.energy) +
                        "\nspectrum:";
      for (double x : r.spectrum.values()) out += " " + format_real(x);
      return out + "\n";
    }
  }
  return {};
}

std::string emit_report(const CheckSummary& s, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return to_json(s).dump() + "\n";
    case OutputFormat::kCsv: {
      std::string out = "total,passed,failed\n" + std::to_string(s.total) + "," +
                        std::to_string(s.passed) + "," + std::to_string(s.failures.size()) + "\n";
      if (s.failures.empty()) return out;
      out += "\nid,detail\n";
      for (const auto& f : s.failures) out += csv_field(f.input_id) + "," + csv_field(f.detail) + "\n";
      return out;
    }
    case OutputFormat::kText: {
      std::string out = std::to_string(s.total) + " checks, " + std::to_string(s.passed) +
                        " passed, " + std::to_string(s.failures.size()) + " failures\n";
      for (const auto& f : s.failures) out += "  FAIL " + f.input_id + ": " + f.detail + "\n";
      return out;
    }
  }
  return {};
}

}  // namespace selfloop::cli
