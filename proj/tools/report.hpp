#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "selfloop/energy.hpp"
#include "selfloop/verify.hpp"

namespace selfloop::cli {

enum class OutputFormat { kJson, kCsv, kText };

OutputFormat parse_format(std::string_view tag);

/// 12 significant digits; trailing zeros are kept only when the printed
/// value is itself rounded.
std::string format_real(double x);

/// x rounded to 12 significant digits, for JSON output.
double round_real(double x);

nlohmann::ordered_json to_json(const EnergyReport& r);
nlohmann::ordered_json to_json(const CheckSummary& s);
nlohmann::ordered_json to_json(const ClusteredSpectrum& c);

std::string emit_report(const EnergyReport& r, OutputFormat format, bool with_header = true);
std::string emit_report(const CheckSummary& s, OutputFormat format);

}  // namespace selfloop::cli
