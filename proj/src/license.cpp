#include "datashare/license.hpp"

#include <array>
#include <cctype>
#include <string>

#include "datashare/error.hpp"
#include "license_texts.hpp"

namespace datashare {

namespace {

struct LicenseInfo {
  LicenseKind kind;
  std::string_view spdx;
  std::string_view display;
  std::string_view cli;
  std::string_view title;  // normalized form
};

constexpr std::array<LicenseInfo, 3> kLicenses = {{
    {LicenseKind::cc_by_4, "CC-BY-4.0",
     "Creative Commons Attribution 4.0 International (CC BY 4.0)", "ccby",
     "creative commons attribution 4.0 international public license"},
    {LicenseKind::cc0_1, "CC0-1.0", "Creative Commons CC0 1.0 Universal",
     "cc0", "cc0 1.0 universal"},
    {LicenseKind::odbl, "ODbL-1.0",
     "Open Data Commons Open Database License (ODbL) 1.0", "odbl",
     "open data commons open database license (odbl)"},
}};

std::string fold(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool space = false;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += static_cast<char>(std::tolower(c));
  }
  return out;
}

}  // namespace

std::string_view spdx_id(LicenseKind kind) noexcept {
  for (const auto& l : kLicenses) {
    if (l.kind == kind) return l.spdx;
  }
  return "unknown";
}

std::string_view display_name(LicenseKind kind) noexcept {
  for (const auto& l : kLicenses) {
    if (l.kind == kind) return l.display;
  }
  return "unrecognised license";
}

std::optional<LicenseKind> parse_license_name(std::string_view name) {
  std::string key = fold(name);
  for (const auto& l : kLicenses) {
    if (key == l.cli || key == fold(l.spdx)) return l.kind;
  }
  return std::nullopt;
}

std::string_view license_text(LicenseKind kind) {
  switch (kind) {
    case LicenseKind::cc_by_4: return detail::cc_by_4_text;
    case LicenseKind::cc0_1: return detail::cc0_1_text;
    case LicenseKind::odbl: return detail::odbl_1_text;
    case LicenseKind::unknown: break;
  }
  throw UsageError("no license text for an unrecognised license");
}

LicenseKind detect_license(std::string_view text) {
  std::string folded = fold(text);
  LicenseKind found = LicenseKind::unknown;
  for (const auto& l : kLicenses) {
    if (folded.find(l.title) == std::string::npos) continue;
    if (found != LicenseKind::unknown) return LicenseKind::unknown;
    found = l.kind;
  }
  return found;
}

}  // namespace datashare
