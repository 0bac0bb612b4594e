#pragma once

#include <optional>
#include <string_view>

namespace datashare {

enum class LicenseKind { cc_by_4, cc0_1, odbl, unknown };

// SPDX identifier ("CC-BY-4.0", "CC0-1.0", "ODbL-1.0"); "unknown" otherwise.
std::string_view spdx_id(LicenseKind kind) noexcept;
std::string_view display_name(LicenseKind kind) noexcept;

// Accepts the CLI spellings cc0, ccby, odbl and the SPDX identifiers, case
// insensitively.
std::optional<LicenseKind> parse_license_name(std::string_view name);

// Full legal text of a supported license, LF line endings.
std::string_view license_text(LicenseKind kind);

// Lowercases the text, collapses all whitespace runs to one space and looks
// for each license's title line. Returns unknown when no title, or more than
// one distinct title, is present.
LicenseKind detect_license(std::string_view text);

}  // namespace datashare
