#pragma once

// MD5 checksum manifests in the md5sum text format: one "<hex>  <path>"
// line per file, LF terminated, sorted by path.

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace datashare {

std::string md5_hex(std::string_view bytes);
std::string md5_file(const std::filesystem::path& path);

struct ManifestEntry {
  std::string path;
  std::string md5_hex;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct ChecksumManifest {
  std::vector<ManifestEntry> entries;

  friend bool operator==(const ChecksumManifest&,
                         const ChecksumManifest&) = default;
};

inline constexpr std::string_view kManifestFile = "checksums.txt";

// Throws FormatError unless paths are unique, sorted, relative, free of
// ".." and line breaks, and every digest is 32 lowercase hex digits.
void check_manifest(const ChecksumManifest& manifest);

using PathFilter = std::function<bool(std::string_view relative_path)>;

// Everything except the manifest itself at the top level. Hidden
// directories and symlinks are never listed.
bool default_manifest_filter(std::string_view relative_path);

// Digests raw file bytes. Throws IoError naming any unreadable file.
ChecksumManifest compute_manifest(
    const std::filesystem::path& root,
    const PathFilter& include = default_manifest_filter);

std::string manifest_to_text(const ChecksumManifest& manifest);

// Reads md5sum-style lines. The digest may carry an algorithm prefix
// ("md5:<hex>"); only md5 is supported. A '*' before the path (binary mode
// marker) is accepted. Entries are returned sorted.
ChecksumManifest manifest_from_text(std::string_view text);
ChecksumManifest read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path,
                    const ChecksumManifest& manifest);

struct VerifyReport {
  std::vector<std::string> mismatched;
  std::vector<std::string> missing;
  std::vector<std::string> extra;  // informational

  bool ok() const noexcept { return mismatched.empty() && missing.empty(); }
};

VerifyReport verify_manifest(
    const std::filesystem::path& root, const ChecksumManifest& manifest,
    const PathFilter& include = default_manifest_filter);

}  // namespace datashare
