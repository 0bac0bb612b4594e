#pragma once

// Reproducible tar archives of a data package.

#include <filesystem>
#include <string>

#include "datashare/checksum.hpp"
#include "datashare/error.hpp"

namespace datashare {

// The manifest did not match the package contents; nothing was written.
class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(VerifyReport report);
  const VerifyReport& report() const noexcept { return report_; }

 private:
  VerifyReport report_;
};

// Verifies `manifest` against `root`, then writes an uncompressed POSIX
// ustar archive holding every manifest entry plus the manifest itself as
// checksums.txt, sorted by path. Headers carry mode 0644, uid/gid 0, empty
// owner names and mtime 0, and no directory entries are emitted, so the
// bytes depend only on file contents and relative paths. Paths that do not
// fit the ustar name fields get a pax extended header.
//
// Throws VerificationFailed when verification does not pass, UsageError when
// the manifest lists checksums.txt itself, and IoError if a file changes
// size while it is being archived. The archive is written to a temporary
// file next to `archive` and renamed into place on success.
void pack(const std::filesystem::path& root, const ChecksumManifest& manifest,
          const std::filesystem::path& archive);

}  // namespace datashare
