#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace datashare::detail {

struct TreeListing {
  std::vector<std::string> files;    // regular files, '/' separated, sorted
  std::vector<std::string> skipped;  // symlinks, hidden dirs ("x/"), specials
};

// Lists `root` recursively without following symlinks or entering hidden
// directories. Throws IoError / CycleError.
TreeListing walk_tree(const std::filesystem::path& root);

std::string read_file(const std::filesystem::path& path);

}  // namespace datashare::detail
