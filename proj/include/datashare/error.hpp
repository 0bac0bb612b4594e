#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace datashare {

// Root of every error the library throws. The CLI maps the concrete
// subclass onto an exit code, so new failure modes should derive from one
// of the classes below rather than from Error directly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file or directory could not be read or written.
class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what)
      : Error(what + ": " + path), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Directory traversal revisited a directory it had already entered.
class CycleError : public IoError {
 public:
  explicit CycleError(std::string dir)
      : IoError(std::move(dir), "directory cycle detected at") {}
};

// Input bytes are not in the expected format. `row` is the 1-based record
// number (header counts as record 1) when the problem has a location.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what,
                       std::optional<std::size_t> row = std::nullopt)
      : Error(row ? what + " at row " + std::to_string(*row) : what),
        row_(row) {}

  std::optional<std::size_t> row() const noexcept { return row_; }

 private:
  std::optional<std::size_t> row_;
};

// The caller asked for something that cannot be done as requested: bad
// flags, invalid configuration, a destination that would be clobbered.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace datashare
