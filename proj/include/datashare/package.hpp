#pragma once

// Inventory of a data repository laid out as
//
//   README.md  LICENSE  citation  checksums.txt
//   data/       analysis-ready tables, one dataset per file stem
//   data-raw/   raw data as received, plus the scripts that tidy it
//   metadata/   Table Schema JSON and data dictionaries

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "datashare/license.hpp"

namespace datashare {

enum class FileKind {
  plain_text_table,
  binary_data,
  script,
  document,
  metadata,
  other,
};

std::string_view to_string(FileKind kind) noexcept;

// Pure function of the extension (case-insensitive). A .txt file at the top
// level is a document; anywhere else it is a table.
FileKind classify_file(std::string_view relative_path);

struct FileRef {
  std::string path;  // relative to the package root, '/' separated
  std::uintmax_t size_bytes = 0;
  FileKind kind = FileKind::other;

  friend bool operator==(const FileRef&, const FileRef&) = default;
};

struct LicenseRef {
  std::string path;
  std::uintmax_t size_bytes = 0;
  LicenseKind detected = LicenseKind::unknown;

  friend bool operator==(const LicenseRef&, const LicenseRef&) = default;
};

// Files below data-raw/ and metadata/ that do not belong to one dataset.
struct FilePool {
  std::vector<FileRef> raw_files;
  std::vector<FileRef> scripts;
  std::vector<FileRef> notes;  // markdown processing notes in data-raw/
  std::vector<FileRef> metadata_files;
  std::vector<FileRef> dictionary_files;

  bool empty() const noexcept {
    return raw_files.empty() && scripts.empty() && notes.empty() &&
           metadata_files.empty() && dictionary_files.empty();
  }

  friend bool operator==(const FilePool&, const FilePool&) = default;
};

struct Dataset {
  std::string name;
  std::vector<FileRef> data_files;
  FilePool attached;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

struct DataPackage {
  std::filesystem::path root;
  std::vector<Dataset> datasets;  // sorted by name
  std::optional<FileRef> readme;
  std::optional<LicenseRef> license;
  std::optional<FileRef> citation;
  std::optional<FileRef> manifest;  // top-level checksums.txt
  FilePool pool;
  std::vector<FileRef> other_readmes;  // README files below the top level
  std::vector<FileRef> documents;      // remaining top-level documents
  std::vector<FileRef> unclassified;
  // Hidden directories and symlinks, recorded but not descended into.
  std::vector<std::string> skipped;

  // Every FileRef in the inventory, sorted by path.
  std::vector<FileRef> all_files() const;
  const Dataset* find_dataset(std::string_view name) const;

  friend bool operator==(const DataPackage&, const DataPackage&) = default;
};

// True for files the layout treats as data dictionaries: a stem ending in
// "dictionary", "codebook" or "dict".
bool is_dictionary_name(std::string_view relative_path);

// Walks `root` without following symlinks. Listing order is lexicographic by
// path. Throws IoError when root is missing or unreadable and CycleError when
// a directory is reached twice.
DataPackage scan_package(const std::filesystem::path& root);

// Joins a stored relative path onto a root. Throws UsageError if the path is
// absolute or would step outside the root.
std::filesystem::path resolve_inside(const std::filesystem::path& root,
                                     std::string_view relative_path);

}  // namespace datashare
