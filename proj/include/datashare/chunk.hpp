#pragma once

// Splitting large plain-text tables into row chunks named
// <stem>-1.<ext>, <stem>-2.<ext>, ... and putting them back together.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "datashare/tabular.hpp"

namespace datashare {

struct ChunkPlan {
  std::filesystem::path source;
  std::size_t max_rows_per_chunk = 0;
  std::size_t data_rows = 0;
  std::vector<std::filesystem::path> chunk_paths;
};

// "teaching", 2, ".csv" -> "teaching-2.csv"
std::string chunk_name(std::string_view stem, std::size_t index,
                       std::string_view extension);

// Pure planning step: ceil(data_rows / max_rows) chunks, at least one, next
// to the source file. Throws UsageError when max_rows is zero.
ChunkPlan plan_chunks(const std::filesystem::path& source,
                      std::size_t data_rows, std::size_t max_rows);

// Writes the chunks. Each chunk repeats the header and is serialized in the
// source dialect with LF line endings; the source is not modified. When no
// dialect is given the table is read like any data file. Throws FormatError
// for headerless sources and UsageError if any chunk file already exists
// (nothing is written in that case).
ChunkPlan chunk_table(const std::filesystem::path& source,
                      std::size_t max_rows,
                      std::optional<Dialect> dialect = std::nullopt);

// Concatenates chunks given in sequence order: header once, then every data
// row. Throws FormatError on a gap or disorder in the sequence numbers, on
// chunks from different series, or when a header differs from the first
// chunk's (the message names the offending file).
std::string unchunk(std::span<const std::filesystem::path> chunk_paths,
                    std::optional<Dialect> dialect = std::nullopt);

}  // namespace datashare
