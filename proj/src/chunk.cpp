#include "datashare/chunk.hpp"

#include <charconv>
#include <fstream>

#include "datashare/error.hpp"
#include "walk.hpp"

namespace fs = std::filesystem;

namespace datashare {

namespace {

struct ChunkName {
  std::string stem;
  std::size_t index = 0;
  std::string extension;
};

std::optional<ChunkName> split_chunk_name(const fs::path& path) {
  std::string stem = path.stem().string();
  std::size_t dash = stem.rfind('-');
  if (dash == std::string::npos || dash + 1 == stem.size()) return std::nullopt;
  std::string_view digits = std::string_view(stem).substr(dash + 1);
  if (digits.front() == '0') return std::nullopt;
  ChunkName out;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), out.index);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  out.stem = stem.substr(0, dash);
  out.extension = path.extension().string();
  return out;
}

CsvTable read_chunk(const fs::path& path, const std::optional<Dialect>& dialect) {
  std::string bytes = detail::read_file(path);
  if (dialect) {
    Dialect d = *dialect;
    d.has_header = true;
    return parse_table(bytes, d);
  }
  return load_table(bytes, path.generic_string());
}

}  // namespace

std::string chunk_name(std::string_view stem, std::size_t index,
                       std::string_view extension) {
  return std::string(stem) + "-" + std::to_string(index) +
         std::string(extension);
}

ChunkPlan plan_chunks(const fs::path& source, std::size_t data_rows,
                      std::size_t max_rows) {
  if (max_rows == 0) throw UsageError("--max-rows must be at least 1");
  ChunkPlan plan;
  plan.source = source;
  plan.max_rows_per_chunk = max_rows;
  plan.data_rows = data_rows;
  std::size_t n = data_rows == 0 ? 1 : (data_rows + max_rows - 1) / max_rows;
  std::string stem = source.stem().string();
  std::string ext = source.extension().string();
  for (std::size_t k = 1; k <= n; ++k) {
    plan.chunk_paths.push_back(source.parent_path() / chunk_name(stem, k, ext));
  }
  return plan;
}

ChunkPlan chunk_table(const fs::path& source, std::size_t max_rows,
                      std::optional<Dialect> dialect) {
  if (max_rows == 0) throw UsageError("--max-rows must be at least 1");
  if (source.extension() == ".csvy") {
    throw UsageError("chunking csvy files is not supported: " +
                     source.string());
  }
  CsvTable table = read_chunk(source, dialect);
  if (looks_headerless(table.header)) {
    throw FormatError("source has no header row: " + source.string());
  }

  ChunkPlan plan = plan_chunks(source, table.rows.size(), max_rows);
  for (const auto& path : plan.chunk_paths) {
    if (fs::exists(fs::symlink_status(path))) {
      throw UsageError("refusing to overwrite existing chunk " +
                       path.string());
    }
  }

  Dialect out_dialect = table.dialect;
  out_dialect.line_ending = LineEnding::lf;
  out_dialect.has_header = true;
  for (std::size_t k = 0; k < plan.chunk_paths.size(); ++k) {
    CsvTable chunk;
    chunk.header = table.header;
    chunk.dialect = out_dialect;
    std::size_t begin = k * max_rows;
    std::size_t end = std::min(table.rows.size(), begin + max_rows);
    chunk.rows.assign(table.rows.begin() + static_cast<std::ptrdiff_t>(begin),
                      table.rows.begin() + static_cast<std::ptrdiff_t>(end));
    std::ofstream out(plan.chunk_paths[k], std::ios::binary);
    if (!out) throw IoError(plan.chunk_paths[k].string(), "cannot write file");
    out << serialize_table(chunk);
    if (!out) {
      throw IoError(plan.chunk_paths[k].string(), "error while writing file");
    }
  }
  return plan;
}

std::string unchunk(std::span<const fs::path> chunk_paths,
                    std::optional<Dialect> dialect) {
  if (chunk_paths.empty()) throw UsageError("no chunks given");

  std::optional<ChunkName> first;
  for (std::size_t i = 0; i < chunk_paths.size(); ++i) {
    auto name = split_chunk_name(chunk_paths[i]);
    if (!name) {
      throw FormatError("not a chunk name (<stem>-<k>.<ext>): " +
                        chunk_paths[i].string());
    }
    if (!first) first = name;
    if (name->stem != first->stem || name->extension != first->extension) {
      throw FormatError("chunk belongs to a different series: " +
                        chunk_paths[i].string());
    }
    if (name->index > i + 1) {
      throw FormatError("gap in chunk sequence: missing " +
                        chunk_name(first->stem, i + 1, first->extension));
    }
    if (name->index != i + 1) {
      throw FormatError("chunk out of order or repeated: " +
                        chunk_paths[i].string());
    }
  }

  CsvTable merged = read_chunk(chunk_paths.front(), dialect);
  merged.dialect.line_ending = LineEnding::lf;
  merged.dialect.has_header = true;
  for (std::size_t i = 1; i < chunk_paths.size(); ++i) {
    CsvTable next =
        read_chunk(chunk_paths[i], dialect ? dialect : merged.dialect);
    if (next.header != merged.header) {
      throw FormatError("header differs from the first chunk: " +
                        chunk_paths[i].string());
    }
    for (auto& row : next.rows) merged.rows.push_back(std::move(row));
  }
  return serialize_table(merged);
}

}  // namespace datashare
