#include "datashare/package.hpp"

#include <sys/stat.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "datashare/error.hpp"
#include "walk.hpp"

namespace fs = std::filesystem;

namespace datashare {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view filename_of(std::string_view path) {
  std::size_t slash = path.rfind('/');
  return slash == std::string_view::npos ? path : path.substr(slash + 1);
}

// "README.en.md" -> "readme"
std::string base_key(std::string_view filename) {
  return lower(filename.substr(0, filename.find('.')));
}

std::string extension_of(std::string_view filename) {
  std::size_t dot = filename.rfind('.');
  if (dot == std::string_view::npos || dot == 0) return {};
  return lower(filename.substr(dot + 1));
}

std::string stem_of(std::string_view filename) {
  return fs::path(std::string(filename)).stem().string();
}

// Preference among several top-level README (or LICENSE, citation)
// candidates: .md, then no extension, then anything else.
int candidate_rank(std::string_view filename) {
  std::string ext = extension_of(filename);
  if (ext == "md") return 0;
  if (ext.empty()) return 1;
  return 2;
}

enum class Slot { raw, script, note, metadata, dictionary };

void place(FilePool& pool, Slot slot, FileRef ref) {
  switch (slot) {
    case Slot::raw: pool.raw_files.push_back(std::move(ref)); break;
    case Slot::script: pool.scripts.push_back(std::move(ref)); break;
    case Slot::note: pool.notes.push_back(std::move(ref)); break;
    case Slot::metadata: pool.metadata_files.push_back(std::move(ref)); break;
    case Slot::dictionary:
      pool.dictionary_files.push_back(std::move(ref));
      break;
  }
}

// Longest dataset name that `stem` equals or extends with a separator.
const std::string* owner_of(std::string_view stem,
                            const std::vector<std::string>& names) {
  const std::string* best = nullptr;
  for (const auto& name : names) {
    bool match = stem == name;
    if (!match && stem.size() > name.size() && stem.starts_with(name)) {
      char sep = stem[name.size()];
      match = sep == '-' || sep == '_' || sep == '.' || sep == ' ';
    }
    if (match && (!best || name.size() > best->size())) best = &name;
  }
  return best;
}

void sort_pool(FilePool& pool) {
  auto by_path = [](const FileRef& a, const FileRef& b) {
    return a.path < b.path;
  };
  for (auto* list : {&pool.raw_files, &pool.scripts, &pool.notes,
                     &pool.metadata_files, &pool.dictionary_files}) {
    std::sort(list->begin(), list->end(), by_path);
  }
}

}  // namespace

std::string_view to_string(FileKind kind) noexcept {
  switch (kind) {
    case FileKind::plain_text_table: return "plain_text_table";
    case FileKind::binary_data: return "binary_data";
    case FileKind::script: return "script";
    case FileKind::document: return "document";
    case FileKind::metadata: return "metadata";
    case FileKind::other: return "other";
  }
  return "other";
}

FileKind classify_file(std::string_view relative_path) {
  static const std::map<std::string, FileKind, std::less<>> kTable = {
      {"csv", FileKind::plain_text_table},
      {"tsv", FileKind::plain_text_table},
      {"txt", FileKind::plain_text_table},
      {"csvy", FileKind::plain_text_table},
      {"rds", FileKind::binary_data},
      {"rda", FileKind::binary_data},
      {"rdata", FileKind::binary_data},
      {"sav", FileKind::binary_data},
      {"dta", FileKind::binary_data},
      {"sas7bdat", FileKind::binary_data},
      {"xlsx", FileKind::binary_data},
      {"xls", FileKind::binary_data},
      {"parquet", FileKind::binary_data},
      {"feather", FileKind::binary_data},
      {"fits", FileKind::binary_data},
      {"r", FileKind::script},
      {"py", FileKind::script},
      {"jl", FileKind::script},
      {"sh", FileKind::script},
      {"do", FileKind::script},
      {"sas", FileKind::script},
      {"sql", FileKind::script},
      {"json", FileKind::metadata},
      {"yml", FileKind::metadata},
      {"yaml", FileKind::metadata},
      {"md", FileKind::document},
      {"pdf", FileKind::document},
  };
  std::string_view name = filename_of(relative_path);
  std::string ext = extension_of(name);
  bool top_level = relative_path.find('/') == std::string_view::npos;
  if (ext == "txt" && top_level) return FileKind::document;
  auto it = kTable.find(ext);
  return it == kTable.end() ? FileKind::other : it->second;
}

bool is_dictionary_name(std::string_view relative_path) {
  std::string stem = lower(stem_of(filename_of(relative_path)));
  return stem.ends_with("dictionary") || stem.ends_with("codebook") ||
         stem.ends_with("dict");
}

fs::path resolve_inside(const fs::path& root, std::string_view relative_path) {
  fs::path rel{std::string(relative_path)};
  if (rel.empty() || rel.is_absolute() || rel.has_root_name()) {
    throw UsageError("path must be relative to the package root: " +
                     std::string(relative_path));
  }
  for (const auto& part : rel) {
    if (part == "..") {
      throw UsageError("path escapes the package root: " +
                       std::string(relative_path));
    }
  }
  return root / rel;
}

std::vector<FileRef> DataPackage::all_files() const {
  std::vector<FileRef> out;
  auto add_pool = [&out](const FilePool& p) {
    for (const auto* list : {&p.raw_files, &p.scripts, &p.notes,
                             &p.metadata_files, &p.dictionary_files}) {
      out.insert(out.end(), list->begin(), list->end());
    }
  };
  for (const auto& ds : datasets) {
    out.insert(out.end(), ds.data_files.begin(), ds.data_files.end());
    add_pool(ds.attached);
  }
  add_pool(pool);
  for (const auto& ref : {readme, citation, manifest}) {
    if (ref) out.push_back(*ref);
  }
  if (license) {
    out.push_back({license->path, license->size_bytes,
                   classify_file(license->path)});
  }
  for (const auto* list : {&other_readmes, &documents, &unclassified}) {
    out.insert(out.end(), list->begin(), list->end());
  }
  std::sort(out.begin(), out.end(),
            [](const FileRef& a, const FileRef& b) { return a.path < b.path; });
  return out;
}

const Dataset* DataPackage::find_dataset(std::string_view name) const {
  for (const auto& ds : datasets) {
    if (ds.name == name) return &ds;
  }
  return nullptr;
}

DataPackage scan_package(const fs::path& root) {
  std::error_code ec;
  auto status = fs::status(root, ec);
  if (ec || !fs::exists(status)) {
    throw IoError(root.string(), "package root does not exist");
  }
  if (!fs::is_directory(status)) {
    throw IoError(root.string(), "package root is not a directory");
  }

  detail::TreeListing walk = detail::walk_tree(root);

  DataPackage pkg;
  pkg.root = root;
  pkg.skipped = std::move(walk.skipped);

  std::map<std::string, std::vector<FileRef>> top_candidates;
  std::map<std::string, std::vector<FileRef>> data_files;
  std::vector<std::pair<Slot, FileRef>> loose;

  for (const auto& rel : walk.files) {
    FileRef ref;
    ref.path = rel;
    ref.kind = classify_file(rel);
    ref.size_bytes = fs::file_size(root / rel, ec);
    if (ec) throw IoError((root / rel).string(), "cannot stat file");

    std::string_view name = filename_of(rel);
    std::string key = base_key(name);
    std::size_t slash = rel.find('/');

    if (slash == std::string::npos) {
      if (key == "readme" || key == "license" || key == "licence" ||
          key == "citation") {
        top_candidates[key == "licence" ? "license" : key].push_back(ref);
      } else if (rel == "checksums.txt") {
        pkg.manifest = ref;
      } else if (ref.kind == FileKind::document) {
        pkg.documents.push_back(ref);
      } else {
        pkg.unclassified.push_back(ref);
      }
      continue;
    }

    if (key == "readme") {
      pkg.other_readmes.push_back(ref);
      continue;
    }

    std::string dir = rel.substr(0, slash);
    bool dictionary = is_dictionary_name(rel);
    if (dir == "data") {
      if (dictionary) {
        loose.emplace_back(Slot::dictionary, ref);
      } else if (ref.kind == FileKind::plain_text_table ||
                 ref.kind == FileKind::binary_data) {
        data_files[stem_of(name)].push_back(ref);
      } else {
        pkg.unclassified.push_back(ref);
      }
    } else if (dir == "data-raw") {
      if (dictionary) {
        loose.emplace_back(Slot::dictionary, ref);
      } else if (ref.kind == FileKind::script) {
        loose.emplace_back(Slot::script, ref);
      } else if (ref.kind == FileKind::document) {
        loose.emplace_back(Slot::note, ref);
      } else {
        loose.emplace_back(Slot::raw, ref);
      }
    } else if (dir == "metadata") {
      loose.emplace_back(dictionary ? Slot::dictionary : Slot::metadata, ref);
    } else {
      pkg.unclassified.push_back(ref);
    }
  }

  for (auto& [key, candidates] : top_candidates) {
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const FileRef& a, const FileRef& b) {
                       return candidate_rank(a.path) < candidate_rank(b.path);
                     });
    FileRef chosen = candidates.front();
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      pkg.documents.push_back(candidates[i]);
    }
    if (key == "readme") {
      pkg.readme = chosen;
    } else if (key == "citation") {
      pkg.citation = chosen;
    } else {
      LicenseRef license;
      license.path = chosen.path;
      license.size_bytes = chosen.size_bytes;
      license.detected = detect_license(detail::read_file(root / chosen.path));
      pkg.license = license;
    }
  }
  std::sort(pkg.documents.begin(), pkg.documents.end(),
            [](const FileRef& a, const FileRef& b) { return a.path < b.path; });

  std::vector<std::string> names;
  for (auto& [name, files] : data_files) {
    Dataset ds;
    ds.name = name;
    ds.data_files = std::move(files);
    pkg.datasets.push_back(std::move(ds));
    names.push_back(name);
  }

  for (auto& [slot, ref] : loose) {
    const std::string* owner = nullptr;
    if (names.size() == 1) {
      owner = &names.front();
    } else {
      owner = owner_of(stem_of(filename_of(ref.path)), names);
    }
    if (!owner) {
      place(pkg.pool, slot, std::move(ref));
      continue;
    }
    auto it = std::find_if(pkg.datasets.begin(), pkg.datasets.end(),
                           [&](const Dataset& d) { return d.name == *owner; });
    place(it->attached, slot, std::move(ref));
  }
  for (auto& ds : pkg.datasets) sort_pool(ds.attached);
  sort_pool(pkg.pool);
  return pkg;
}

namespace detail {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

struct Walk {
  fs::path root;
  std::set<std::pair<dev_t, ino_t>> visited;
  std::vector<std::string> files;
  std::vector<std::string> skipped;

  void enter(const fs::path& dir, const std::string& rel) {
    struct stat st {};
    if (::stat(dir.c_str(), &st) != 0) {
      throw IoError(dir.string(), "cannot read directory");
    }
    if (!visited.emplace(st.st_dev, st.st_ino).second) {
      throw CycleError(rel.empty() ? std::string(".") : rel);
    }

    std::vector<std::pair<std::string, fs::file_status>> entries;
    std::error_code ec;
    fs::directory_iterator it(dir, ec);
    if (ec) throw IoError(dir.string(), "cannot read directory");
    for (; it != fs::directory_iterator(); it.increment(ec)) {
      if (ec) throw IoError(dir.string(), "cannot read directory");
      entries.emplace_back(it->path().filename().string(),
                           it->symlink_status());
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    for (const auto& [name, status] : entries) {
      std::string child = rel.empty() ? name : rel + "/" + name;
      if (fs::is_symlink(status)) {
        skipped.push_back(child);
      } else if (fs::is_directory(status)) {
        if (name.starts_with('.')) {
          skipped.push_back(child + "/");
        } else {
          enter(dir / name, child);
        }
      } else if (fs::is_regular_file(status)) {
        files.push_back(child);
      } else {
        skipped.push_back(child);
      }
    }
  }
};

}  // namespace

TreeListing walk_tree(const fs::path& root) {
  Walk walk{root, {}, {}, {}};
  walk.enter(root, "");
  std::sort(walk.files.begin(), walk.files.end());
  std::sort(walk.skipped.begin(), walk.skipped.end());
  return {std::move(walk.files), std::move(walk.skipped)};
}

}  // namespace detail

}  // namespace datashare
