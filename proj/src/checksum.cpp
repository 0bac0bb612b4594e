#include "datashare/checksum.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <memory>
#include <set>

#include "datashare/error.hpp"
#include "walk.hpp"

namespace fs = std::filesystem;

namespace datashare {

namespace {

class Md5 {
 public:
  Md5() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_md5(), nullptr) != 1) {
      throw Error("cannot initialise MD5 digest");
    }
  }

  void update(const char* data, std::size_t size) {
    if (EVP_DigestUpdate(ctx_.get(), data, size) != 1) {
      throw Error("MD5 update failed");
    }
  }

  std::string hex() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_.get(), digest.data(), &len) != 1) {
      throw Error("MD5 finalisation failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out += kHex[digest[i] >> 4];
      out += kHex[digest[i] & 0xF];
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

bool is_hex_digest(std::string_view s) {
  return s.size() == 32 && std::all_of(s.begin(), s.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
         });
}

bool hidden(std::string_view rel) {
  std::size_t pos = 0;
  while (pos < rel.size()) {
    if (rel[pos] == '.') return true;
    std::size_t slash = rel.find('/', pos);
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
  }
  return false;
}

}  // namespace

std::string md5_hex(std::string_view bytes) {
  Md5 md5;
  md5.update(bytes.data(), bytes.size());
  return md5.hex();
}

std::string md5_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot read file");
  Md5 md5;
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    md5.update(buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  if (in.bad()) throw IoError(path.string(), "error while reading file");
  return md5.hex();
}

void check_manifest(const ChecksumManifest& manifest) {
  for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
    const auto& e = manifest.entries[i];
    if (!is_hex_digest(e.md5_hex)) {
      throw FormatError("malformed MD5 digest for " + e.path);
    }
    if (e.path.empty() || e.path.front() == '/' ||
        e.path.find_first_of("\n\r") != std::string::npos) {
      throw FormatError("invalid manifest path '" + e.path + "'");
    }
    fs::path p{e.path};
    if (std::any_of(p.begin(), p.end(),
                    [](const fs::path& part) { return part == ".."; })) {
      throw FormatError("manifest path escapes the package: " + e.path);
    }
    if (i > 0 && !(manifest.entries[i - 1].path < e.path)) {
      throw FormatError("manifest paths must be unique and sorted: " +
                        e.path);
    }
  }
}

bool default_manifest_filter(std::string_view relative_path) {
  return relative_path != kManifestFile && !hidden(relative_path);
}

ChecksumManifest compute_manifest(const fs::path& root,
                                  const PathFilter& include) {
  if (!fs::is_directory(root)) {
    throw IoError(root.string(), "not a readable directory");
  }
  ChecksumManifest manifest;
  for (const auto& rel : detail::walk_tree(root).files) {
    if (include && !include(rel)) continue;
    manifest.entries.push_back({rel, md5_file(root / rel)});
  }
  return manifest;
}

std::string manifest_to_text(const ChecksumManifest& manifest) {
  check_manifest(manifest);
  std::string out;
  for (const auto& e : manifest.entries) {
    out += e.md5_hex;
    out += "  ";
    out += e.path;
    out += '\n';
  }
  return out;
}

ChecksumManifest manifest_from_text(std::string_view text) {
  ChecksumManifest manifest;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos
                                          : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (line.empty()) continue;

    std::size_t space = line.find(' ');
    if (space == std::string_view::npos) {
      throw FormatError("manifest line is not '<md5>  <path>'", line_no);
    }
    std::string_view digest = line.substr(0, space);
    if (std::size_t colon = digest.find(':');
        colon != std::string_view::npos) {
      std::string_view algo = digest.substr(0, colon);
      if (algo != "md5" && algo != "MD5") {
        throw FormatError("unsupported digest algorithm '" +
                              std::string(algo) + "'",
                          line_no);
      }
      digest.remove_prefix(colon + 1);
    }
    std::string_view rest = line.substr(space + 1);
    if (rest.starts_with(' ') || rest.starts_with('*')) rest.remove_prefix(1);
    if (!is_hex_digest(digest) || rest.empty()) {
      throw FormatError("manifest line is not '<md5>  <path>'", line_no);
    }
    manifest.entries.push_back({std::string(rest), std::string(digest)});
  }
  std::sort(manifest.entries.begin(), manifest.entries.end(),
            [](const auto& a, const auto& b) { return a.path < b.path; });
  check_manifest(manifest);
  return manifest;
}

ChecksumManifest read_manifest(const fs::path& path) {
  return manifest_from_text(detail::read_file(path));
}

void write_manifest(const fs::path& path, const ChecksumManifest& manifest) {
  std::string text = manifest_to_text(manifest);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot write file");
  out << text;
  if (!out) throw IoError(path.string(), "error while writing file");
}

VerifyReport verify_manifest(const fs::path& root,
                             const ChecksumManifest& manifest,
                             const PathFilter& include) {
  check_manifest(manifest);
  VerifyReport report;
  std::set<std::string> listed;
  for (const auto& e : manifest.entries) {
    listed.insert(e.path);
    fs::path full = root / e.path;
    std::error_code ec;
    auto st = fs::symlink_status(full, ec);
    if (ec || !fs::is_regular_file(st)) {
      report.missing.push_back(e.path);
      continue;
    }
    if (md5_file(full) != e.md5_hex) report.mismatched.push_back(e.path);
  }
  for (const auto& rel : detail::walk_tree(root).files) {
    if (include && !include(rel)) continue;
    if (!listed.count(rel)) report.extra.push_back(rel);
  }
  return report;
}

}  // namespace datashare
