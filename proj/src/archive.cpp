#include "datashare/archive.hpp"

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace fs = std::filesystem;

namespace datashare {

namespace {

constexpr std::size_t kBlock = 512;
// Largest size the 11 octal digits of a ustar size field can hold.
constexpr std::uintmax_t kMaxUstarSize = 077777777777ULL;

struct UstarHeader {
  char name[100];
  char mode[8];
  char uid[8];
  char gid[8];
  char size[12];
  char mtime[12];
  char checksum[8];
  char typeflag;
  char linkname[100];
  char magic[6];
  char version[2];
  char uname[32];
  char gname[32];
  char devmajor[8];
  char devminor[8];
  char prefix[155];
  char pad[12];
};
static_assert(sizeof(UstarHeader) == kBlock);

void put_octal(char* field, std::size_t width, std::uintmax_t value) {
  // width - 1 digits followed by NUL
  std::snprintf(field, width, "%0*jo", static_cast<int>(width - 1), value);
}

UstarHeader make_header(char typeflag, std::uintmax_t size) {
  UstarHeader h{};
  put_octal(h.mode, sizeof h.mode, 0644);
  put_octal(h.uid, sizeof h.uid, 0);
  put_octal(h.gid, sizeof h.gid, 0);
  put_octal(h.size, sizeof h.size, size > kMaxUstarSize ? 0 : size);
  put_octal(h.mtime, sizeof h.mtime, 0);
  h.typeflag = typeflag;
  std::memcpy(h.magic, "ustar", 6);
  std::memcpy(h.version, "00", 2);
  return h;
}

void seal(UstarHeader& h) {
  std::memset(h.checksum, ' ', sizeof h.checksum);
  unsigned sum = 0;
  const auto* bytes = reinterpret_cast<const unsigned char*>(&h);
  for (std::size_t i = 0; i < kBlock; ++i) sum += bytes[i];
  std::snprintf(h.checksum, sizeof h.checksum, "%06o", sum);
  h.checksum[7] = ' ';
}

// Splits a path into the ustar prefix and name fields at a '/'.
bool split_ustar_path(const std::string& path, UstarHeader& h) {
  if (path.size() < sizeof h.name) {
    std::memcpy(h.name, path.data(), path.size());
    return true;
  }
  for (std::size_t slash = path.find('/'); slash != std::string::npos;
       slash = path.find('/', slash + 1)) {
    std::size_t rest = path.size() - slash - 1;
    if (slash <= sizeof h.prefix && rest <= sizeof h.name && rest > 0) {
      std::memcpy(h.prefix, path.data(), slash);
      std::memcpy(h.name, path.data() + slash + 1, rest);
      return true;
    }
  }
  return false;
}

// "<len> key=value\n" where <len> counts the whole record.
std::string pax_record(const std::string& key, const std::string& value) {
  std::size_t body = 1 + key.size() + 1 + value.size() + 1;
  std::size_t len = body + 1;
  while (std::to_string(len).size() + body != len) {
    len = std::to_string(len).size() + body;
  }
  return std::to_string(len) + " " + key + "=" + value + "\n";
}

class TarWriter {
 public:
  explicit TarWriter(const fs::path& path)
      : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw IoError(path.string(), "cannot write archive");
  }

  void add_bytes(const std::string& name, const std::string& bytes) {
    header(name, bytes.size());
    write(bytes.data(), bytes.size());
    pad(bytes.size());
  }

  void add_file(const std::string& name, const fs::path& source) {
    std::error_code ec;
    std::uintmax_t size = fs::file_size(source, ec);
    if (ec) throw IoError(source.string(), "cannot stat file");
    std::ifstream in(source, std::ios::binary);
    if (!in) throw IoError(source.string(), "cannot read file");
    header(name, size);
    std::array<char, 1 << 16> buf;
    std::uintmax_t copied = 0;
    while (in) {
      in.read(buf.data(), buf.size());
      auto n = static_cast<std::size_t>(in.gcount());
      copied += n;
      if (copied > size) break;
      write(buf.data(), n);
    }
    if (in.bad() || copied != size) {
      throw IoError(source.string(), "file changed while archiving");
    }
    pad(size);
  }

  void finish() {
    static const std::array<char, 2 * kBlock> zeros{};
    write(zeros.data(), zeros.size());
    out_.close();
    if (!out_) throw IoError(path_.string(), "error while writing archive");
  }

 private:
  void header(const std::string& name, std::uintmax_t size) {
    UstarHeader h = make_header('0', size);
    bool fits = split_ustar_path(name, h);
    if (!fits || size > kMaxUstarSize) {
      std::string records;
      if (!fits) records += pax_record("path", name);
      if (size > kMaxUstarSize) records += pax_record("size", std::to_string(size));
      UstarHeader x = make_header('x', records.size());
      std::string xname = "PaxHeader/" + name.substr(name.rfind('/') + 1);
      std::memcpy(x.name, xname.data(),
                  std::min(xname.size(), sizeof x.name - 1));
      seal(x);
      write(reinterpret_cast<const char*>(&x), kBlock);
      write(records.data(), records.size());
      pad(records.size());
      if (!fits) {
        std::memset(h.name, 0, sizeof h.name);
        std::memset(h.prefix, 0, sizeof h.prefix);
        std::memcpy(h.name, name.data(),
                    std::min(name.size(), sizeof h.name - 1));
      }
    }
    seal(h);
    write(reinterpret_cast<const char*>(&h), kBlock);
  }

  void write(const char* data, std::size_t n) {
    out_.write(data, static_cast<std::streamsize>(n));
    if (!out_) throw IoError(path_.string(), "error while writing archive");
  }

  void pad(std::uintmax_t size) {
    static const std::array<char, kBlock> zeros{};
    std::size_t rem = static_cast<std::size_t>(size % kBlock);
    if (rem) write(zeros.data(), kBlock - rem);
  }

  fs::path path_;
  std::ofstream out_;
};

}  // namespace

VerificationFailed::VerificationFailed(VerifyReport report)
    : Error("manifest verification failed: " +
            std::to_string(report.mismatched.size()) + " mismatched, " +
            std::to_string(report.missing.size()) + " missing"),
      report_(std::move(report)) {}

void pack(const fs::path& root, const ChecksumManifest& manifest,
          const fs::path& archive) {
  check_manifest(manifest);
  for (const auto& e : manifest.entries) {
    if (e.path == kManifestFile) {
      throw UsageError("the manifest must not list checksums.txt itself");
    }
  }
  VerifyReport report = verify_manifest(root, manifest);
  if (!report.ok()) throw VerificationFailed(std::move(report));

  std::string manifest_text = manifest_to_text(manifest);
  fs::path partial = archive;
  partial += ".partial";
  try {
    TarWriter tar(partial);
    bool manifest_written = false;
    for (const auto& e : manifest.entries) {
      if (!manifest_written && std::string_view(e.path) > kManifestFile) {
        tar.add_bytes(std::string(kManifestFile), manifest_text);
        manifest_written = true;
      }
      tar.add_file(e.path, root / e.path);
    }
    if (!manifest_written) {
      tar.add_bytes(std::string(kManifestFile), manifest_text);
    }
    tar.finish();
  } catch (...) {
    std::error_code ec;
    fs::remove(partial, ec);
    throw;
  }
  std::error_code ec;
  fs::rename(partial, archive, ec);
  if (ec) throw IoError(archive.string(), "cannot move archive into place");
}

}  // namespace datashare
