#pragma once

// Shared helpers for the test binaries: scratch directories, file I/O,
// seeded random generators and a shell runner for external oracles.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testing {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 rng{std::random_device{}()};
    path_ = fs::temp_directory_path() /
            ("datashare-test-" + std::to_string(rng()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& rel) const { return path_ / rel; }

 private:
  fs::path path_;
};

inline void write_file(const fs::path& path, const std::string& bytes) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << bytes;
}

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Every regular file below `root` with its bytes, keyed by relative path.
inline std::vector<std::pair<std::string, std::string>> snapshot(
    const fs::path& root) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) {
      out.emplace_back(fs::relative(e.path(), root).generic_string(),
                       read_file(e.path()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Shell {
  int status = -1;
  std::string output;
};

inline Shell shell(const std::string& command) {
  Shell result;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), n);
  }
  int raw = ::pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }
  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

  std::string word(std::size_t min_len = 1, std::size_t max_len = 8) {
    static const std::string kChars = "abcdefghijklmnopqrstuvwxyz";
    std::string out;
    std::size_t n = between(min_len, max_len);
    for (std::size_t i = 0; i < n; ++i) out += kChars[below(kChars.size())];
    return out;
  }

  // Cell text drawn to exercise quoting: delimiters, quotes, line breaks,
  // surrounding spaces, empty strings and non-ASCII text.
  std::string cell() {
    switch (below(10)) {
      case 0: return "";
      case 1: return std::to_string(below(100000));
      case 2: return word() + "," + word();
      case 3: return word() + "\"" + word() + "\"";
      case 4: return word() + "\n" + word();
      case 5: return " " + word() + " ";
      case 6: return word() + "\r\n" + word();
      case 7: return "caf\xc3\xa9 " + word();
      case 8: return word() + ";" + word() + "\t" + word();
      default: return word();
    }
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testing
