#include "yaml_subset.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <yaml-cpp/eventhandler.h>
#include <yaml-cpp/yaml.h>

#include "datashare/error.hpp"
#include "datashare/values.hpp"

namespace datashare::detail {

namespace {

using Json = nlohmann::ordered_json;

std::string where(const YAML::Mark& mark) {
  return " (line " + std::to_string(mark.line + 1) + ", column " +
         std::to_string(mark.column + 1) + ")";
}

Json resolve_plain(const std::string& value) {
  if (value.empty() || value == "~" || value == "null" || value == "Null" ||
      value == "NULL") {
    return nullptr;
  }
  if (value == "true" || value == "True" || value == "TRUE") return true;
  if (value == "false" || value == "False" || value == "FALSE") return false;
  if (is_integer_token(value)) {
    errno = 0;
    char* end = nullptr;
    long long n = std::strtoll(value.c_str(), &end, 10);
    if (errno == 0 && end == value.c_str() + value.size()) return n;
    return value;
  }
  if (is_number_token(value)) {
    return std::strtod(value.c_str(), nullptr);
  }
  return value;
}

class JsonBuilder : public YAML::EventHandler {
 public:
  Json take() { return std::move(root_).value_or(nullptr); }

  void OnDocumentStart(const YAML::Mark& mark) override {
    if (++documents_ > 1) {
      throw FormatError("front matter must be a single YAML document" +
                        where(mark));
    }
  }
  void OnDocumentEnd() override {}

  void OnNull(const YAML::Mark& mark, YAML::anchor_t anchor) override {
    reject_anchor(mark, anchor);
    if (expecting_key()) {
      throw FormatError("null mapping keys are not supported" + where(mark));
    }
    add(mark, nullptr);
  }

  void OnAlias(const YAML::Mark& mark, YAML::anchor_t) override {
    throw FormatError("YAML aliases are not supported" + where(mark));
  }

  void OnAnchor(const YAML::Mark& mark, const std::string&) override {
    throw FormatError("YAML anchors are not supported" + where(mark));
  }

  void OnScalar(const YAML::Mark& mark, const std::string& tag,
                YAML::anchor_t anchor, const std::string& value) override {
    reject_anchor(mark, anchor);
    if (tag != "?" && tag != "!") {
      throw FormatError("YAML tags are not supported" + where(mark));
    }
    if (expecting_key()) {
      stack_.back().key = value;
      return;
    }
    add(mark, tag == "!" ? Json(value) : resolve_plain(value));
  }

  void OnSequenceStart(const YAML::Mark& mark, const std::string& tag,
                       YAML::anchor_t anchor, YAML::EmitterStyle::value) override {
    open(mark, tag, anchor, Json::array());
  }
  void OnSequenceEnd() override { close(); }

  void OnMapStart(const YAML::Mark& mark, const std::string& tag,
                  YAML::anchor_t anchor, YAML::EmitterStyle::value) override {
    open(mark, tag, anchor, Json::object());
  }
  void OnMapEnd() override { close(); }

 private:
  struct Frame {
    Json value;
    YAML::Mark mark;
    std::optional<std::string> key;
  };

  static void reject_anchor(const YAML::Mark& mark, YAML::anchor_t anchor) {
    if (anchor != YAML::NullAnchor) {
      throw FormatError("YAML anchors are not supported" + where(mark));
    }
  }

  bool expecting_key() const {
    return !stack_.empty() && stack_.back().value.is_object() &&
           !stack_.back().key;
  }

  void open(const YAML::Mark& mark, const std::string& tag,
            YAML::anchor_t anchor, Json empty) {
    reject_anchor(mark, anchor);
    if (tag != "?" && tag != "!" && !tag.empty()) {
      throw FormatError("YAML tags are not supported" + where(mark));
    }
    if (expecting_key()) {
      throw FormatError("complex mapping keys are not supported" +
                        where(mark));
    }
    stack_.push_back({std::move(empty), mark, std::nullopt});
  }

  void close() {
    Frame frame = std::move(stack_.back());
    stack_.pop_back();
    add(frame.mark, std::move(frame.value));
  }

  void add(const YAML::Mark& mark, Json value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return;
    }
    Frame& top = stack_.back();
    if (top.value.is_array()) {
      top.value.push_back(std::move(value));
      return;
    }
    std::string key = std::move(*top.key);
    top.key.reset();
    if (top.value.contains(key)) {
      throw FormatError("duplicate mapping key '" + key + "'" + where(mark));
    }
    top.value[key] = std::move(value);
  }

  std::vector<Frame> stack_;
  std::optional<Json> root_;
  int documents_ = 0;
};

}  // namespace

Json parse_yaml_subset(std::string_view text) {
  std::istringstream in{std::string(text)};
  JsonBuilder builder;
  try {
    YAML::Parser parser(in);
    while (parser.HandleNextDocument(builder)) {
    }
  } catch (const YAML::Exception& e) {
    throw FormatError(std::string("front matter is not valid YAML: ") +
                      e.what());
  }
  return builder.take();
}

}  // namespace datashare::detail
