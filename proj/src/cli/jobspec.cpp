#include "vkt/cli/jobspec.hpp"

#include <cctype>
#include <optional>
#include <set>

#include "json.hpp"
#include "vkt/error.hpp"

namespace vkt::cli {

namespace {

using nlohmann::json;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(blank_comments(text)) {}

  JobSpec run() {
    JobSpec spec;
    std::set<std::string> seen;
    while (skip_space(true), pos_ < text_.size()) {
      const std::size_t key_at = pos_;
      const std::string key = identifier();
      if (!seen.insert(key).second) fail(key_at, "duplicate key '" + key + "'");
      skip_space(false);
      expect('=');
      skip_space(false);
      top_value(spec, key, key_at);
      skip_space(false);
      if (pos_ < text_.size() && text_[pos_] != '\n') fail(pos_, "expected end of line");
    }
    return spec;
  }

 private:
  static std::string blank_comments(std::string_view in) {
    std::string out(in);
    bool str = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const char c = out[i];
      if (str) {
        if (c == '\\' && i + 1 < out.size()) ++i;
        else if (c == '"') str = false;
        else if (c == '\n') str = false;
      } else if (c == '"') {
        str = true;
      } else if (c == '#') {
        while (i < out.size() && out[i] != '\n') out[i++] = ' ';
        --i;
      }
    }
    return out;
  }

  [[noreturn]] void fail(std::size_t at, const std::string& what) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, what);
  }

  void skip_space(bool newlines) {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) ++pos_;
      else break;
    }
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail(start, "expected a key");
    return text_.substr(start, pos_ - start);
  }

  // Extent of one JSON value starting at pos_: a string, a bracketed array or
  // a bare token.
  std::size_t value_end() const {
    std::size_t i = pos_;
    if (i >= text_.size()) return i;
    if (text_[i] == '"') {
      for (++i; i < text_.size() && text_[i] != '"' && text_[i] != '\n'; ++i)
        if (text_[i] == '\\') ++i;
      return std::min(i + 1, text_.size());
    }
    if (text_[i] == '[') {
      int depth = 0;
      bool str = false;
      for (; i < text_.size(); ++i) {
        const char c = text_[i];
        if (str) {
          if (c == '\\') ++i;
          else if (c == '"') str = false;
        } else if (c == '"') {
          str = true;
        } else if (c == '[') {
          ++depth;
        } else if (c == ']' && --depth == 0) {
          return i + 1;
        }
      }
      return i;
    }
    while (i < text_.size() && !std::isspace(static_cast<unsigned char>(text_[i])) && text_[i] != ',' &&
           text_[i] != '}')
      ++i;
    return i;
  }

  json leaf() {
    const std::size_t start = pos_, end = value_end();
    if (end == start) fail(start, "expected a value");
    pos_ = end;
    try {
      return json::parse(text_.begin() + static_cast<std::ptrdiff_t>(start),
                         text_.begin() + static_cast<std::ptrdiff_t>(end));
    } catch (const json::parse_error& e) {
      const std::size_t off = e.byte == 0 ? 0 : e.byte - 1;
      fail(start + std::min(off, end - start), "malformed value");
    }
  }

  static std::optional<std::int64_t> as_int(const json& v) {
    if (v.is_number_integer()) return v.get<std::int64_t>();
    return std::nullopt;
  }

  std::int64_t integer(const json& v, std::size_t at) const {
    if (auto i = as_int(v)) return *i;
    fail(at, "expected an integer");
  }

  std::string string(const json& v, std::size_t at) const {
    if (!v.is_string()) fail(at, "expected a string");
    return v.get<std::string>();
  }

  std::vector<std::int64_t> int_list(const json& v, std::size_t at) const {
    if (!v.is_array()) fail(at, "expected a list of integers");
    std::vector<std::int64_t> out;
    for (const auto& e : v) out.push_back(integer(e, at));
    return out;
  }

  IntMatrix matrix(const json& v, std::size_t at) const {
    if (!v.is_array()) fail(at, "expected a matrix [[...], ...]");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& r : v) {
      rows.push_back(int_list(r, at));
      if (rows.back().size() != rows.front().size()) fail(at, "rows of different length");
    }
    return IntMatrix::from_rows(rows);
  }

  void top_value(JobSpec& spec, const std::string& key, std::size_t key_at) {
    if (key == "twist") {
      spec.twist = twist_table();
      return;
    }
    const std::size_t at = pos_;
    const json v = leaf();
    if (key == "group") spec.group.name = string(v, at);
    else if (key == "cartan") spec.group.cartan = matrix(v, at);
    else if (key == "torus_rank") {
      const std::int64_t k = integer(v, at);
      if (k < 0) fail(at, "torus_rank must be >= 0");
      spec.group.torus_rank = static_cast<std::size_t>(k);
    } else if (key == "torus_form") spec.group.torus_form = matrix(v, at);
    else if (key == "simple_roots") spec.group.simple_roots = matrix(v, at);
    else if (key == "simple_coroots") spec.group.simple_coroots = matrix(v, at);
    else if (key == "command") spec.command = string(v, at);
    else if (key == "format") {
      spec.format = string(v, at);
      if (spec.format != "json" && spec.format != "tsv") fail(at, "format must be \"json\" or \"tsv\"");
    } else if (key == "args") {
      if (!v.is_array()) fail(at, "expected a list of strings");
      for (const auto& e : v) spec.args.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    } else {
      fail(key_at, "unknown key '" + key + "'");
    }
  }

  TwistSpec twist_table() {
    TwistSpec t;
    expect('{');
    std::set<std::string> seen;
    skip_space(true);
    if (pos_ < text_.size() && text_[pos_] == '}') {
      ++pos_;
      return t;
    }
    while (true) {
      skip_space(true);
      const std::size_t key_at = pos_;
      const std::string key = identifier();
      if (!seen.insert(key).second) fail(key_at, "duplicate key '" + key + "'");
      skip_space(true);
      expect('=');
      skip_space(true);
      const std::size_t at = pos_;
      const json v = leaf();
      if (key == "levels") t.levels = int_list(v, at);
      else if (key == "epsilon") t.epsilon = int_list(v, at);
      else if (key == "torus") t.torus = matrix(v, at);
      else if (key == "b") t.b = matrix(v, at);
      else if (key == "shift") {
        const std::string s = string(v, at);
        if (s == "dual_coxeter") t.dual_coxeter_shift = true;
        else if (s != "none") fail(at, "shift must be \"none\" or \"dual_coxeter\"");
      } else {
        fail(key_at, "unknown twist key '" + key + "'");
      }
      skip_space(true);
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      return t;
    }
  }

  std::string text_;
  std::size_t pos_ = 0;
};

std::string matrix_text(const IntMatrix& m) {
  json rows = json::array();
  for (const auto& r : m.to_int64()) rows.push_back(r);
  return rows.dump();
}

}  // namespace

JobSpec parse_jobspec(std::string_view text) { return Parser(text).run(); }

std::string emit_twist(const TwistSpec& t) {
  std::vector<std::string> parts;
  if (!t.levels.empty()) parts.push_back("levels = " + json(t.levels).dump());
  if (t.dual_coxeter_shift) parts.push_back("shift = \"dual_coxeter\"");
  if (t.torus) parts.push_back("torus = " + matrix_text(*t.torus));
  if (!t.epsilon.empty()) parts.push_back("epsilon = " + json(t.epsilon).dump());
  if (t.b) parts.push_back("b = " + matrix_text(*t.b));
  std::string s = "{ ";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s + (parts.empty() ? "}" : " }");
}

std::string emit_jobspec(const JobSpec& spec) {
  std::string s;
  const auto& g = spec.group;
  if (!g.name.empty()) s += "group = " + json(g.name).dump() + "\n";
  if (g.cartan) s += "cartan = " + matrix_text(*g.cartan) + "\n";
  if (g.torus_rank) s += "torus_rank = " + std::to_string(g.torus_rank) + "\n";
  if (g.torus_form) s += "torus_form = " + matrix_text(*g.torus_form) + "\n";
  if (g.simple_roots) s += "simple_roots = " + matrix_text(*g.simple_roots) + "\n";
  if (g.simple_coroots) s += "simple_coroots = " + matrix_text(*g.simple_coroots) + "\n";
  s += "twist = " + emit_twist(spec.twist) + "\n";
  if (!spec.command.empty()) s += "command = " + json(spec.command).dump() + "\n";
  if (!spec.args.empty()) s += "args = " + json(spec.args).dump() + "\n";
  s += "format = " + json(spec.format).dump() + "\n";
  return s;
}

}  // namespace vkt::cli
