#include "procrec/text.hpp"

#include <cmath>
#include <cstdio>

#include "procrec/error.hpp"

namespace procrec {

namespace {

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
  std::string msg;
  for (const auto& d : diagnostics) {
    if (!msg.empty()) msg += '\n';
    if (d.line > 0) msg += "line " + std::to_string(d.line) + ": ";
    msg += d.reason;
  }
  return msg.empty() ? std::string("parse error") : msg;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : InputError(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

namespace text {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string canonical_key(std::string_view s) { return lowercase(trim(s)); }

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"' && cur.empty() && !was_quoted) {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
      was_quoted = false;
    } else {
      cur += c;
    }
  }
  if (quoted) throw InputError("unterminated quoted CSV field");
  fields.push_back(std::move(cur));
  return fields;
}

std::string csv_field(std::string_view field) {
  bool needs = field.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!field.empty() && (is_space(field.front()) || is_space(field.back()))) needs = true;
  if (!needs) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out;
}

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

std::string format_significant(double value, int digits) {
  if (value == 0.0) value = 0.0;  // folds -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string format_percent(double ratio) {
  double hundredths = std::round(ratio * 10000.0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", hundredths / 100.0);
  return buf;
}

}  // namespace text
}  // namespace procrec
