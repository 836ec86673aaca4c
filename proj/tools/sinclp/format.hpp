#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sinclp::cli {

enum class OutputFormat { text, csv, json };

inline OutputFormat parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

// 17 significant digits for machine consumers, 6 for text mode.
inline std::string real17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string real6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

inline std::string real12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// Flat JSON object emitter with caller-controlled key order. Values are
// pre-rendered (real17 for numbers, quoted strings for text).
class JsonObject {
 public:
  JsonObject& number(std::string_view key, double value) {
    return raw(key, real17(value));
  }
  JsonObject& raw(std::string_view key, std::string_view rendered) {
    body_ += body_.empty() ? "" : ",";
    body_ += '"';
    body_ += key;
    body_ += "\":";
    body_ += rendered;
    return *this;
  }
  JsonObject& string(std::string_view key, std::string_view value) {
    std::string quoted = "\"";
    quoted += value;  // keys/values here never contain characters needing escapes
    quoted += '"';
    return raw(key, quoted);
  }
  std::string str() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
};

}  // namespace sinclp::cli
