#include "dsoc/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dsoc/errors.hpp"

namespace dsoc {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

ConfigMap ConfigMap::parse(std::istream& in) {
  ConfigMap cfg;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidInput("config line " + std::to_string(number) + ": expected `key = value`");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw InvalidInput("config line " + std::to_string(number) + ": empty key or value");
    }
    if (cfg.contains(key)) throw InvalidInput("config line " + std::to_string(number) + ": duplicate key " + key);
    cfg.values_[key] = value;
  }
  return cfg;
}

ConfigMap ConfigMap::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file " + path);
  return parse(in);
}

void ConfigMap::set(const std::string& key, const std::string& value) { values_[key] = value; }

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v)) {
    throw InvalidInput("invalid number for " + key + ": '" + text + "'");
  }
  return v;
}

unsigned parse_unsigned(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw InvalidInput("invalid unsigned integer for " + key + ": '" + text + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw InvalidInput("invalid boolean for " + key + ": '" + text + "'");
}

std::vector<double> parse_double_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_double(key, item));
  if (out.empty()) throw InvalidInput("empty list for " + key);
  return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& key, const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_unsigned(key, item));
  if (out.empty()) throw InvalidInput("empty list for " + key);
  return out;
}

std::string format_value(double v) {
  char buf[64];
  int precision = 1;
  for (; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  // Plain decimals for everyday magnitudes; %g would print 1550 as 1.55e+03.
  if (v != 0.0 && std::isfinite(v)) {
    const int exponent = static_cast<int>(std::floor(std::log10(std::abs(v))));
    if (exponent >= -5 && exponent < 10) {
      std::snprintf(buf, sizeof buf, "%.*f", std::max(0, precision - 1 - exponent), v);
      if (std::strtod(buf, nullptr) != v) std::snprintf(buf, sizeof buf, "%.17g", v);
    }
  }
  return buf;
}

std::string format_csv(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

}  // namespace dsoc
