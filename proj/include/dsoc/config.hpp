#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

namespace dsoc {

/// Flat `key = value` settings with `#` comments. Keys are unique.
class ConfigMap {
 public:
  static ConfigMap parse(std::istream& in);
  static ConfigMap load(const std::string& path);

  void set(const std::string& key, const std::string& value);
  bool contains(const std::string& key) const { return values_.contains(key); }
  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

double parse_double(const std::string& key, const std::string& text);
unsigned parse_unsigned(const std::string& key, const std::string& text);
bool parse_bool(const std::string& key, const std::string& text);
std::vector<double> parse_double_list(const std::string& key, const std::string& text);
std::vector<unsigned> parse_unsigned_list(const std::string& key, const std::string& text);

/// Shortest text that parses back to the same double.
std::string format_value(double v);

/// Scientific notation with 10 significant digits, used for every CSV number.
std::string format_csv(double v);

}  // namespace dsoc
