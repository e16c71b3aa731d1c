#pragma once

// Flat "key = value" run configuration.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace beurling::experiments {

/// Invalid or unknown configuration; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParamSpec {
  std::string key;
  std::string default_value;
  std::string help;
};

class Config {
 public:
  Config() = default;

  /// Lines are "key = value"; '#' starts a comment; blank lines are skipped.
  static Config parse(const std::string& text);
  static Config load(const std::string& path);

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::map<std::string, std::string>& values() const { return values_; }

  std::string get_string(const std::string& key) const;
  double get_double(const std::string& key) const;
  int get_int(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  bool get_bool(const std::string& key) const;
  /// Comma-separated list.
  std::vector<double> get_doubles(const std::string& key) const;
  std::vector<int> get_ints(const std::string& key) const;

  /// Sorted "key = value" lines.
  std::string dump() const;

 private:
  std::map<std::string, std::string> values_;
};

/// Merges user values over defaults; keys outside the schema are rejected.
Config resolve(const std::vector<ParamSpec>& schema, const Config& user);

}  // namespace beurling::experiments
