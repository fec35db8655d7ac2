#pragma once

#include <chrono>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rslv {

uint64_t fnv1a64(std::string_view s);
std::string hash_hex(std::string_view s);

/// One named verification outcome inside a report.
struct Check {
  std::string name;
  std::string status;  // "pass" | "fail" | "skipped"
  std::string detail;
  std::string canonical_hash;  // hash of name|status|detail (never of timings)
};

/// Machine-readable result of one CLI command. JSON top-level keys are exactly
/// {command, params, checks, elapsed_ms}; checks are sorted by name, and two
/// runs with the same parameters and seed produce byte-identical check arrays.
class VerificationReport {
 public:
  explicit VerificationReport(std::string command)
      : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

  void set_param(const std::string& key, const std::string& value) { params_[key] = value; }

  void add(const std::string& name, bool pass, const std::string& detail = "");
  void add_skipped(const std::string& name, const std::string& detail = "");
  /// Merges another report's checks under a name prefix.
  void absorb(const VerificationReport& other, const std::string& prefix);

  bool ok() const;
  const std::vector<Check>& checks() const { return checks_; }
  const std::string& command() const { return command_; }

  /// Finalizes (sorts checks, freezes elapsed time) and renders JSON.
  std::string to_json();
  /// Human-readable one-line-per-check summary.
  std::string to_summary() const;

 private:
  std::string command_;
  std::map<std::string, std::string> params_;
  std::vector<Check> checks_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace rslv
