#include "rslv/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace rslv {

uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hash_hex(std::string_view s) {
  std::ostringstream out;
  out << std::hex;
  uint64_t h = fnv1a64(s);
  for (int i = 15; i >= 0; --i) out << "0123456789abcdef"[(h >> (4 * i)) & 0xf];
  return out.str();
}

void VerificationReport::add(const std::string& name, bool pass, const std::string& detail) {
  Check c;
  c.name = name;
  c.status = pass ? "pass" : "fail";
  c.detail = detail;
  c.canonical_hash = hash_hex(c.name + "|" + c.status + "|" + c.detail);
  checks_.push_back(std::move(c));
}

void VerificationReport::add_skipped(const std::string& name, const std::string& detail) {
  Check c;
  c.name = name;
  c.status = "skipped";
  c.detail = detail;
  c.canonical_hash = hash_hex(c.name + "|" + c.status + "|" + c.detail);
  checks_.push_back(std::move(c));
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  for (const Check& c : other.checks_) {
    Check copy = c;
    copy.name = prefix + c.name;
    copy.canonical_hash = hash_hex(copy.name + "|" + copy.status + "|" + copy.detail);
    checks_.push_back(std::move(copy));
  }
}

bool VerificationReport::ok() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const Check& c) { return c.status != "fail"; });
}

std::string VerificationReport::to_json() {
  std::sort(checks_.begin(), checks_.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start_)
                     .count();
  nlohmann::ordered_json j;
  j["command"] = command_;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params_) j["params"][k] = v;
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks_) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.status;
    jc["detail"] = c.detail;
    jc["canonical_hash"] = c.canonical_hash;
    j["checks"].push_back(jc);
  }
  j["elapsed_ms"] = elapsed;
  return j.dump(2);
}

std::string VerificationReport::to_summary() const {
  std::ostringstream out;
  for (const Check& c : checks_) {
    out << "[" << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP") << "] "
        << c.name;
    if (!c.detail.empty()) out << " — " << c.detail;
    out << "\n";
  }
  return out.str();
}

}  // namespace rslv
