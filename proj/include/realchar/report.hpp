#pragma once

// Verification reports: one record per (subject, claim) with the computed and
// expected values, a provenance tag for the expectation, and pass/skip
// status.  Items are sorted before emission so reports do not depend on
// evaluation order; serialization is JSON with stable field names.

#include <chrono>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "realchar/intmath.hpp"
#include "realchar/version.hpp"

namespace realchar {

enum class Provenance { Paper, Trivial, Derived };

inline const char* provenance_tag(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "PAPER";
    case Provenance::Trivial: return "TRIVIAL";
    case Provenance::Derived: return "DERIVED";
  }
  return "?";
}

struct CheckItem {
  std::string descriptor;
  std::string claim;
  std::string computed;
  std::string expected;
  Provenance provenance = Provenance::Derived;
  bool pass = false;
  bool skipped = false;
  std::string skip_reason;
  double wall_ms = 0.0;
};

struct VerificationReport {
  std::string check_id;
  std::string engine_version = kVersion;
  std::string toolchain;
  unsigned cache_schema = kCacheSchemaVersion;
  std::vector<CheckItem> items;

  bool overall_pass() const {
    for (const auto& it : items)
      if (!it.skipped && !it.pass) return false;
    return true;
  }

  size_t passed() const {
    size_t n = 0;
    for (const auto& it : items) n += (!it.skipped && it.pass);
    return n;
  }
  size_t failed() const {
    size_t n = 0;
    for (const auto& it : items) n += (!it.skipped && !it.pass);
    return n;
  }
  size_t skipped() const {
    size_t n = 0;
    for (const auto& it : items) n += it.skipped;
    return n;
  }

  void sort_items() {
    std::stable_sort(items.begin(), items.end(), [](const CheckItem& a, const CheckItem& b) {
      if (a.descriptor != b.descriptor) return a.descriptor < b.descriptor;
      return a.claim < b.claim;
    });
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["check"] = check_id;
    j["engine"] = engine_version;
    j["toolchain"] = toolchain;
    j["cache_schema"] = cache_schema;
    j["overall_pass"] = overall_pass();
    j["items"] = nlohmann::json::array();
    for (const auto& it : items) {
      nlohmann::json ji;
      ji["descriptor"] = it.descriptor;
      ji["claim"] = it.claim;
      ji["computed"] = it.computed;
      ji["expected"] = it.expected;
      ji["provenance"] = provenance_tag(it.provenance);
      ji["pass"] = it.pass;
      ji["skipped"] = it.skipped;
      if (it.skipped) ji["skip_reason"] = it.skip_reason;
      ji["wall_ms"] = it.wall_ms;
      j["items"].push_back(std::move(ji));
    }
    return j;
  }

  std::string human_table() const {
    std::ostringstream os;
    os << "== " << check_id << " ==\n";
    for (const auto& it : items) {
      std::string status = it.skipped ? "SKIP" : (it.pass ? "pass" : "FAIL");
      os << "  [" << status << "] " << it.descriptor << ": " << it.claim;
      if (!it.skipped)
        os << "  computed=" << it.computed << " expected=" << it.expected << " ["
           << provenance_tag(it.provenance) << "]";
      else
        os << "  (" << it.skip_reason << ")";
      os << "\n";
    }
    os << "  " << passed() << " passed, " << failed() << " failed, " << skipped()
       << " skipped -> " << (overall_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
  }
};

class ItemTimer {
 public:
  ItemTimer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// helpers for rendering values
inline std::string set_str(const std::vector<u64>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace realchar
