#pragma once

// Check reports shared by the verification suites and the CLI. Text output
// is line oriented; machine output is a single JSON object with a versioned
// schema (see docs/report-schema.md).

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace lmod {

enum class CheckStatus { Pass, Fail, Skip };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

struct Check {
  std::string id;
  CheckStatus status;
  std::string detail;
};

class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<Check>& checks() const { return checks_; }

  void add(std::string id, bool ok, std::string detail = "") {
    checks_.push_back({std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail,
                       std::move(detail)});
  }
  void skip(std::string id, std::string why) {
    checks_.push_back({std::move(id), CheckStatus::Skip, std::move(why)});
  }
  void append(const Report& other) {
    for (const Check& c : other.checks_) checks_.push_back(c);
  }
  void append_prefixed(const std::string& prefix, const Report& other) {
    for (const Check& c : other.checks_)
      checks_.push_back({prefix + c.id, c.status, c.detail});
  }

  void set_wall_ms(double ms) { wall_ms_ = ms; }
  double wall_ms() const { return wall_ms_; }

  std::size_t total() const { return checks_.size(); }
  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const Check& c : checks_)
      if (c.status == s) ++n;
    return n;
  }
  std::size_t passed() const { return count(CheckStatus::Pass); }
  std::size_t failed() const { return count(CheckStatus::Fail); }
  std::size_t skipped() const { return count(CheckStatus::Skip); }

  bool ok() const { return failed() == 0; }
  int exit_code() const { return ok() ? 0 : 1; }

  void print_text(std::ostream& os) const {
    os << "suite: " << suite_ << '\n';
    for (const Check& c : checks_) {
      os << "check " << c.id << ": " << status_name(c.status);
      if (!c.detail.empty()) os << " (" << c.detail << ")";
      os << '\n';
    }
    os << "summary suite=" << suite_ << " total=" << total() << " pass=" << passed()
       << " fail=" << failed() << " skip=" << skipped() << " time_ms=" << wall_ms_ << '\n';
  }

  nlohmann::json to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const Check& c : checks_)
      checks.push_back({{"id", c.id}, {"status", status_name(c.status)}, {"detail", c.detail}});
    return nlohmann::json{
        {"schema", "lmod-report/1"},
        {"suite", suite_},
        {"checks", checks},
        {"counts",
         {{"total", total()}, {"pass", passed()}, {"fail", failed()}, {"skip", skipped()}}},
        {"time_ms", wall_ms_},
    };
  }

 private:
  std::string suite_;
  std::vector<Check> checks_;
  double wall_ms_ = 0.0;
};

}  // namespace lmod
