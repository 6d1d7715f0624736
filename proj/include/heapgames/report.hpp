#pragma once

#include <string>
#include <vector>

namespace heapgames {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct Report {
  std::string name;
  std::vector<CheckResult> checks;

  void add_pass(std::string check, std::string detail = "") {
    checks.push_back({std::move(check), CheckStatus::Pass, std::move(detail)});
  }
  void add_fail(std::string check, std::string detail) {
    checks.push_back({std::move(check), CheckStatus::Fail, std::move(detail)});
  }
  void add_skip(std::string check, std::string detail) {
    checks.push_back({std::move(check), CheckStatus::Skip, std::move(detail)});
  }
  // Records `ok` and keeps only the first failure detail per check name.
  void require(const std::string& check, bool ok, const std::string& fail_detail) {
    if (ok)
      add_pass(check);
    else
      add_fail(check, fail_detail);
  }

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
};

const char* to_string(CheckStatus s);

}  // namespace heapgames
