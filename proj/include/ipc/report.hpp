#ifndef IPC_REPORT_HPP
#define IPC_REPORT_HPP

#include <string>
#include <vector>

namespace ipc {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness; // counterexample description, failing checks only
};

/// Named pass/fail results of one verification run.
struct Report {
  std::string subject;
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string witness = "") {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

} // namespace ipc

#endif
