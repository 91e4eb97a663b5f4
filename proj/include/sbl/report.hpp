#ifndef SBL_REPORT_HPP
#define SBL_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace sbl {

struct RelationCheck {
  std::string name;
  bool pass = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  size_t checked() const { return checks.size(); }
};

/// Result of a verification sweep: how many cases ran, which failed, and
/// any side measurements (set sizes, dimensions).
struct VerifyReport {
  std::string name;
  size_t checked = 0;
  std::vector<std::string> failures;
  std::map<std::string, size_t> sizes;

  bool pass() const { return failures.empty(); }
  void fail(const std::string& what) { failures.push_back(what); }
};

}  // namespace sbl

#endif
