#ifndef LCK_REPORT_HPP
#define LCK_REPORT_HPP

#include <string>
#include <vector>

namespace lck {

enum class CheckStatus { Pass, Fail, Skip };

/// One verification record: a named identity with its outcome, a short
/// detail string and a stable anchor tag identifying the statement being
/// checked.
struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::string anchor;
};

struct SuiteReport {
  std::string example;
  std::string suite;
  std::vector<CheckRecord> checks;

  /// Overall failure iff any check fails; skips never affect the outcome.
  bool pass() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }

  void add(std::string name, std::string anchor, bool ok, std::string detail = "") {
    checks.push_back(CheckRecord{std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail,
                                 std::move(detail), std::move(anchor)});
  }

  void skip(std::string name, std::string anchor, std::string reason) {
    checks.push_back(
        CheckRecord{std::move(name), CheckStatus::Skip, std::move(reason), std::move(anchor)});
  }

  void merge(const SuiteReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

/// Deterministic JSON rendering: {example, suite, checks:[{name,status,detail,anchor}], status}.
std::string render_json(const SuiteReport& rep);

/// Human-readable table.
std::string render_text(const SuiteReport& rep);

}  // namespace lck

#endif
