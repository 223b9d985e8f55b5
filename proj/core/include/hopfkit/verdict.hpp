#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hopfkit {

struct Verdict {
  std::string identity;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string witness;  // first failing tuple, in sweep order

  bool passed() const { return failures == 0; }

  // Records one case; the witness text is only built for the first failure.
  template <class F>
  bool check(bool ok, F&& describe) {
    ++checked;
    if (!ok) {
      if (failures == 0) witness = describe();
      ++failures;
    }
    return ok;
  }
  bool check(bool ok) {
    return check(ok, [] { return std::string(); });
  }
};

// Per-identity verdicts for one subject, in the order the checks ran.
class VerdictReport {
 public:
  VerdictReport() = default;
  explicit VerdictReport(std::string subject) : subject_(std::move(subject)) {}

  Verdict& add(std::string identity);
  // Adds a verdict that failed before any case could be evaluated.
  void fail(std::string identity, std::string reason);
  void note(std::string key, std::string value) { notes_[std::move(key)] = std::move(value); }
  void note(std::string key, bool value) { notes_[std::move(key)] = value ? "true" : "false"; }
  void merge(const VerdictReport& other, const std::string& prefix = {});

  bool passed() const;
  bool passed(std::string_view identity) const;
  const Verdict* find(std::string_view identity) const;
  const std::deque<Verdict>& verdicts() const { return items_; }
  const std::map<std::string, std::string>& notes() const { return notes_; }
  const std::string& subject() const { return subject_; }

  std::string to_json() const;  // deterministic, two-space indented
  std::string summary() const;  // one line per identity

 private:
  std::string subject_;
  std::deque<Verdict> items_;  // stable references from add()
  std::map<std::string, std::string> notes_;
};

}  // namespace hopfkit
