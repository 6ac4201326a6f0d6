#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace infsub {

struct Violation {
  std::string check;
  std::size_t sample = 0;
  std::string detail;
};

struct CheckTally {
  std::string name;
  std::size_t evaluated = 0;
  std::size_t failed = 0;
};

/// Outcome of a batch verification: per-check tallies in registration order,
/// violations sorted by (sample, registration order), and integer facts
/// such as sample counts.
class Report {
public:
  explicit Report(std::string name) : name_(std::move(name)) {}

  const std::string &name() const { return name_; }
  const std::vector<CheckTally> &checks() const { return checks_; }
  const std::vector<Violation> &violations() const { return violations_; }
  const std::vector<std::pair<std::string, long long>> &facts() const { return facts_; }

  bool passed() const;
  /// Evaluated / failed count for a check; zero tally when unknown.
  CheckTally tally(const std::string &check) const;

  /// Registers a check so that it appears even if never evaluated.
  void declare(const std::string &check);
  void record(const std::string &check, std::size_t sample, bool ok,
              const std::function<std::string()> &detail = {});
  void set_fact(const std::string &key, long long value);
  /// Appends another report's tallies, violations and facts, with check and
  /// fact names prefixed by `prefix`.
  void absorb(const Report &other, const std::string &prefix = {});

private:
  CheckTally &slot(const std::string &check);

  std::string name_;
  std::vector<CheckTally> checks_;
  std::vector<Violation> violations_;
  std::vector<std::pair<std::string, long long>> facts_;
};

/// Evaluates fn(i, local_report) for i in [0, count) on up to `jobs` threads
/// and folds the per-sample reports into `report` in index order.
void run_samples(Report &report, std::size_t count, unsigned jobs,
                 const std::function<void(std::size_t, Report &)> &fn);

} // namespace infsub
