#include "infsub/report.hpp"

#include "infsub/parallel.hpp"

#include <algorithm>

namespace infsub {

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const CheckTally &c) { return c.failed == 0; });
}

CheckTally Report::tally(const std::string &check) const {
  for (const auto &c : checks_)
    if (c.name == check)
      return c;
  return CheckTally{check, 0, 0};
}

CheckTally &Report::slot(const std::string &check) {
  for (auto &c : checks_)
    if (c.name == check)
      return c;
  checks_.push_back(CheckTally{check, 0, 0});
  return checks_.back();
}

void Report::declare(const std::string &check) { slot(check); }

void Report::record(const std::string &check, std::size_t sample, bool ok,
                    const std::function<std::string()> &detail) {
  CheckTally &c = slot(check);
  ++c.evaluated;
  if (!ok) {
    ++c.failed;
    violations_.push_back(Violation{check, sample, detail ? detail() : std::string()});
  }
}

void Report::set_fact(const std::string &key, long long value) {
  for (auto &f : facts_)
    if (f.first == key) {
      f.second = value;
      return;
    }
  facts_.emplace_back(key, value);
}

void Report::absorb(const Report &other, const std::string &prefix) {
  for (const auto &c : other.checks_) {
    CheckTally &mine = slot(prefix + c.name);
    mine.evaluated += c.evaluated;
    mine.failed += c.failed;
  }
  for (const auto &v : other.violations_)
    violations_.push_back(Violation{prefix + v.check, v.sample, v.detail});
  for (const auto &f : other.facts_)
    set_fact(prefix + f.first, f.second);
}

void run_samples(Report &report, std::size_t count, unsigned jobs,
                 const std::function<void(std::size_t, Report &)> &fn) {
  std::vector<Report> locals(count, Report(report.name()));
  parallel_for(count, jobs, [&](std::size_t i) { fn(i, locals[i]); });
  for (const auto &local : locals)
    report.absorb(local);
}

} // namespace infsub
