#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cgc {

struct Violation {
  std::string law;
  std::string witness;

  bool operator==(const Violation &) const = default;
};

/// Outcome of a law check. Violations are data: an empty report is a pass.
class LawReport {
public:
  bool ok() const { return violations_.empty(); }

  void add(std::string law, std::string witness) {
    violations_.push_back({std::move(law), std::move(witness)});
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void count(std::size_t n = 1) { instances_ += n; }

  void merge(const LawReport &other) {
    violations_.insert(violations_.end(), other.violations_.begin(),
                       other.violations_.end());
    notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
    instances_ += other.instances_;
  }

  const std::vector<Violation> &violations() const { return violations_; }
  const std::vector<std::string> &notes() const { return notes_; }
  std::size_t instances() const { return instances_; }

  bool has(const std::string &law) const {
    for (const auto &v : violations_)
      if (v.law == law)
        return true;
    return false;
  }
  bool has(const std::string &law, const std::string &witness) const {
    for (const auto &v : violations_)
      if (v.law == law && v.witness == witness)
        return true;
    return false;
  }

private:
  std::vector<Violation> violations_;
  std::vector<std::string> notes_;
  std::size_t instances_ = 0;
};

} // namespace cgc
