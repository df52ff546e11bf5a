#pragma once

#include <string>
#include <vector>

namespace pq {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;  // residual or reason when !ok, optional note otherwise
};

// Flat list of named pass/fail checks produced by the verification suites.
struct CheckReport {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  void merge(const CheckReport& other) {
    for (const auto& c : other.checks) checks.push_back({other.title + ": " + c.name, c.ok, c.detail});
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.ok ? 0 : 1;
    return n;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.ok) return &c;
    return nullptr;
  }
};

}  // namespace pq
