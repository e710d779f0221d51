#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace brandt {

enum class ClauseStatus { Pass, Fail, Skipped };

/// One verified statement: its verdict plus a human-readable witness when it fails.
struct Clause {
  std::string name;
  ClauseStatus status = ClauseStatus::Pass;
  std::string witness;  // empty when passing
  std::string note;     // hypotheses, counts, reasons for skipping

  bool passed() const { return status != ClauseStatus::Fail; }
};

struct Report {
  std::string title;
  std::vector<Clause> clauses;

  Clause& add(std::string name, bool ok, std::string witness = {}, std::string note = {}) {
    clauses.push_back({std::move(name), ok ? ClauseStatus::Pass : ClauseStatus::Fail,
                       ok ? std::string{} : std::move(witness), std::move(note)});
    return clauses.back();
  }
  Clause& skip(std::string name, std::string reason) {
    clauses.push_back({std::move(name), ClauseStatus::Skipped, {}, std::move(reason)});
    return clauses.back();
  }
  bool passed() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.passed(); });
  }
  const Clause* find(const std::string& name) const {
    for (const auto& c : clauses)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace brandt
