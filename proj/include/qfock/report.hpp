#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace qfock {

// Outcome of a verification suite. An empty failure list means pass.
struct CheckReport {
  std::string theorem;
  nlohmann::json parameters = nlohmann::json::object();
  long long instances = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(std::string what) {
    if (failures.size() < 50) failures.push_back(std::move(what));
    else ++suppressed;
  }
  void merge(const CheckReport& o);
  nlohmann::json to_json() const;

  long long suppressed = 0;
};

}  // namespace qfock
