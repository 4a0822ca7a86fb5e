#pragma once

#include <string>
#include <vector>

namespace topo {

struct ValidationResult {
  bool valid = true;
  std::vector<std::string> violations;

  void fail(const std::string& message) {
    valid = false;
    violations.push_back(message);
  }
};

}  // namespace topo
