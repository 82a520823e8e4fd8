#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubisym {

struct PropertyResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

/// Randomized exact checks of the algebraic identities the solver relies on.
/// Deterministic for a given seed.
std::vector<PropertyResult> run_property_suites(std::uint64_t seed = 20240611, int instances = 200);

}  // namespace cubisym
