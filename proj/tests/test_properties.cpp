#include <doctest.h>

#include "cubisym/properties.hpp"

TEST_CASE("property suites") {
  const auto results = cubisym::run_property_suites(12345, 200);
  CHECK(results.size() == 8);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.instances >= 200);
    CHECK(r.passed());
  }
}
