#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfd/ring.hpp"

namespace gfd {

/// Outcome of one seeded verification suite. Every individual check is
/// counted; the first few failures are kept verbatim.
struct SuiteResult {
  std::string name;
  std::string claim;
  std::uint64_t seed = 0;
  std::vector<std::string> rings;
  int checked = 0;
  int failed = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0;
  bool passed() const { return checked > 0 && failed == 0; }
};

/// The CLI suite names: theorem1, prop-fd, prop-dual, remark2, theorem2,
/// remark1, am, conewd, prop9, horseshoe, collapse.
const std::vector<std::string>& suite_names();
std::string suite_claim(const std::string& name);

/// The local factors a suite runs over by default.
std::vector<Ring> default_suite_rings(const std::string& name);

/// Runs a suite over `rings` (local factors; the default catalog when
/// empty). Rings a suite does not apply to are skipped with a note.
/// Throws ValidationError for an unknown suite name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed,
                      const std::vector<Ring>& rings = {});

}  // namespace gfd
