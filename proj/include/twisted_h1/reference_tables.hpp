#pragma once

#include <string>
#include <vector>

namespace twisted_h1 {

/// One regenerated value compared against its tabulated expectation.
struct ReferenceRow {
  std::string item;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct ReferenceCheck {
  int number = 0;
  std::string tag;    // short stable identifier, e.g. "torus-groups"
  std::string title;
  std::vector<ReferenceRow> rows;

  bool passed() const;
  std::size_t failures() const;
};

/// Number of reference checks (the library-level acceptance criteria).
constexpr int kReferenceCheckCount = 10;

/// Regenerates check `number` (1-based) from scratch.
ReferenceCheck run_reference_check(int number);
std::vector<ReferenceCheck> run_reference_checks();

}  // namespace twisted_h1
