#pragma once

// Reproduction table: every headline number the toolkit is expected to
// reproduce, each computed fresh and compared against its frozen value.

#include <cstdint>
#include <string>
#include <vector>

namespace incoh {

enum class RowKind { equal, at_most, at_least };

struct ReproRow {
  std::string id;     // short stable key for scripting
  std::string claim;  // human-readable statement of the checked fact
  RowKind kind = RowKind::equal;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// pass rule: equal -> |expected - computed| <= tolerance;
// at_most -> computed <= expected + tolerance; at_least -> computed >= expected - tolerance.
bool row_passes(RowKind kind, double expected, double computed, double tolerance);

// Runs the whole table. Sampled rows derive their generators from the seed,
// so the table is bit-reproducible for a fixed seed.
std::vector<ReproRow> run_reproduction(std::uint64_t seed = 0);

}  // namespace incoh
