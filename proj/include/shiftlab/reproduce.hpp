#pragma once

// Golden-value runner: recomputes the worked examples shipped with the
// library and diffs them against embedded data.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "shiftlab/field_context.hpp"

namespace shiftlab {

struct ReproduceOptions {
  Backend backend = Backend::Randomized;
  std::uint64_t seed = 0;
  mpq_class epsilon{1, 1U << 30U};
  unsigned parallelism = 1;
};

struct ReproduceTarget {
  std::string name;
  std::vector<std::string> aliases;
  std::string description;
};

const std::vector<ReproduceTarget>& reproduce_targets();

// Canonical name for a name or alias.
std::optional<std::string> resolve_target(const std::string& name);

// Writes one "PASS"/"FAIL" line per check and returns whether all passed.
// Throws PreconditionError for an unknown name.
bool run_reproduce(const std::string& name, const ReproduceOptions& opts, std::ostream& out);

}  // namespace shiftlab
