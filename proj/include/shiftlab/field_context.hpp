#pragma once

// The coefficient field of a computation and how to decide ranks over it.
//
// Symbolic: exact fraction-free elimination on polynomial matrices.
// Randomized: substitute random values for the variables and eliminate over
// a concrete field. Ranks can only drop under substitution, so a wrong
// answer is always "dependent" where the truth is "independent"; the
// probability of that is kept below epsilon by the Schwartz-Zippel bound
// deg / |sample set| with the sample set sized from a per-call degree bound.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "shiftlab/finite_field.hpp"

namespace shiftlab {

class Characteristic {
 public:
  Characteristic() = default;
  // Throws PreconditionError unless value is 0 or prime.
  explicit Characteristic(std::uint64_t value);
  std::uint64_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  friend bool operator==(Characteristic a, Characteristic b) { return a.value_ == b.value_; }

 private:
  std::uint64_t value_ = 0;
};

enum class Backend { Symbolic, Randomized };

std::string to_string(Backend b);
Backend parse_backend(const std::string& s);
// "2^-30", "1/1000", "0.001" or "1e-9", exactly. Throws ParseError.
mpq_class parse_epsilon(const std::string& s);

// How random points are drawn for one call, given its degree bound.
struct SamplingPlan {
  std::uint64_t characteristic = 0;
  // char p: the concrete field GF(p^e).
  field::ExtensionSpec field;
  // char 0: integers drawn uniformly from [1, range].
  mpz_class range;
};

struct FieldContext {
  Characteristic characteristic;
  Backend backend = Backend::Randomized;
  std::uint64_t seed = 0;
  mpq_class epsilon{1, 1U << 30U};
  // char 0 only: rank mod two large primes instead of exact integers; falls
  // back to exact elimination whenever the two disagree.
  bool double_prime = false;

  // Smallest e with p^e >= 2 * degree_bound / epsilon (char p), or the
  // integer range ceil(2 * degree_bound / epsilon) (char 0).
  SamplingPlan plan(const mpz_class& degree_bound) const;

  // Seed of the random stream for the call identified by call_id.
  std::uint64_t stream_seed(std::uint64_t call_id) const;
};

// Throws PreconditionError for a non-prime nonzero characteristic or an
// epsilon outside (0, 1).
FieldContext make_field_context(std::uint64_t characteristic, Backend backend, std::uint64_t seed,
                                const mpq_class& epsilon = mpq_class(1, 1U << 30U));

}  // namespace shiftlab
