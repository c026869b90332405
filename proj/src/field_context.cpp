#include "shiftlab/field_context.hpp"

#include "shiftlab/error.hpp"
#include "shiftlab/number_theory.hpp"

namespace shiftlab {

Characteristic::Characteristic(std::uint64_t value) : value_(value) {
  if (value != 0 && !is_prime(value)) {
    throw PreconditionError("characteristic must be 0 or prime (got " + std::to_string(value) + ")");
  }
}

std::string to_string(Backend b) { return b == Backend::Symbolic ? "symbolic" : "randomized"; }

Backend parse_backend(const std::string& s) {
  if (s == "symbolic") return Backend::Symbolic;
  if (s == "randomized") return Backend::Randomized;
  throw ParseError("unknown backend \"" + s + "\" (expected symbolic or randomized)");
}

mpq_class parse_epsilon(const std::string& s) {
  auto fail = [&]() -> mpq_class { throw ParseError("cannot parse epsilon \"" + s + "\""); };
  auto digits = [](const std::string& t) {
    return !t.empty() && t.find_first_not_of("0123456789") == std::string::npos;
  };
  mpq_class q;
  if (s.empty()) return fail();
  if (s.rfind("2^-", 0) == 0) {
    if (!digits(s.substr(3)) || s.size() > 8) return fail();
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, std::stoul(s.substr(3)));
    q = mpq_class(mpz_class(1), den);
  } else if (auto slash = s.find('/'); slash != std::string::npos) {
    const auto a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!digits(a) || !digits(b) || mpz_class(b) == 0) return fail();
    q = mpq_class(mpz_class(a), mpz_class(b));
    q.canonicalize();
  } else {
    // decimal with optional exponent
    std::string mant = s;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      mant = s.substr(0, e);
      std::string ex = s.substr(e + 1);
      const bool neg = !ex.empty() && ex[0] == '-';
      if (!ex.empty() && (ex[0] == '-' || ex[0] == '+')) ex.erase(0, 1);
      if (!digits(ex) || ex.size() > 4) return fail();
      exp10 = std::stol(ex) * (neg ? -1 : 1);
    }
    std::string whole = mant, frac;
    if (auto dot = mant.find('.'); dot != std::string::npos) {
      whole = mant.substr(0, dot);
      frac = mant.substr(dot + 1);
    }
    if (whole.empty()) whole = "0";
    if (!digits(whole) || (!frac.empty() && !digits(frac)) || (frac.empty() && mant.find('.') != std::string::npos)) {
      return fail();
    }
    exp10 -= static_cast<long>(frac.size());
    mpz_class num(whole + frac), scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    q = exp10 < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
    q.canonicalize();
  }
  return q;
}

SamplingPlan FieldContext::plan(const mpz_class& degree_bound) const {
  SamplingPlan plan;
  plan.characteristic = characteristic.value();
  const mpz_class d = degree_bound < 1 ? mpz_class(1) : degree_bound;
  // ceil(2 * d / epsilon)
  const mpq_class target_q = mpq_class(2 * d) / epsilon;
  mpz_class target;
  mpz_cdiv_q(target.get_mpz_t(), target_q.get_num_mpz_t(), target_q.get_den_mpz_t());
  if (characteristic.is_zero()) {
    plan.range = target;
  } else {
    const std::uint64_t p = characteristic.value();
    plan.field = field::gf_extension(p, target < p ? mpz_class(static_cast<unsigned long>(p)) : target,
                                     seed);
  }
  return plan;
}

std::uint64_t FieldContext::stream_seed(std::uint64_t call_id) const {
  return hash_combine(seed, call_id);
}

FieldContext make_field_context(std::uint64_t characteristic, Backend backend, std::uint64_t seed,
                                const mpq_class& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) throw PreconditionError("epsilon must lie in (0, 1)");
  FieldContext ctx;
  ctx.characteristic = Characteristic(characteristic);
  ctx.backend = backend;
  ctx.seed = seed;
  ctx.epsilon = epsilon;
  return ctx;
}

}  // namespace shiftlab
