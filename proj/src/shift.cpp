#include "shiftlab/shift.hpp"

#include <algorithm>
#include <vector>

#include "shiftlab/error.hpp"
#include "shiftlab/number_theory.hpp"

namespace shiftlab {

bool operator==(const RankProfile& a, const RankProfile& b) {
  return a.ranks == b.ranks && a.pivots == b.pivots;
}

mpz_class shift_degree_bound(unsigned degree, const UniformHypergraph& s) {
  mpz_class d = degree;
  d *= s.k();
  d *= static_cast<unsigned long>(s.size());
  d *= static_cast<unsigned long>(binomial(s.n(), s.k()));
  return d;
}

Subset apply(const Permutation& w, Subset s) {
  Subset out = 0;
  for (auto i : elements(s)) out |= element_bit(w(i));
  return out;
}

namespace {

std::uint64_t hypergraphs_hash(const std::vector<UniformHypergraph>& hs) {
  std::uint64_t h = mix64(hs.size());
  for (const auto& s : hs) {
    h = hash_combine(h, (std::uint64_t{s.n()} << 32U) | s.k());
    for (auto e : s.edges()) h = hash_combine(h, e);
  }
  return h;
}

template <class D>
std::vector<RankProfile> profiles_over(const D& dom, const Matrix<typename D::Elem>& g,
                                       const std::vector<UniformHypergraph>& hs) {
  std::vector<RankProfile> out;
  out.reserve(hs.size());
  for (const auto& s : hs) {
    if (s.empty()) {
      RankProfile rp;
      rp.ranks.assign(binomial(s.n(), s.k()) + 1, 0);
      out.push_back(std::move(rp));
      continue;
    }
    out.push_back(rank_profile(dom, compound_rows(dom, g, s), {}, s.size()));
  }
  return out;
}

template <class F>
Matrix<typename F::Elem> evaluate(const GenericMatrix& g, const F& field, const EvalPoint<F>& pt) {
  return map_matrix<typename F::Elem>(g.entries(), [&](const MultiPoly& p) { return poly_eval(p, field, pt); });
}

bool symbolically_singular(const GenericMatrix& g, std::uint64_t p) {
  const PolyRing ring(p);
  const auto m = map_matrix<MultiPoly>(g.entries(), [&](const MultiPoly& e) { return ring.reduce(e); });
  return determinant(ring, m).is_zero();
}

// Draws points until g evaluates to an invertible matrix. A singular
// evaluation of a matrix whose determinant is a nonzero polynomial is a
// sampling accident and triggers a fresh draw.
template <class F, class Sample>
Matrix<typename F::Elem> invertible_evaluation(const GenericMatrix& g, std::uint64_t characteristic, const F& field,
                                               Sample&& sample) {
  const auto vars = g.variables();
  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    EvalPoint<F> pt;
    for (auto v : vars) pt.set(v, sample());
    auto m = evaluate(g, field, pt);
    if (rank(field, m) == g.n()) return m;
    if (attempt == 0 && symbolically_singular(g, characteristic)) {
      throw PreconditionError("matrix not invertible");
    }
  }
  throw InternalError("no invertible evaluation found; the sampling range is too small");
}

template <class Fn>
auto with_char_p_field(const field::ExtensionSpec& spec, Fn&& fn) {
  if (spec.degree == 1) return fn(field::PrimeField(spec.p));
  if (spec.p == 2 && spec.degree <= 63) {
    std::uint64_t bits = 0;
    for (unsigned i = 0; i <= spec.degree; ++i) {
      if (spec.modulus[i] != 0) bits |= std::uint64_t{1} << i;
    }
    return fn(field::BinaryExtField(bits));
  }
  return fn(field::ExtensionField(spec.p, spec.modulus));
}

std::vector<RankProfile> symbolic_profiles(const GenericMatrix& g, const std::vector<UniformHypergraph>& hs,
                                           const FieldContext& ctx) {
  const std::uint64_t p = ctx.characteristic.value();
  const PolyRing ring(p);
  // Invertibility: one evaluation decides "nonsingular"; only a singular
  // evaluation needs the symbolic determinant.
  bool invertible = false;
  field::Rng rng(ctx.stream_seed(hash_combine(g.hash(), 0x1d)));
  if (p == 0) {
    const field::PrimeField f(prime_below_power_of_two(61));
    EvalPoint<field::PrimeField> pt;
    for (auto v : g.variables()) pt.set(v, f.random(rng));
    invertible = rank(f, evaluate(g, f, pt)) == g.n();
  } else {
    const auto plan = ctx.plan(mpz_class(g.degree_bound()) * g.n());
    invertible = with_char_p_field(plan.field, [&](const auto& f) {
      using F = std::decay_t<decltype(f)>;
      EvalPoint<F> pt;
      for (auto v : g.variables()) pt.set(v, f.random(rng));
      return rank(f, evaluate(g, f, pt)) == g.n();
    });
  }
  if (!invertible && symbolically_singular(g, p)) throw PreconditionError("matrix not invertible");
  const auto m = map_matrix<MultiPoly>(g.entries(), [&](const MultiPoly& e) { return ring.reduce(e); });
  return profiles_over(ring, m, hs);
}

// Uniform in [0, bound) by rejection on whole 64-bit words. (Seeding GMP's own
// generator per call costs more than the elimination.)
mpz_class uniform_below(const mpz_class& bound, field::Rng& rng) {
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::uint64_t top_mask = bits % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (bits % 64)) - 1;
  std::vector<std::uint64_t> limbs(words);
  mpz_class x;
  do {
    for (auto& l : limbs) l = rng();
    limbs.back() &= top_mask;
    mpz_import(x.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, limbs.data());
  } while (x >= bound);
  return x;
}

std::vector<RankProfile> exact_integer_profiles(const GenericMatrix& g, const std::vector<UniformHypergraph>& hs,
                                                const SamplingPlan& plan, field::Rng& rng) {
  const field::IntegerRing z;
  auto m = invertible_evaluation(g, 0, z, [&] { return mpz_class(uniform_below(plan.range, rng) + 1); });
  return profiles_over(z, m, hs);
}

std::vector<RankProfile> randomized_profiles(const GenericMatrix& g, const std::vector<UniformHypergraph>& hs,
                                             const FieldContext& ctx) {
  mpz_class bound = 0;
  for (const auto& s : hs) bound += shift_degree_bound(g.degree_bound(), s);
  const auto plan = ctx.plan(bound);
  field::Rng rng(ctx.stream_seed(hash_combine(g.hash(), hypergraphs_hash(hs))));
  if (ctx.characteristic.is_zero()) {
    if (ctx.double_prime) {
      const field::PrimeField f1(prime_below_power_of_two(62));
      const field::PrimeField f2(prime_below_power_of_two(61));
      try {
        auto m1 = invertible_evaluation(g, 0, f1, [&] { return f1.random(rng); });
        auto m2 = invertible_evaluation(g, 0, f2, [&] { return f2.random(rng); });
        auto r1 = profiles_over(f1, m1, hs);
        if (r1 == profiles_over(f2, m2, hs)) return r1;
      } catch (const InternalError&) {
        // fall through to the exact computation
      }
    }
    return exact_integer_profiles(g, hs, plan, rng);
  }
  return with_char_p_field(plan.field, [&](const auto& f) {
    auto m = invertible_evaluation(g, ctx.characteristic.value(), f, [&] { return f.random(rng); });
    return profiles_over(f, m, hs);
  });
}

}  // namespace

std::vector<RankProfile> shift_profiles(const GenericMatrix& g, const std::vector<UniformHypergraph>& hs,
                                        const FieldContext& ctx) {
  for (const auto& s : hs) {
    if (s.n() != g.n()) throw PreconditionError("matrix and hypergraph have different n");
  }
  if (ctx.backend == Backend::Symbolic) return symbolic_profiles(g, hs, ctx);
  return randomized_profiles(g, hs, ctx);
}

RankProfile shift_profile(const GenericMatrix& g, const UniformHypergraph& s, const FieldContext& ctx) {
  return shift_profiles(g, {s}, ctx).front();
}

std::vector<UniformHypergraph> delta_shift_all(const GenericMatrix& g, const std::vector<UniformHypergraph>& hs,
                                               const FieldContext& ctx) {
  const auto profiles = shift_profiles(g, hs, ctx);
  std::vector<UniformHypergraph> out;
  out.reserve(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const auto cols = all_subsets(hs[i].n(), hs[i].k());
    std::vector<Subset> edges;
    for (auto p : profiles[i].pivots) edges.push_back(cols[p]);
    if (edges.size() != hs[i].size()) throw InternalError("shift changed the number of edges");
    out.emplace_back(hs[i].n(), hs[i].k(), std::move(edges));
  }
  return out;
}

UniformHypergraph delta_shift(const GenericMatrix& g, const UniformHypergraph& s, const FieldContext& ctx) {
  return delta_shift_all(g, {s}, ctx).front();
}

UniformHypergraph partial_shift(const UniformHypergraph& s, const Permutation& w, const FieldContext& ctx) {
  if (w.n() != s.n()) throw PreconditionError("permutation and hypergraph have different n");
  return delta_shift(build_r(w), s, ctx);
}

UniformHypergraph full_shift(const UniformHypergraph& s, const FieldContext& ctx) {
  return partial_shift(s, Permutation::longest(s.n()), ctx);
}

UniformHypergraph combinatorial_shift(const UniformHypergraph& s, const Permutation& t) {
  if (!t.is_transposition()) throw PreconditionError("combinatorial shift needs a transposition");
  if (t.n() != s.n()) throw PreconditionError("permutation and hypergraph have different n");
  std::vector<Subset> out;
  out.reserve(s.size());
  for (auto sigma : s.edges()) {
    const Subset moved = apply(t, sigma);
    out.push_back(lex_less(moved, sigma) && !s.contains(moved) ? moved : sigma);
  }
  return UniformHypergraph(s.n(), s.k(), std::move(out));
}

}  // namespace shiftlab
