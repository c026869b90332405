#pragma once

// Inner loops of the finite-field eliminations.
//
// Every kernel has a portable scalar reference and, on x86-64, an
// AVX2 / PCLMULQDQ variant. The variant is chosen once at runtime from the
// CPU feature bits; setting SHIFTLAB_SIMD=scalar forces the reference path.
// Both paths must agree bit for bit (tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>

namespace shiftlab::kernels {

// Reduction data for GF(2)[t]/(f) with deg f = degree <= 63.
struct Gf2eModulus {
  unsigned degree = 1;
  std::uint64_t poly = 0b11;  // f, including the t^degree bit
  std::uint64_t barrett = 0;  // floor(t^(2*degree) / f)
};

Gf2eModulus make_gf2e_modulus(std::uint64_t poly);

// floor(c * 2^32 / p), the precomputed companion of c for gfp_submul.
std::uint64_t shoup_companion(std::uint64_t c, std::uint64_t p);

struct KernelTable {
  const char* name;
  // dst[i] <- dst[i] - c * src[i] (mod p). Requires p < 2^31 and all
  // inputs already reduced; companion = shoup_companion(c, p).
  void (*gfp_submul)(std::uint64_t* dst, const std::uint64_t* src, std::size_t len,
                     std::uint64_t c, std::uint64_t companion, std::uint64_t p);
  // dst[i] ^= src[i]
  void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t len);
  // a * b in GF(2^degree); operands below 2^degree.
  std::uint64_t (*gf2e_mul)(std::uint64_t a, std::uint64_t b, const Gf2eModulus& m);
  // dst[i] ^= c * src[i] in GF(2^degree)
  void (*gf2e_addmul)(std::uint64_t* dst, const std::uint64_t* src, std::size_t len,
                      std::uint64_t c, const Gf2eModulus& m);
};

const KernelTable& scalar_kernels();

// nullptr when the CPU (or the build target) lacks the instructions.
const KernelTable* simd_kernels();

// The table used by the library: simd_kernels() unless unavailable or
// disabled through the environment.
const KernelTable& active();

}  // namespace shiftlab::kernels
