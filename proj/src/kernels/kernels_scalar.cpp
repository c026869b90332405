#include "shiftlab/kernels.hpp"

#include <stdexcept>

namespace shiftlab::kernels {

namespace {

void gfp_submul_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t len,
                       std::uint64_t c, std::uint64_t /*companion*/, std::uint64_t p) {
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint64_t prod = (c * src[i]) % p;
    dst[i] = dst[i] >= prod ? dst[i] - prod : dst[i] + p - prod;
  }
}

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) dst[i] ^= src[i];
}

std::uint64_t gf2e_mul_scalar(std::uint64_t a, std::uint64_t b, const Gf2eModulus& m) {
  // Horner over the bits of b, reducing after every shift.
  const std::uint64_t top = std::uint64_t{1} << m.degree;
  std::uint64_t r = 0;
  for (int i = static_cast<int>(m.degree) - 1; i >= 0; --i) {
    const bool carry = (r >> (m.degree - 1)) & 1U;
    r = (r << 1) & (top - 1);
    if (carry) r ^= (m.poly & (top - 1));
    if ((b >> i) & 1U) r ^= a;
  }
  return r;
}

void gf2e_addmul_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t len,
                        std::uint64_t c, const Gf2eModulus& m) {
  for (std::size_t i = 0; i < len; ++i) dst[i] ^= gf2e_mul_scalar(c, src[i], m);
}

}  // namespace

Gf2eModulus make_gf2e_modulus(std::uint64_t poly) {
  if (poly < 2) throw std::invalid_argument("GF(2^e) modulus must have degree >= 1");
  Gf2eModulus m;
  m.degree = 63U - static_cast<unsigned>(__builtin_clzll(poly));
  m.poly = poly;
  // Long division of t^(2e) by f; the quotient has degree e, so it fits.
  const unsigned e = m.degree;
  unsigned __int128 rem = static_cast<unsigned __int128>(1) << (2 * e);
  std::uint64_t quot = 0;
  for (int shift = static_cast<int>(e); shift >= 0; --shift) {
    if ((rem >> (static_cast<unsigned>(shift) + e)) & 1U) {
      quot |= std::uint64_t{1} << shift;
      rem ^= static_cast<unsigned __int128>(poly) << shift;
    }
  }
  m.barrett = quot;
  return m;
}

std::uint64_t shoup_companion(std::uint64_t c, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(c) << 32) / p);
}

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", gfp_submul_scalar, xor_words_scalar, gf2e_mul_scalar,
                                 gf2e_addmul_scalar};
  return table;
}

}  // namespace shiftlab::kernels
