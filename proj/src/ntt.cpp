#include "subsetsum/ntt.hpp"

#include <bit>
#include <cassert>

namespace subsetsum::ntt {
namespace {

constexpr std::uint32_t kModInvNeg = []() {
  // -kMod^{-1} mod 2^32 by Newton iteration.
  std::uint32_t inv = kMod;
  for (int i = 0; i < 5; ++i) inv *= 2u - kMod * inv;
  return ~inv + 1u;
}();

constexpr std::uint32_t kR = static_cast<std::uint32_t>(
    (static_cast<std::uint64_t>(1) << 32) % kMod);  // Montgomery form of 1

constexpr std::uint32_t kR2 = static_cast<std::uint32_t>(
    (static_cast<unsigned __int128>(1) << 64) % kMod);

// Montgomery product: a * b * 2^-32 mod kMod.
inline std::uint32_t mont_mul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t t = static_cast<std::uint64_t>(a) * b;
  std::uint32_t m = static_cast<std::uint32_t>(t) * kModInvNeg;
  std::uint32_t r = static_cast<std::uint32_t>(
      (t + static_cast<std::uint64_t>(m) * kMod) >> 32);
  return r >= kMod ? r - kMod : r;
}

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b) {
  std::uint32_t r = a + b;
  return r >= kMod ? r - kMod : r;
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b) {
  return a >= b ? a - b : a + kMod - b;
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e) {
  std::uint32_t bm = mont_mul(base, kR2);  // to Montgomery form
  std::uint32_t acc = kR;
  while (e) {
    if (e & 1) acc = mont_mul(acc, bm);
    bm = mont_mul(bm, bm);
    e >>= 1;
  }
  return acc;  // Montgomery form of base^e
}

// Twiddle table, Montgomery domain: rt[k + j] = w_{2k}^j (or its inverse for
// the backward table), so the stage pairing elements at distance k reads
// rt[j + k] directly for every block.
struct RootTable {
  bool inverse = false;
  std::vector<std::uint32_t> rt{kR, kR};

  void ensure(std::size_t n) {
    std::size_t k = rt.size();
    if (k >= n) return;
    rt.resize(n);
    while (k < n) {
      const unsigned s = std::countr_zero(k) + 1;  // k == 2^(s-1)
      const std::uint64_t ord = (kMod - 1) >> s;
      const std::uint32_t z =  // primitive 2^s-th root (or its inverse)
          pow_mod(kPrimitiveRoot, inverse ? kMod - 1 - ord : ord);
      for (std::size_t i = k; i < 2 * k; ++i)
        rt[i] = (i & 1) ? mont_mul(rt[i / 2], z) : rt[i / 2];
      k *= 2;
    }
  }
};

thread_local RootTable g_roots;
thread_local RootTable g_inv_roots{true};

// Subarrays at or below this size run the plain iterative stage loop; larger
// ones recurse into halves first so all but the top stages touch a working
// set that stays cache-resident (the iterative all-stages loop re-streams the
// full array log n times, which dominates wall time past the LLC).
constexpr std::size_t kResident = std::size_t{1} << 15;

// Decimation in frequency: natural input, bit-reversed output.
void dif_run(std::uint32_t* a, std::size_t n, const std::uint32_t* rt) {
  if (n <= kResident) {
    for (std::size_t k = n >> 1; k >= 1; k >>= 1)
      for (std::size_t i = 0; i < n; i += 2 * k)
        for (std::size_t j = 0; j < k; ++j) {
          const std::uint32_t x = a[i + j], y = a[i + j + k];
          a[i + j] = add_mod(x, y);
          a[i + j + k] = mont_mul(rt[j + k], sub_mod(x, y));
        }
    return;
  }
  const std::size_t k = n >> 1;
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint32_t x = a[j], y = a[j + k];
    a[j] = add_mod(x, y);
    a[j + k] = mont_mul(rt[j + k], sub_mod(x, y));
  }
  dif_run(a, k, rt);
  dif_run(a + k, k, rt);
}

// Decimation in time with inverse roots: bit-reversed input, natural output.
void dit_run(std::uint32_t* a, std::size_t n, const std::uint32_t* rt) {
  if (n <= kResident) {
    for (std::size_t k = 1; k < n; k <<= 1)
      for (std::size_t i = 0; i < n; i += 2 * k)
        for (std::size_t j = 0; j < k; ++j) {
          const std::uint32_t z = mont_mul(rt[j + k], a[i + j + k]);
          const std::uint32_t x = a[i + j];
          a[i + j] = add_mod(x, z);
          a[i + j + k] = sub_mod(x, z);
        }
    return;
  }
  const std::size_t k = n >> 1;
  dit_run(a, k, rt);
  dit_run(a + k, k, rt);
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint32_t z = mont_mul(rt[j + k], a[j + k]);
    const std::uint32_t x = a[j];
    a[j] = add_mod(x, z);
    a[j + k] = sub_mod(x, z);
  }
}

}  // namespace

std::uint32_t mul(std::uint32_t a_mont, std::uint32_t b) {
  return mont_mul(a_mont, b);
}

void transform(std::vector<std::uint32_t>& a) {
  const std::size_t n = a.size();
  assert(std::has_single_bit(n) && n <= kMaxTransform);
  if (n == 1) return;
  g_roots.ensure(n);
  dif_run(a.data(), n, g_roots.rt.data());
}

void inverse_transform_unscaled(std::vector<std::uint32_t>& a) {
  const std::size_t n = a.size();
  assert(std::has_single_bit(n) && n <= kMaxTransform);
  if (n == 1) return;
  g_inv_roots.ensure(n);
  dit_run(a.data(), n, g_inv_roots.rt.data());
}

}  // namespace subsetsum::ntt
