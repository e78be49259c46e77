#include "subsetsum/convolution.hpp"

#include <bit>
#include <cstdlib>
#include <string>
#include <vector>

#include "subsetsum/errors.hpp"
#include "subsetsum/ntt.hpp"

namespace subsetsum {
namespace {

std::uint64_t g_cutoff = []() -> std::uint64_t {
  if (const char* env = std::getenv("SUMSET_NAIVE_CUTOFF")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return kDefaultNaiveCutoff;
}();

BoolVec conv_naive(const BoolVec& a, const BoolVec& b,
                   std::uint64_t out_limit) {
  BoolVec out(out_limit + 1);
  std::vector<std::size_t> bm;
  bm.reserve(b.count());
  b.for_each_set([&bm](std::size_t j) { bm.push_back(j); });
  a.for_each_set([&](std::size_t i) {
    if (i > out_limit) return;
    for (std::size_t j : bm) {
      if (i + j > out_limit) break;
      out.set(i + j);
    }
  });
  return out;
}

BoolVec conv_ntt(const BoolVec& a, std::size_t ea, const BoolVec& b,
                 std::size_t eb, std::uint64_t out_limit) {
  const std::size_t conv_len = ea + eb - 1;
  std::size_t n = std::bit_ceil(conv_len);
  // conv_len one past a power of two (the common dense-fold shape, extents
  // both u) would double the transform for a single coefficient. Run the
  // half-size cyclic transform instead: only index conv_len-1 wraps, onto
  // index 0, and coefficient 0 is just a[0]*b[0] — patched in directly below.
  const bool wrap = conv_len >= 3 && std::has_single_bit(conv_len - 1) &&
                    out_limit < conv_len - 1;
  if (wrap) n = conv_len - 1;
  if (n > ntt::kMaxTransform)
    throw LimitError("convolution length " + std::to_string(conv_len) +
                     " exceeds the transform-size limit 2^27");

  // Reused across calls: a fold chain re-allocating two multi-MB vectors per
  // step spends more time page-faulting than transforming.
  thread_local std::vector<std::uint32_t> fa, fb;
  fa.assign(n, 0);
  fb.assign(n, 0);
  a.for_each_set([&](std::size_t i) {
    if (i < ea) fa[i] = 1;
  });
  b.for_each_set([&](std::size_t i) {
    if (i < eb) fb[i] = 1;
  });
  ntt::transform(fa);
  ntt::transform(fb);
  for (std::size_t i = 0; i < n; ++i) fa[i] = ntt::mul(fa[i], fb[i]);
  ntt::inverse_transform_unscaled(fa);

  BoolVec out(out_limit + 1);
  const std::size_t last = std::min<std::size_t>(out_limit, conv_len - 1);
  if (wrap) {
    if (a.test(0) && b.test(0)) out.set(0);
  } else if (fa[0]) {
    out.set(0);
  }
  for (std::size_t i = 1; i <= last; ++i)
    if (fa[i]) out.set(i);
  return out;
}

}  // namespace

std::uint64_t naive_cutoff() { return g_cutoff; }

void set_naive_cutoff(std::uint64_t cutoff) { g_cutoff = cutoff; }

BoolVec conv_support(const BoolVec& a, const BoolVec& b,
                     std::uint64_t out_limit) {
  const std::ptrdiff_t ha = a.highest_set();
  const std::ptrdiff_t hb = b.highest_set();
  if (ha < 0 || hb < 0) return BoolVec(out_limit + 1);

  const std::uint64_t ca = a.count(), cb = b.count();
  if (static_cast<unsigned __int128>(ca) * cb <= naive_cutoff())
    return conv_naive(a, b, out_limit);
  return conv_ntt(a, static_cast<std::size_t>(ha) + 1, b,
                  static_cast<std::size_t>(hb) + 1, out_limit);
}

PackedGrid pack_grid(const CardSumSet& s, std::uint64_t width_stride) {
  PackedGrid g;
  g.width_stride = width_stride;
  g.sum_extent = s.max_sum();
  g.card_extent = s.max_card();
  if (width_stride <= g.sum_extent)
    throw InputError("packing stride must exceed the maximal stored sum");
  g.underlying = BoolVec(width_stride * (g.card_extent + 1));
  s.for_each([&g, width_stride](std::uint64_t sum, std::uint64_t j) {
    g.underlying.set(j * width_stride + sum);
  });
  return g;
}

CardSumSet unpack_grid(const PackedGrid& g, std::uint64_t u, std::uint64_t c) {
  CardSumSet out(u, c);
  const std::uint64_t w = g.width_stride;
  g.underlying.for_each_set([&](std::size_t idx) {
    const std::uint64_t s = idx % w, j = idx / w;
    if (s <= u && j <= c) out.add(s, j);
  });
  return out;
}

PackedGrid conv_support_2d(const PackedGrid& a, const PackedGrid& b,
                           std::uint64_t sum_limit, std::uint64_t card_limit) {
  if (a.width_stride != b.width_stride)
    throw InputError("packed-grid stride mismatch: " +
                     std::to_string(a.width_stride) + " vs " +
                     std::to_string(b.width_stride));
  const std::uint64_t w = a.width_stride;
  const std::uint64_t max_ext = std::max(a.sum_extent, b.sum_extent);
  if (w < 2 * max_ext + 1)
    throw InputError("packing stride " + std::to_string(w) +
                     " allows row aliasing (needs >= " +
                     std::to_string(2 * max_ext + 1) + ")");
  if (sum_limit >= w)
    throw InputError("sum_limit must be smaller than the packing stride");

  const std::uint64_t out_cards =
      std::min(card_limit, a.card_extent + b.card_extent);
  const std::uint64_t packed_limit = w * (out_cards + 1) - 1;
  const BoolVec conv = conv_support(a.underlying, b.underlying, packed_limit);

  PackedGrid out;
  out.width_stride = w;
  out.sum_extent = std::min(sum_limit, a.sum_extent + b.sum_extent);
  out.card_extent = out_cards;
  out.underlying = BoolVec(w * (out_cards + 1));
  conv.for_each_set([&](std::size_t idx) {
    const std::uint64_t s = idx % w, j = idx / w;
    if (s <= sum_limit && j <= card_limit) out.underlying.set(idx);
  });
  return out;
}

}  // namespace subsetsum
