#include "subsetsum/convolution.hpp"

#include <algorithm>
#include <bit>
#include <initializer_list>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "subsetsum/errors.hpp"

using namespace subsetsum;

namespace {

BoolVec from_members(std::size_t len, std::initializer_list<std::size_t> m) {
  BoolVec v(len);
  for (std::size_t i : m) v.set(i);
  return v;
}

struct CutoffGuard {
  std::uint64_t saved = naive_cutoff();
  ~CutoffGuard() { set_naive_cutoff(saved); }
};

}  // namespace

TEST_CASE("conv_support examples") {
  const BoolVec a = from_members(2, {0, 1});
  const BoolVec b = from_members(3, {0, 2});
  const BoolVec g = conv_support(a, b, 3);
  CHECK(g == from_members(4, {0, 1, 2, 3}));

  // {0} is the identity, truncated at the limit.
  const BoolVec one = from_members(1, {0});
  const BoolVec big = from_members(9, {1, 4, 8});
  CHECK(conv_support(one, big, 8) == from_members(9, {1, 4, 8}));
  CHECK(conv_support(one, big, 5) == from_members(6, {1, 4}));

  // Single pair over the limit truncates to empty.
  const BoolVec x = from_members(6, {5});
  const BoolVec y = from_members(8, {7});
  CHECK_FALSE(conv_support(x, y, 10).any());
}

TEST_CASE("conv_support: naive and transform paths agree with the oracle") {
  std::mt19937_64 rng(21);
  CutoffGuard guard;
  for (int it = 0; it < 150; ++it) {
    const std::size_t la = 1 + rng() % 600, lb = 1 + rng() % 600;
    const int density = 1 + static_cast<int>(rng() % 8);
    BoolVec a(la), b(lb);
    for (std::size_t i = 0; i < la; ++i)
      if (static_cast<int>(rng() % 8) < density) a.set(i);
    for (std::size_t i = 0; i < lb; ++i)
      if (static_cast<int>(rng() % 8) < density) b.set(i);
    const std::uint64_t limit = rng() % (la + lb + 10);

    const BoolVec want = test_oracle::conv_slow(a, b, limit);
    set_naive_cutoff(UINT64_MAX);  // force the double loop
    CHECK(conv_support(a, b, limit) == want);
    set_naive_cutoff(0);  // force the transform
    CHECK(conv_support(a, b, limit) == want);
  }
}

TEST_CASE("conv_support: half-size cyclic shape (conv_len = 2^m + 1)") {
  // Extents u+1 each give conv_len = 2u+1; the transform path runs a size-2u
  // cyclic convolution where index 2u wraps onto 0. Check both the 0-in-both
  // and 0-missing cases against the oracle.
  std::mt19937_64 rng(22);
  CutoffGuard guard;
  set_naive_cutoff(0);
  for (std::size_t u : {8, 64, 512}) {
    for (int zeros = 0; zeros < 2; ++zeros) {
      BoolVec a(u + 1), b(u + 1);
      for (std::size_t i = 1; i < u; ++i) {
        if (rng() & 1) a.set(i);
        if (rng() & 1) b.set(i);
      }
      a.set(u);
      b.set(u);  // force wrapping mass at index 2u
      if (zeros) {
        a.set(0);
        b.set(0);
      }
      for (std::uint64_t limit : {std::uint64_t{0}, u / 2, 2 * u - 2}) {
        CHECK(conv_support(a, b, limit) ==
              test_oracle::conv_slow(a, b, limit));
      }
    }
  }
}

TEST_CASE("conv_support commutes") {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 60; ++it) {
    BoolVec a(1 + rng() % 200), b(1 + rng() % 200);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (rng() % 3 == 0) a.set(i);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (rng() % 3 == 0) b.set(i);
    const std::uint64_t limit = rng() % 500;
    CHECK(conv_support(a, b, limit) == conv_support(b, a, limit));
  }
}

TEST_CASE("conv_support is fold-order independent under per-step truncation") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 40; ++it) {
    BoolVec v[3] = {BoolVec(1 + rng() % 80), BoolVec(1 + rng() % 80),
                    BoolVec(1 + rng() % 80)};
    for (auto& x : v) {
      x.set(0);
      for (std::size_t i = 0; i < x.size(); ++i)
        if (rng() % 3 == 0) x.set(i);
    }
    const std::uint64_t limit = rng() % 200;
    const BoolVec left =
        conv_support(conv_support(v[0], v[1], limit), v[2], limit);
    const BoolVec right =
        conv_support(v[0], conv_support(v[1], v[2], limit), limit);
    CHECK(left == right);
  }
}

TEST_CASE("conv_support_2d examples") {
  CardSumSet a(7, 2), b(7, 2);
  a.add(0, 0);
  a.add(3, 1);
  b.add(0, 0);
  b.add(4, 1);
  const PackedGrid ga = pack_grid(a, 16), gb = pack_grid(b, 16);
  const CardSumSet got = unpack_grid(conv_support_2d(ga, gb, 7, 2), 7, 2);
  CardSumSet want(7, 2);
  want.add(0, 0);
  want.add(3, 1);
  want.add(4, 1);
  want.add(7, 2);
  CHECK(got == want);

  // Identity.
  CardSumSet id(7, 2);
  id.add(0, 0);
  const CardSumSet through =
      unpack_grid(conv_support_2d(pack_grid(id, 16), gb, 7, 2), 7, 2);
  CHECK(through == b);

  // Truncation to empty: 3+4 = 7 > 6.
  CardSumSet aa(6, 2), bb(6, 2);
  aa.add(3, 1);
  bb.add(4, 1);
  const CardSumSet none = unpack_grid(
      conv_support_2d(pack_grid(aa, 16), pack_grid(bb, 16), 6, 2), 6, 2);
  CHECK(none.count() == 0);
}

TEST_CASE("conv_support_2d rejects unsafe strides") {
  CardSumSet a(7, 1), b(7, 1);
  a.add(7, 1);
  b.add(7, 1);
  const PackedGrid ga = pack_grid(a, 8), gb8 = pack_grid(b, 8);
  const PackedGrid gb16 = pack_grid(b, 16);
  CHECK_THROWS_AS(conv_support_2d(ga, gb16, 7, 2), InputError);  // mismatch
  CHECK_THROWS_AS(conv_support_2d(ga, gb8, 7, 2), InputError);   // aliasing
}

TEST_CASE("conv_support_2d matches the quadruple-loop oracle, both paths") {
  std::mt19937_64 rng(24);
  CutoffGuard guard;
  for (int it = 0; it < 80; ++it) {
    const std::uint64_t su = 1 + rng() % 40, sc = 1 + rng() % 5;
    CardSumSet a(su, sc), b(su, sc);
    auto fill = [&rng, su, sc](CardSumSet& s) {
      s.add(0, 0);
      for (std::uint64_t j = 0; j <= sc; ++j)
        for (std::uint64_t v = 0; v <= su; ++v)
          if (rng() % 4 == 0) s.add(v, j);
    };
    fill(a);
    fill(b);
    const std::uint64_t u = rng() % (2 * su + 2), c = rng() % (2 * sc + 2);
    const CardSumSet want = test_oracle::conv2d_slow(a, b, u, c);

    const std::uint64_t w = std::bit_ceil(2 * std::max(a.max_sum(),
                                                       b.max_sum()) + 1);
    const std::uint64_t sum_limit = std::min(u, a.max_sum() + b.max_sum());
    for (std::uint64_t cutoff : {std::uint64_t{0}, UINT64_MAX}) {
      set_naive_cutoff(cutoff);
      const CardSumSet got = unpack_grid(
          conv_support_2d(pack_grid(a, w), pack_grid(b, w), sum_limit, c), u,
          c);
      CHECK(got == want);
    }
  }
}

TEST_CASE("2D with card_extent 0 equals 1D on the rows") {
  std::mt19937_64 rng(25);
  for (int it = 0; it < 30; ++it) {
    const std::uint64_t su = 1 + rng() % 60;
    CardSumSet a(su, 0), b(su, 0);
    a.add(0, 0);
    b.add(0, 0);
    for (std::uint64_t v = 0; v <= su; ++v) {
      if (rng() % 3 == 0) a.add(v, 0);
      if (rng() % 3 == 0) b.add(v, 0);
    }
    const std::uint64_t u = rng() % (2 * su + 1);
    const std::uint64_t w = std::bit_ceil(2 * std::max(a.max_sum(),
                                                       b.max_sum()) + 1);
    const std::uint64_t sum_limit = std::min(u, a.max_sum() + b.max_sum());
    const CardSumSet got2d = unpack_grid(
        conv_support_2d(pack_grid(a, w), pack_grid(b, w), sum_limit, 0), u, 0);

    BoolVec ra(su + 1), rb(su + 1);
    a.for_each([&ra](std::uint64_t s, std::uint64_t) { ra.set(s); });
    b.for_each([&rb](std::uint64_t s, std::uint64_t) { rb.set(s); });
    const BoolVec got1d = conv_support(ra, rb, u);

    BoolVec rows(u + 1);
    got2d.for_each([&rows](std::uint64_t s, std::uint64_t) { rows.set(s); });
    CHECK(rows == got1d);
  }
}

TEST_CASE("adversarial maximal-s grids do not alias across rows") {
  // Every cell at the maximal sum extent; a too-generous stride must still
  // give oracle-exact results.
  const std::uint64_t su = 31;
  CardSumSet a(su, 3), b(su, 3);
  for (std::uint64_t j = 0; j <= 3; ++j) {
    a.add(su, j);
    b.add(su, j);
    a.add(su - 1, j);
    b.add(su - 1, j);
  }
  const CardSumSet want = test_oracle::conv2d_slow(a, b, 62, 6);
  const std::uint64_t w = std::bit_ceil(2 * su + 1);
  const CardSumSet got = unpack_grid(
      conv_support_2d(pack_grid(a, w), pack_grid(b, w), 62, 6), 62, 6);
  CHECK(got == want);
}

TEST_CASE("transform-size limit is a clean error") {
  CutoffGuard guard;
  set_naive_cutoff(0);
  BoolVec a(std::size_t{1} << 27), b(std::size_t{1} << 27);
  a.set(0);
  a.set((std::size_t{1} << 27) - 1);
  b.set(0);
  b.set((std::size_t{1} << 27) - 1);
  CHECK_THROWS_AS(conv_support(a, b, (std::uint64_t{1} << 28)), LimitError);
}
