#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "corpus.hpp"
#include "mgk/generation.hpp"

namespace mgk {
namespace {

using testing::load_fixture;
using testing::set_of;

// Naive fixed point straight from the tables.
std::uint64_t naive_closure(const MultiGroupSpace& ms, std::uint64_t seeds) {
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& g : ms.groups())
      for (auto x : g.carrier())
        for (auto y : g.carrier()) {
          if (!((seeds >> x.value) & 1) || !((seeds >> y.value) & 1)) continue;
          auto bit = std::uint64_t{1} << g.multiply(x, y).value;
          if (!(seeds & bit)) seeds |= bit, grew = true;
        }
  }
  return seeds;
}

std::uint64_t mask_of(const ElementSet& s) {
  std::uint64_t m = 0;
  s.for_each([&](ElementId e) { m |= std::uint64_t{1} << e.value; });
  return m;
}

TEST(GeneratingSet, RejectsEmptyAndForeignSeeds) {
  auto gf3 = load_fixture("gf3.mgs");
  EXPECT_THROW(GeneratingSet::create(gf3, gf3.empty_set()), DomainError);
  EXPECT_THROW(GeneratingSet::create(gf3, ElementSet(8, {ElementId(5)})), DomainError);
}

TEST(Span, FieldExamples) {
  auto gf3 = load_fixture("gf3.mgs");
  auto one = GeneratingSet::create(gf3, set_of(gf3, {"1"}));
  EXPECT_EQ(span_once(gf3, one), set_of(gf3, {"1", "2"}));  // 1+1, 1*1
  EXPECT_EQ(span_closure(gf3, one), gf3.universe());

  auto zero = GeneratingSet::create(gf3, set_of(gf3, {"0"}));
  EXPECT_EQ(span_once(gf3, zero), set_of(gf3, {"0"}));
  EXPECT_EQ(span_closure(gf3, zero), set_of(gf3, {"0"}));
}

TEST(Span, DisjointCarriersDoNotMix) {
  auto ms = load_fixture("z2z3.mgs");
  auto s = GeneratingSet::create(ms, set_of(ms, {"a1", "b1"}));
  EXPECT_EQ(span_once(ms, s), set_of(ms, {"a0", "b2"}));
  EXPECT_EQ(span_closure(ms, s), ms.universe());
}

TEST(Span, ClosureMatchesNaiveFixedPointAndIsClosed) {
  std::mt19937_64 rng(20261015);
  for (const auto& file : testing::fixture_files()) {
    auto ms = load_fixture(file);
    const auto n = ms.capacity();
    for (int trial = 0; trial < 40; ++trial) {
      std::uint64_t m = rng() & ((std::uint64_t{1} << n) - 1);
      if (m == 0) continue;
      auto seeds = ElementSet::from_mask(n, m);
      auto closure = span_closure(ms, GeneratingSet::create(ms, seeds));
      EXPECT_EQ(mask_of(closure), naive_closure(ms, m)) << file;
      EXPECT_TRUE(seeds.is_subset_of(closure)) << file;

      // Idempotent, and each carrier part is closed.
      EXPECT_EQ(span_closure(ms, GeneratingSet::create(ms, closure)), closure) << file;
      for (OpIndex k = 0; k < ms.op_count(); ++k) EXPECT_TRUE(is_complete(ms, closure, k)) << file;

      // Monotone: adding a seed never shrinks the closure.
      std::uint64_t extra = m | (std::uint64_t{1} << (rng() % n));
      auto bigger = span_closure(ms, GeneratingSet::create(ms, ElementSet::from_mask(n, extra)));
      EXPECT_TRUE(closure.is_subset_of(bigger)) << file;
    }
  }
}

TEST(Generators, FrozenExamples) {
  auto gf3 = load_fixture("gf3.mgs");
  auto w = is_finitely_generated(gf3);
  EXPECT_TRUE(w.minimal);
  EXPECT_EQ(w.seeds, set_of(gf3, {"1"}));

  auto z2z3 = load_fixture("z2z3.mgs");
  EXPECT_EQ(is_finitely_generated(z2z3).seeds, set_of(z2z3, {"a1", "b1"}));

  auto trivial = load_fixture("trivial.mgs");
  EXPECT_EQ(is_finitely_generated(trivial).seeds.size(), 1u);
}

TEST(Generators, SmallestSizeMatchesExhaustiveSearch) {
  for (const auto& file : testing::fixture_files()) {
    auto ms = load_fixture(file);
    const auto n = ms.capacity();
    const auto full = (std::uint64_t{1} << n) - 1;
    std::size_t best = n;
    for (std::uint64_t m = 1; m <= full; ++m)
      if (naive_closure(ms, m) == full) best = std::min<std::size_t>(best, std::popcount(m));

    auto w = is_finitely_generated(ms);
    EXPECT_EQ(w.seeds.size(), best) << file;
    EXPECT_EQ(naive_closure(ms, mask_of(w.seeds)), full) << file;
  }
}

TEST(Generators, AboveBoundReturnsTheUniverse) {
  auto z12 = load_fixture("z12.mgs");
  auto w = is_finitely_generated(z12, 4);
  EXPECT_FALSE(w.minimal);
  EXPECT_EQ(w.seeds, z12.universe());
}

}  // namespace
}  // namespace mgk
