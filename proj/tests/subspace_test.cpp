#include <gtest/gtest.h>

#include <algorithm>

#include "corpus.hpp"
#include "mgk/subspace.hpp"

namespace mgk {
namespace {

using testing::load_fixture;
using testing::ops_of;
using testing::set_of;

SubsetRef ref(const MultiGroupSpace& ms, std::initializer_list<std::string_view> elems,
              std::initializer_list<std::string_view> ops) {
  return SubsetRef::create(ms, set_of(ms, elems), ops_of(ms, ops));
}

bool induced_validates(const MultiGroupSpace& ms, const SubsetRef& s) {
  return validate_multigroup(induced_space(ms, s)).ok();
}

TEST(SubsetRef, KeptOpMustTouchTheSubset) {
  auto gf3 = load_fixture("gf3.mgs");
  EXPECT_THROW(ref(gf3, {"0"}, {"+", "*"}), StructuralError);
  EXPECT_THROW(SubsetRef::create(gf3, ElementSet(4, {ElementId(3)}), ops_of(gf3, {"+"})), DomainError);
  EXPECT_EQ(SubsetRef::touching(gf3, set_of(gf3, {"0"})).ops(), ops_of(gf3, {"+"}));
}

TEST(Subspace, FieldSubsets) {
  auto gf3 = load_fixture("gf3.mgs");

  auto both = ref(gf3, {"0", "1"}, {"+", "*"});
  EXPECT_FALSE(is_subspace(gf3, both));
  auto ev = is_subspace_by_intersection(gf3, both);
  EXPECT_FALSE(ev.verdict);
  ASSERT_EQ(ev.per_op.size(), 2u);
  EXPECT_EQ(ev.per_op[0].verdict, IntersectionVerdict::not_subgroup);  // {0,1} under +
  EXPECT_EQ(ev.per_op[1].verdict, IntersectionVerdict::subgroup);      // {1} under *
  EXPECT_FALSE(is_subspace_by_completeness(gf3, both));
  EXPECT_FALSE(induced_validates(gf3, both));

  EXPECT_TRUE(is_subspace(gf3, ref(gf3, {"0"}, {"+"})));
  EXPECT_TRUE(is_subspace(gf3, ref(gf3, {"1", "2"}, {"*"})));
  EXPECT_TRUE(is_subspace(gf3, ref(gf3, {"1"}, {"*"})));
  EXPECT_TRUE(is_subspace(gf3, SubsetRef::whole(gf3)));
}

TEST(Subspace, RawUnionAcceptsAnUncoveredSubset) {
  // 0 lies in no kept carrier, yet {0,1} is closed under * where * is defined.
  auto gf3 = load_fixture("gf3.mgs");
  auto s = ref(gf3, {"0", "1"}, {"*"});
  EXPECT_TRUE(is_subspace_by_completeness(gf3, s));
  EXPECT_FALSE(is_subspace(gf3, s));
  auto ev = is_subspace_by_intersection(gf3, s);
  EXPECT_FALSE(ev.verdict);
  EXPECT_EQ(ev.uncovered, set_of(gf3, {"0"}));
  EXPECT_FALSE(induced_validates(gf3, s));
}

// Every valid SubsetRef of a small space: the subgroup reading, the closure
// reading and validation of the induced space must agree.
TEST(Subspace, ReadingsAgreeExhaustively) {
  for (const auto& file : testing::fixture_files()) {
    auto ms = load_fixture(file);
    if (!validate_multigroup(ms).ok() || ms.capacity() > 8) continue;
    std::size_t checked = 0;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << ms.capacity()); ++m) {
      auto elems = ElementSet::from_mask(ms.capacity(), m);
      for (std::uint64_t o = 1; o < (std::uint64_t{1} << ms.op_count()); ++o) {
        OpMask ops(o);
        bool touches = std::ranges::all_of(ops.indices(), [&](OpIndex k) {
          return ms.group(k).carrier_set().intersects(elems);
        });
        if (!touches) continue;
        auto s = SubsetRef::create(ms, elems, ops);
        bool verdict = is_subspace(ms, s);
        EXPECT_EQ(is_subspace_by_intersection(ms, s).verdict, verdict) << file << " mask " << m;
        EXPECT_EQ(induced_validates(ms, s), verdict) << file << " mask " << m;
        if (verdict) EXPECT_TRUE(is_subspace_by_completeness(ms, s)) << file;
        ++checked;
      }
    }
    EXPECT_GT(checked, 0u) << file;
  }
}

TEST(Subspace, SubspaceOfASubspaceIsASubspace) {
  for (auto file : {"z2z3.mgs", "gf3.mgs", "shared_identity.mgs", "s3.mgs"}) {
    auto ms = load_fixture(file);
    const auto n = ms.capacity();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
      auto h = SubsetRef::touching(ms, ElementSet::from_mask(n, m));
      if (!is_subspace(ms, h)) continue;
      auto inner = induced_space(ms, h);
      for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
        auto part = ElementSet::from_mask(n, k);
        if (!part.is_subset_of(inner.universe())) continue;
        auto ks = SubsetRef::touching(inner, part);
        if (!is_subspace(inner, ks)) continue;
        // The induced space keeps the ambient ids.
        EXPECT_TRUE(is_subspace(ms, SubsetRef::touching(ms, part))) << file;
      }
    }
  }
}

TEST(Coset, OddPermutationsInS3) {
  auto s3 = load_fixture("s3.mgs");
  auto a3 = ref(s3, {"e", "(123)", "(132)"}, {"o"});
  EXPECT_EQ(coset(s3, a3, s3.element("(12)")), set_of(s3, {"(12)", "(13)", "(23)"}));
  EXPECT_EQ(coset(s3, a3, s3.element("(123)")), a3.elements());
  EXPECT_FALSE(coset_is_fallback(s3, a3, s3.element("(12)")));
  EXPECT_THROW(coset(s3, ref(s3, {"e", "(12)", "(13)"}, {"o"}), s3.element("e")), PreconditionError);
}

TEST(Coset, NoDefinedProductFallsBackToTheElement) {
  auto ms = load_fixture("z2z3.mgs");
  auto h = ref(ms, {"a0", "a1"}, {"a"});
  EXPECT_TRUE(coset_is_fallback(ms, h, ms.element("b1")));
  EXPECT_EQ(coset(ms, h, ms.element("b1")), set_of(ms, {"b1"}));
}

TEST(CosetDecomposition, S3ModuloA3) {
  auto s3 = load_fixture("s3.mgs");
  auto d = coset_decomposition(s3, ref(s3, {"e", "(123)", "(132)"}, {"o"}));
  ASSERT_EQ(d.cosets.size(), 2u);
  EXPECT_EQ(d.cosets[0].size(), 3u);
  EXPECT_EQ(d.cosets[1].size(), 3u);
  EXPECT_EQ(d.transversal.size(), 2u);
  EXPECT_TRUE(d.fallback.empty());
}

TEST(CosetDecomposition, WholeSpaceIsOneCoset) {
  for (auto file : {"s3.mgs", "gf3.mgs", "z12.mgs"}) {
    auto ms = load_fixture(file);
    auto d = coset_decomposition(ms, SubsetRef::whole(ms));
    ASSERT_EQ(d.cosets.size(), 1u) << file;
    EXPECT_EQ(d.cosets[0], ms.universe()) << file;
  }
}

TEST(CosetDecomposition, PartitionsTheUniverseForEveryNormalSubgroup) {
  for (const auto& [name, ms] : testing::group_corpus()) {
    const auto& g = ms.group(0);
    for (const auto& n : subgroups(g)) {
      if (!is_normal_subgroup(g, n)) continue;
      auto d = coset_decomposition(ms, SubsetRef::touching(ms, n));
      ElementSet seen(ms.capacity());
      for (const auto& c : d.cosets) {
        EXPECT_EQ(c.size(), n.size()) << name;
        EXPECT_FALSE(seen.intersects(c)) << name;
        seen = seen | c;
      }
      EXPECT_EQ(seen, ms.universe()) << name;
      EXPECT_EQ(d.cosets.size() * n.size(), g.order()) << name;
    }
  }
}

TEST(CosetDecomposition, RequiresASubspace) {
  auto gf3 = load_fixture("gf3.mgs");
  EXPECT_THROW(coset_decomposition(gf3, ref(gf3, {"0", "1"}, {"+"})), PreconditionError);
}

TEST(Lagrange, HoldsAcrossCorpus) {
  for (const auto& [name, ms] : testing::group_corpus()) {
    auto r = lagrange_check(ms.group(0));
    EXPECT_TRUE(r.holds) << name;
    EXPECT_FALSE(r.witness.has_value()) << name;
  }
}

}  // namespace
}  // namespace mgk
