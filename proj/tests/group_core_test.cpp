#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "corpus.hpp"
#include "mgk/group.hpp"
#include "oracles.hpp"

namespace mgk {
namespace {

using testing::cyclic;
using testing::group_corpus;
using testing::set_of;

const MultiGroupSpace& corpus(std::string_view name) {
  for (const auto& entry : group_corpus())
    if (entry.name == name) return entry.space;
  throw std::logic_error("no such corpus group");
}

// Rebuilds `g` with `table` and the same carrier/identity.
FiniteGroup with_table(const FiniteGroup& g, std::vector<ElementId> table) {
  return FiniteGroup(g.op(), std::vector<ElementId>(g.carrier().begin(), g.carrier().end()), g.identity(),
                     std::move(table), g.universe_size());
}

TEST(ValidateGroup, CyclicGroupHasNoViolations) {
  auto report = validate_group(cyclic(3).group(0));
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.axioms.empty());
}

TEST(ValidateGroup, SwappedEntryBreaksAssociativity) {
  const auto space = cyclic(3);
  const auto& z3 = space.group(0);
  std::vector<ElementId> table(z3.table().begin(), z3.table().end());
  std::swap(table[1 * 3 + 1], table[1 * 3 + 2]);  // row 1 becomes 1 0 2
  auto g = with_table(z3, table);
  auto report = validate_group(g);
  ASSERT_GT(report.count(ViolationKind::associativity), 0u);

  // Re-scan every triple independently and check each reported witness really fails.
  auto r = testing::raw(g);
  std::size_t failures = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c)
        if (r(r(a, b), c) != r(a, r(b, c))) ++failures;
  EXPECT_EQ(report.count(ViolationKind::associativity) + report.suppressed, failures);
  for (const auto& v : report.axioms) {
    if (v.kind != ViolationKind::associativity) continue;
    ASSERT_EQ(v.witness.size(), 3u);
    auto [a, b, c] = std::tuple{v.witness[0], v.witness[1], v.witness[2]};
    EXPECT_NE(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)));
  }
}

TEST(ValidateGroup, MissingIdentityRowIsAnIdentityViolation) {
  const auto space = cyclic(3);
  const auto& z3 = space.group(0);
  std::vector<ElementId> table(z3.table().begin(), z3.table().end());
  table[0] = ElementId(1);  // 0+0 = 1: the identity row no longer fixes 0
  auto report = validate_group(with_table(z3, table));
  EXPECT_GT(report.count(ViolationKind::identity), 0u);
  EXPECT_TRUE(report.structural.empty());
}

TEST(ValidateGroup, EntryOutsideUniverseIsStructural) {
  const auto space = cyclic(3);
  const auto& z3 = space.group(0);
  std::vector<ElementId> table(z3.table().begin(), z3.table().end());
  table[4] = ElementId(7);
  auto report = validate_group(with_table(z3, table));
  ASSERT_EQ(report.structural.size(), 1u);
  EXPECT_EQ(report.structural[0].kind, ViolationKind::entry_outside_universe);
}

TEST(ValidateGroup, EntryOutsideCarrierIsClosureViolation) {
  // Carrier {0,1} of a 3-element universe with 1*1 = 2.
  FiniteGroup g("x", {ElementId(0), ElementId(1)}, ElementId(0),
                {ElementId(0), ElementId(1), ElementId(1), ElementId(2)}, 3);
  auto report = validate_group(g);
  EXPECT_EQ(report.count(ViolationKind::closure), 1u);
}

TEST(FiniteGroup, RejectsMalformedShapes) {
  EXPECT_THROW(FiniteGroup("x", {ElementId(0)}, ElementId(0), {}, 1), StructuralError);
  EXPECT_THROW(FiniteGroup("x", {ElementId(0), ElementId(0)}, ElementId(0),
                           std::vector<ElementId>(4), 1),
               StructuralError);
  EXPECT_THROW(FiniteGroup("x", {}, ElementId(0), {}, 1), StructuralError);
}

TEST(Subgroups, MatchBruteForceOnCorpus) {
  for (const auto& [name, ms] : group_corpus()) {
    const auto& g = ms.group(0);
    auto r = testing::raw(g);
    std::vector<ElementSet> expected;
    for (auto mask : testing::brute_force_subgroups(r)) expected.push_back(testing::to_set(r, mask));
    std::sort(expected.begin(), expected.end(), canonical_less);
    EXPECT_EQ(subgroups(g), expected) << name;
  }
}

TEST(Subgroups, FrozenCounts) {
  // Frozen from the brute-force oracle above.
  EXPECT_EQ(subgroups(corpus("S3").group(0)).size(), 6u);
  EXPECT_EQ(subgroups(corpus("Z6").group(0)).size(), 4u);
  EXPECT_EQ(subgroups(corpus("trivial").group(0)).size(), 1u);

  std::vector<std::size_t> orders;
  for (const auto& h : subgroups(corpus("S3").group(0))) orders.push_back(h.size());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 2, 2, 3, 6}));
}

TEST(Subgroups, RefusesAboveBound) {
  EXPECT_THROW(subgroups(cyclic(25).group(0)), BoundExceeded);
  EXPECT_NO_THROW(subgroups(cyclic(25).group(0), 25));
  EXPECT_NO_THROW(subgroups(cyclic(24).group(0)));
}

TEST(Subgroups, IntersectionOfSubgroupsIsListed) {
  for (const auto& [name, ms] : group_corpus()) {
    auto subs = subgroups(ms.group(0));
    for (const auto& a : subs)
      for (const auto& b : subs)
        EXPECT_NE(std::find(subs.begin(), subs.end(), a & b), subs.end()) << name;
  }
}

TEST(Lagrange, EverySubgroupOrderDividesGroupOrder) {
  for (const auto& [name, ms] : group_corpus())
    for (const auto& h : subgroups(ms.group(0))) EXPECT_EQ(ms.group(0).order() % h.size(), 0u) << name;
}

TEST(IsSubgroup, Examples) {
  auto z6 = cyclic(6);
  const auto& g = z6.group(0);
  EXPECT_TRUE(is_subgroup(g, set_of(z6, {"0", "3"})));
  EXPECT_FALSE(is_subgroup(g, set_of(z6, {"0", "1"})));
  EXPECT_TRUE(is_subgroup(g, g.carrier_set()));
  EXPECT_FALSE(is_subgroup(g, z6.empty_set()));
}

TEST(IsSubgroup, ElementOutsideCarrierIsDomainError) {
  auto z3 = cyclic(3);
  FiniteGroup sub = z3.group(0).restricted_to(set_of(z3, {"0"}));
  EXPECT_THROW(is_subgroup(sub, set_of(z3, {"0", "1"})), DomainError);
}

TEST(IsNormalSubgroup, Examples) {
  const auto& s3 = corpus("S3");
  const auto& g = s3.group(0);
  EXPECT_TRUE(is_normal_subgroup(g, set_of(s3, {"e", "(123)", "(132)"})));
  EXPECT_FALSE(is_normal_subgroup(g, set_of(s3, {"e", "(12)"})));
  EXPECT_THROW(is_normal_subgroup(g, set_of(s3, {"e", "(12)", "(13)"})), PreconditionError);
}

TEST(IsNormalSubgroup, EverySubgroupOfAnAbelianGroupIsNormal) {
  for (const auto& [name, ms] : group_corpus()) {
    const auto& g = ms.group(0);
    if (!g.is_abelian()) continue;
    for (const auto& h : subgroups(g)) EXPECT_TRUE(is_normal_subgroup(g, h)) << name;
  }
}

TEST(QuotientGroup, Examples) {
  const auto& s3 = corpus("S3");
  const auto& g = s3.group(0);
  auto q = quotient_group(g, set_of(s3, {"e", "(123)", "(132)"}));
  EXPECT_EQ(q.order(), 2u);
  EXPECT_TRUE(validate_group(q).ok());
  EXPECT_EQ(quotient_group(g, set_of(s3, {"e"})).order(), 6u);
  EXPECT_EQ(quotient_group(g, g.carrier_set()).order(), 1u);
  EXPECT_THROW(quotient_group(g, set_of(s3, {"e", "(12)"})), PreconditionError);
}

TEST(QuotientGroup, ValidForEveryNormalSubgroupInCorpus) {
  for (const auto& [name, ms] : group_corpus()) {
    const auto& g = ms.group(0);
    for (const auto& n : subgroups(g)) {
      if (!is_normal_subgroup(g, n)) continue;
      auto q = quotient_group(g, n);
      EXPECT_TRUE(validate_group(q).ok()) << name;
      EXPECT_EQ(q.order(), g.order() / n.size()) << name;
    }
  }
}

TEST(CompositionSeries, SpotValues) {
  auto s3 = composition_series(corpus("S3").group(0));
  ASSERT_EQ(s3.size(), 1u);
  EXPECT_EQ(s3[0].length(), 2u);

  auto z12 = composition_series(corpus("Z12").group(0));
  EXPECT_EQ(z12.size(), 3u);
  for (const auto& c : z12) EXPECT_EQ(c.length(), 3u);

  auto trivial = composition_series(corpus("trivial").group(0));
  ASSERT_EQ(trivial.size(), 1u);
  EXPECT_EQ(trivial[0].length(), 0u);
}

TEST(CompositionSeries, AgreesWithBruteForceAndHasOneLength) {
  for (const auto& [name, ms] : group_corpus()) {
    const auto& g = ms.group(0);
    auto r = testing::raw(g);
    auto chains = composition_series(g);
    EXPECT_EQ(chains.size(), testing::brute_force_composition_count(r)) << name;
    std::set<std::size_t> lengths;
    for (const auto& c : chains) {
      lengths.insert(c.length());
      EXPECT_EQ(c.links.front(), g.carrier_set());
      EXPECT_EQ(c.links.back().size(), 1u);
      for (std::size_t k = 0; k + 1 < c.links.size(); ++k)
        EXPECT_TRUE(is_normal_subgroup(g.restricted_to(c.links[k]), c.links[k + 1])) << name;
    }
    EXPECT_EQ(lengths, testing::brute_force_composition_lengths(r)) << name;
    EXPECT_EQ(lengths.size(), 1u) << name;
  }
}

TEST(CompositionSeries, RefusesAboveBound) {
  EXPECT_THROW(composition_series(cyclic(30).group(0)), BoundExceeded);
}

}  // namespace
}  // namespace mgk
