#include <gtest/gtest.h>

#include "../support/fixtures.hpp"

using namespace fixtures;

TEST(Halfspaces, ChainOrderConvexity) {
  const FinitePoset c = chain(3);
  std::vector<ElementSet> sets;
  for (const Halfspace& h : halfspaces(space(c, ConvexityKind::Order))) sets.push_back(h.set);
  std::vector<ElementSet> expected{ElementSet{},         c.set_of({"0"}), c.set_of({"0", "1"}),
                                   c.set_of({"2"}),      c.set_of({"1", "2"}), c.carrier()};
  std::sort(expected.begin(), expected.end(), [](ElementSet a, ElementSet b) { return a.bits() < b.bits(); });
  EXPECT_EQ(sets, expected);
}

TEST(Halfspaces, UpSetOfAnAtomInB3) {
  // Frozen from the oracle: up(1) is a subsemilattice whose complement down(23) is one too.
  const FinitePoset p = b3();
  const ElementSet u = up_set(p, p.set_of({"1"}));
  bool found = false;
  for (const Halfspace& h : halfspaces(space(p, ConvexityKind::AlgebraicSemilattice))) found = found || h.set == u;
  EXPECT_TRUE(found);
}

TEST(Halfspaces, EmptyAndCarrierAlwaysPresent) {
  for (const FinitePoset& p : {b3(), vee(), antichain(3), n5()})
    for (ConvexityKind k : applicable_kinds(p)) {
      const auto hs = halfspaces(space(p, k));
      ASSERT_GE(hs.size(), 2u);
      EXPECT_EQ(hs.front().set, ElementSet{});
      EXPECT_EQ(hs.back().set, p.carrier());
    }
}

TEST(SeparationProfile, PaperStatements) {
  for (const FinitePoset& p : {b3(), vee(), chain(4), n5(), m3(), antichain(3), poset_random(6, 0.4, 2)})
    EXPECT_TRUE(separation_profile(space(p, ConvexityKind::Order)).s[3]) << to_text(p);
  for (const FinitePoset& p : {b3(), vee(), chain(4), n5(), m3(), divisors(12)}) {
    EXPECT_TRUE(separation_profile(space(p, ConvexityKind::AlgebraicSemilattice)).s[4]) << to_text(p);
    EXPECT_TRUE(separation_profile(space(p, ConvexityKind::OrderAlgebraicSemilattice)).s[4]) << to_text(p);
  }
}

TEST(SeparationProfile, IdealS1OnlyOnAntichains) {
  const SeparationProfile sp = separation_profile(space(vee(), ConvexityKind::Ideal));
  EXPECT_FALSE(sp.s[1]);
  ASSERT_TRUE(sp.witness[1].has_value());
  EXPECT_TRUE(separation_profile(space(chain(1), ConvexityKind::Ideal)).s[1]);
}

TEST(SeparationProfile, S0HoldsEverywhere) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const FinitePoset& p : all_semilattices(n))
      for (ConvexityKind k : applicable_kinds(p)) EXPECT_TRUE(separation_profile(space(p, k)).s[0]);
}

TEST(SeparateUpper, B3Example) {
  const FinitePoset p = b3();
  const JoinStructure s = make_join_structure(p);
  const ElementSet a = up_set(p, p.set_of({"1"}));
  const ElementSet phi = separate_upper(s, a, p.index_of("23"));
  EXPECT_EQ(phi, p.carrier() - p.set_of({"0", "2", "3", "23"}));
  EXPECT_TRUE(phi.contains(p.index_of("1")));
  EXPECT_FALSE(phi.contains(p.index_of("23")));
  EXPECT_TRUE(is_join_morphism_indicator(s, phi));
}

TEST(SeparateUpper, ChainExample) {
  const FinitePoset c = chain(4);
  const JoinStructure s = make_join_structure(c);
  EXPECT_EQ(separate_upper(s, c.set_of({"3"}), c.index_of("1")), c.set_of({"2", "3"}));
  // With x just below the top the indicator is exactly {top}.
  EXPECT_EQ(separate_upper(s, c.set_of({"3"}), c.index_of("2")), c.set_of({"3"}));
}

TEST(SeparateUpper, Errors) {
  const FinitePoset p = b3();
  const JoinStructure s = make_join_structure(p);
  EXPECT_THROW(separate_upper(s, p.carrier(), p.index_of("1")), Error);
  EXPECT_THROW(separate_upper(s, p.set_of({"1"}), p.index_of("2")), Error);
}

TEST(Project, B3Example) {
  const FinitePoset p = b3();
  const JoinStructure s = make_join_structure(p);
  const Projection pr = project(s, p.set_of({"0", "1"}), p.index_of("12"));
  EXPECT_EQ(pr.point, p.index_of("1"));
  ASSERT_TRUE(pr.halfspace.has_value());
  EXPECT_EQ(*pr.halfspace, p.carrier() - p.set_of({"2", "12"}));
  EXPECT_TRUE(pr.halfspace_verified);
}

TEST(Project, FixedPointsAndChains) {
  const FinitePoset c = chain(3);
  const JoinStructure s = make_join_structure(c);
  EXPECT_EQ(project(s, c.set_of({"0", "1"}), c.index_of("2")).point, c.index_of("1"));
  const Projection same = project(s, c.set_of({"0", "1"}), c.index_of("1"));
  EXPECT_EQ(same.point, c.index_of("1"));
  EXPECT_FALSE(same.halfspace.has_value());
  EXPECT_THROW(project(s, c.set_of({"1", "2"}), c.index_of("0")), Error);
}

TEST(Project, HalfspaceVerifiedOnDistributiveLattices) {
  for (const FinitePoset& p : {b3(), divisors(12), chain(4)}) {
    const JoinStructure s = make_join_structure(p);
    for (ElementSet k : enumerate_convex_sets(ConvexitySpace(s, ConvexityKind::AlgebraicSemilattice))) {
      if (k.empty()) continue;
      for (Element x = 0; x < p.size(); ++x) {
        if (!(k & p.down(x)).empty() && !k.contains(x)) {
          EXPECT_TRUE(project(s, k, x).halfspace_verified);
        }
      }
    }
  }
}
