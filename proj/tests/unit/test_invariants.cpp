#include <gtest/gtest.h>

#include "../support/fixtures.hpp"

using namespace fixtures;

TEST(Breadth, Examples) {
  EXPECT_EQ(breadth(make_join_structure(chain(4))), 1u);
  EXPECT_EQ(breadth(make_join_structure(b3())), 3u);
  EXPECT_EQ(breadth(make_join_structure(product(chain(2), chain(2)))), 2u);
  EXPECT_EQ(breadth(make_join_structure(m3())), 2u);
}

TEST(Breadth, LevelSearchMatchesDefinition) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const FinitePoset& p : all_semilattices(n)) {
      const JoinStructure s = make_join_structure(p);
      EXPECT_EQ(breadth(s), breadth_by_definition(s)) << to_text(p);
    }
}

TEST(Breadth, IrredundantSets) {
  const FinitePoset p = b3();
  const JoinStructure s = make_join_structure(p);
  EXPECT_TRUE(is_join_irredundant(s, p.set_of({"1", "2", "3"})));
  EXPECT_FALSE(is_join_irredundant(s, p.set_of({"1", "2", "12"})));
  EXPECT_TRUE(is_join_irredundant(s, p.set_of({"12"})));
}

TEST(CliqueNumber, Examples) {
  EXPECT_EQ(clique_number(space(b3(), ConvexityKind::AlgebraicSemilattice)), 4u);
  // Frozen from the oracle: every subset of an antichain is an up-set and free.
  for (std::size_t k = 2; k <= 4; ++k) EXPECT_EQ(clique_number(space(antichain(k), ConvexityKind::Upper)), k);
}

TEST(Caratheodory, Examples) {
  EXPECT_EQ(caratheodory(space(b3(), ConvexityKind::AlgebraicSemilattice)), 3u);
  EXPECT_EQ(caratheodory(space(chain(4), ConvexityKind::AlgebraicSemilattice)), 1u);
  EXPECT_EQ(caratheodory(space(boolean(2), ConvexityKind::AlgebraicSemilattice)), 2u);
}

TEST(Helly, Examples) {
  EXPECT_EQ(helly(space(b3(), ConvexityKind::AlgebraicSemilattice)), 4u);
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(helly(space(chain(k), ConvexityKind::AlgebraicSemilattice)), k);
}

TEST(Helly, IndependenceMatchesFamilyDefinition) {
  for (const FinitePoset& p : {vee(), chain(3), n5(), m3(), antichain(3), boolean(2)})
    for (ConvexityKind k : applicable_kinds(p)) {
      const ConvexitySpace cs = space(p, k);
      EXPECT_EQ(helly(cs), helly_by_families(cs, p.size() + 1)) << to_string(k) << "\n" << to_text(p);
    }
  const ConvexitySpace alg = space(b3(), ConvexityKind::AlgebraicSemilattice);
  EXPECT_EQ(helly(alg), helly_by_families(alg, 5));
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(make_join_structure(b3())).rank, 3u);
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(rank(make_join_structure(chain(k))).rank, k - 1);
  EXPECT_THROW(rank(make_join_structure(vee())), Error);
}

TEST(InvariantProfile, SemilatticeIdentitiesOnExhaustiveCatalog) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const FinitePoset& p : all_semilattices(n)) {
      const InvariantProfile r = invariant_profile(space(p, ConvexityKind::AlgebraicSemilattice));
      ASSERT_TRUE(r.depth.has_value());
      EXPECT_EQ(r.helly, r.depth);
      EXPECT_EQ(r.clique_number, r.depth);
      EXPECT_EQ(r.caratheodory, r.breadth);
    }
}

TEST(InvariantProfile, PosetKindsHaveNoBreadth) {
  const InvariantProfile r = invariant_profile(space(antichain(3), ConvexityKind::Order));
  EXPECT_EQ(r.breadth, Measure::not_applicable());
  EXPECT_EQ(r.rank, Measure::not_applicable());
  EXPECT_EQ(r.depth, Measure::of(1));
}

TEST(InvariantProfile, CapsDegradeFieldsIndependently) {
  Caps caps;
  caps.subset_bits = 3;
  const InvariantProfile r = invariant_profile(space(b3(), ConvexityKind::AlgebraicSemilattice), caps);
  EXPECT_EQ(r.breadth, Measure::cap_exceeded());
  EXPECT_EQ(r.depth, Measure::of(4));
}
