// Property tests: laws checked on seeded random instances. Every case is
// reproducible from the printed seed.

#include <gtest/gtest.h>

#include <random>

#include "../support/fixtures.hpp"

using namespace fixtures;

namespace {

constexpr std::uint32_t kMasterSeed = 20240611;

/// A random structure of one of the generator families, with its spec for messages.
struct Drawn {
  std::string spec;
  FinitePoset poset;
};

Drawn draw_structure(std::mt19937& rng, std::size_t max_n, bool semilattice_only = false) {
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::uniform_int_distribution<int> family(0, semilattice_only ? 1 : 3);
  const std::size_t n = size(rng);
  const std::uint64_t seed = rng();
  std::string spec;
  switch (family(rng)) {
    case 0: spec = "semilattice:" + std::to_string(n) + ":" + std::to_string(seed); break;
    case 1: spec = "distributive:" + std::to_string(n) + ":" + std::to_string(seed); break;
    case 2: spec = "tree:" + std::to_string(n) + ":" + std::to_string(seed); break;
    default: spec = "poset:" + std::to_string(n) + ":0.4:" + std::to_string(seed); break;
  }
  return {spec, generate(spec)};
}

ElementSet random_subset(std::mt19937& rng, ElementSet universe) {
  ElementSet out;
  std::bernoulli_distribution coin(0.5);
  for (Element x : universe)
    if (coin(rng)) out.insert(x);
  return out;
}

}  // namespace

TEST(Property, HullIsAClosureOperator) {
  std::mt19937 rng(kMasterSeed);
  for (int i = 0; i < 150; ++i) {
    const Drawn d = draw_structure(rng, 8);
    for (ConvexityKind k : applicable_kinds(d.poset)) {
      const ConvexitySpace cs = space(d.poset, k);
      for (int j = 0; j < 10; ++j) {
        const ElementSet a = random_subset(rng, d.poset.carrier());
        const ElementSet b = a | random_subset(rng, d.poset.carrier());
        const ElementSet ha = hull(cs, a);
        EXPECT_TRUE(a.is_subset_of(ha)) << d.spec;
        EXPECT_EQ(hull(cs, ha), ha) << d.spec;
        EXPECT_TRUE(ha.is_subset_of(hull(cs, b))) << d.spec;
        EXPECT_TRUE(is_convex(cs, ha)) << d.spec;
      }
    }
  }
}

TEST(Property, HullEqualsIntersectionOfConvexSupersets) {
  std::mt19937 rng(kMasterSeed + 1);
  for (int i = 0; i < 60; ++i) {
    const Drawn d = draw_structure(rng, 7);
    for (ConvexityKind k : applicable_kinds(d.poset)) {
      const ConvexitySpace cs = space(d.poset, k);
      const auto family = enumerate_convex_sets(cs);
      EXPECT_TRUE(verify_convexity_axioms(family, d.poset.size()).holds) << d.spec;
      for (int j = 0; j < 10; ++j) {
        const ElementSet a = random_subset(rng, d.poset.carrier());
        EXPECT_EQ(hull(cs, a), hull_by_intersection(family, a, d.poset.size())) << d.spec << " " << to_string(k);
      }
    }
  }
}

TEST(Property, ExtremePointCharacterizations) {
  std::mt19937 rng(kMasterSeed + 2);
  for (int i = 0; i < 80; ++i) {
    const Drawn d = draw_structure(rng, 7);
    for (ConvexityKind k : applicable_kinds(d.poset)) {
      const ConvexitySpace cs = space(d.poset, k);
      for (ElementSet K : enumerate_convex_sets(cs))
        ASSERT_EQ(extreme_points(cs, K), characterized_extreme_points(cs, K))
            << d.spec << " " << to_string(k) << " " << format_set(d.poset, K);
    }
  }
}

TEST(Property, KreinMilmanAndMilmanOnRandomSemilattices) {
  std::mt19937 rng(kMasterSeed + 3);
  for (int i = 0; i < 60; ++i) {
    const Drawn d = draw_structure(rng, 7, true);
    const JoinStructure s = make_join_structure(d.poset);
    const ConvexitySpace cs(s, ConvexityKind::AlgebraicSemilattice);
    for (ElementSet K : enumerate_convex_sets(cs)) EXPECT_TRUE(check_km_semilattice(s, K).holds) << d.spec;
    for (int j = 0; j < 40; ++j) {
      const ElementSet a = random_subset(rng, d.poset.carrier());
      EXPECT_TRUE(check_milman_semilattice(s, hull(cs, a), a).holds) << d.spec;
    }
  }
}

TEST(Property, KreinMilmanPosetKinds) {
  std::mt19937 rng(kMasterSeed + 4);
  for (int i = 0; i < 60; ++i) {
    const Drawn d = draw_structure(rng, 6);
    for (ConvexityKind k : {ConvexityKind::Upper, ConvexityKind::Lower, ConvexityKind::Order}) {
      const ConvexitySpace cs(d.poset, k);
      for (int j = 0; j < 20; ++j) {
        const ElementSet a = random_subset(rng, d.poset.carrier());
        EXPECT_TRUE(check_km_poset(d.poset, k, a).holds) << d.spec;
        EXPECT_TRUE(check_milman_poset(d.poset, k, hull(cs, a), a).holds) << d.spec;
      }
    }
  }
}

TEST(Property, LassakMatchesExtremeSubsetsOnConvexSets) {
  std::mt19937 rng(kMasterSeed + 5);
  for (int i = 0; i < 60; ++i) {
    const Drawn d = draw_structure(rng, 6, true);
    const JoinStructure s = make_join_structure(d.poset);
    const ConvexitySpace cs(s, ConvexityKind::AlgebraicSemilattice);
    const auto family = enumerate_convex_sets(cs);
    std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
    for (int j = 0; j < 20; ++j) {
      const ElementSet K = family[pick(rng)];
      const ElementSet E = random_subset(rng, K);
      EXPECT_EQ(is_lassak_extreme(cs, K, E), is_extreme_subset(s, K, E)) << d.spec;
    }
  }
}

TEST(Property, JamisonEdelmanConditionsAgree) {
  std::mt19937 rng(kMasterSeed + 6);
  for (int i = 0; i < 80; ++i) {
    const Drawn d = draw_structure(rng, 6);
    for (ConvexityKind k : applicable_kinds(d.poset)) {
      const ConvexGeometryVerdict v = convex_geometry(space(d.poset, k));
      EXPECT_TRUE(v.conditions_agree()) << d.spec << " " << to_string(k);
    }
  }
}

TEST(Property, SemilatticeInvariantIdentities) {
  std::mt19937 rng(kMasterSeed + 7);
  for (int i = 0; i < 60; ++i) {
    const Drawn d = draw_structure(rng, 7, true);
    const InvariantProfile r = invariant_profile(space(d.poset, ConvexityKind::AlgebraicSemilattice));
    EXPECT_EQ(r.helly, r.depth) << d.spec;
    EXPECT_EQ(r.clique_number, r.depth) << d.spec;
    EXPECT_EQ(r.caratheodory, r.breadth) << d.spec;
  }
}

TEST(Property, DistributiveLatticeLaws) {
  std::mt19937 rng(kMasterSeed + 8);
  for (int i = 0; i < 60; ++i) {
    std::uniform_int_distribution<std::size_t> size(1, 8);
    const std::size_t n = size(rng);
    const std::uint64_t seed = rng();
    const JoinStructure s = make_join_structure(distributive_random(n, seed));
    const ConvexitySpace cs(s, ConvexityKind::AlgebraicSemilattice);
    for (ElementSet K : enumerate_convex_sets(cs)) {
      EXPECT_TRUE(check_minkowski(s, K).holds) << n << ":" << seed;
      if (!K.empty() && is_distributive_semilattice(substructure(s, K))) {
        EXPECT_TRUE(check_depth_count(s, K).holds) << n << ":" << seed;
      }
    }
    EXPECT_TRUE(evaluate_mwe(s).agree());
  }
}

TEST(Property, FreeImpliesDistributive) {
  std::mt19937 rng(kMasterSeed + 9);
  for (int i = 0; i < 100; ++i) {
    const Drawn d = draw_structure(rng, 8, true);
    const JoinStructure s = make_join_structure(d.poset);
    if (!s.bottom()) continue;
    const FreeModule m = free_module(s);
    if (m.is_free) {
      EXPECT_TRUE(classify(s).is_distributive_semilattice) << d.spec;
      EXPECT_TRUE(m.size_matches) << d.spec;
    }
    EXPECT_TRUE(check_martinez_equivalence(s).holds) << d.spec;
  }
}

TEST(Property, SeparationFacts) {
  std::mt19937 rng(kMasterSeed + 10);
  for (int i = 0; i < 40; ++i) {
    const Drawn d = draw_structure(rng, 6);
    const SeparationProfile order = separation_profile(space(d.poset, ConvexityKind::Order));
    EXPECT_TRUE(order.s[0] && order.s[3]) << d.spec;
    if (std::holds_alternative<JoinStructure>(try_join_structure(d.poset))) {
      EXPECT_TRUE(separation_profile(space(d.poset, ConvexityKind::AlgebraicSemilattice)).s[4]) << d.spec;
      EXPECT_TRUE(separation_profile(space(d.poset, ConvexityKind::OrderAlgebraicSemilattice)).s[4]) << d.spec;
    }
  }
}

TEST(Property, TextAndReportRoundTrips) {
  std::mt19937 rng(kMasterSeed + 11);
  for (int i = 0; i < 25; ++i) {
    const Drawn d = draw_structure(rng, 6);
    const FinitePoset q = parse_poset_text(to_text(d.poset));
    EXPECT_EQ(to_text(q), to_text(d.poset)) << d.spec;
    const AnalysisReport r = analyze(d.poset, d.spec, {});
    EXPECT_EQ(nlohmann::json::parse(nlohmann::json(r).dump()).get<AnalysisReport>(), r) << d.spec;
    EXPECT_FALSE(r.any_failure()) << d.spec;
  }
}
