#include <gtest/gtest.h>

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "hgsq/error.hpp"
#include "hgsq/formula.hpp"
#include "hgsq/oracles.hpp"

using namespace hgsq;

namespace {

const GroupSpec kS3 = make_group(2, 3, 2);
const GroupSpec kC6 = make_group(1, 6, 1);

std::vector<u64> squarefree_up_to(u64 n_max) {
  std::vector<u64> out;
  for (u64 n = 1; n <= n_max; ++n) {
    if (is_squarefree(n)) out.push_back(n);
  }
  return out;
}

u64 count_local(const PairContext& ctx, std::size_t h, u64 q, const TableConstants& k) {
  const LocalRowCheck check(ctx, h, q, k);
  const bool central = ctx.type_params.z % q == 0;
  const u64 cv = central ? 1 : q;
  u64 hits = 0;
  for (u64 t = 1; t < q; ++t)
    for (u64 a = 0; a < q; ++a)
      for (u64 c = 0; c < cv; ++c)
        for (u64 u = 0; u < q; ++u)
          for (u64 v = 0; v < cv; ++v)
            if (check({t, a, c, u, v})) ++hits;
  return hits;
}

}  // namespace

TEST(TableConstants, SymmetricGroup) {
  const TableConstants c = table_constants(kS3);
  EXPECT_EQ(c.lambda, 1U);
  EXPECT_EQ(c.mu, 2U);
}

TEST(TableConstants, AreUnitsSolvingTheirCongruences) {
  for (u64 n : squarefree_up_to(255)) {
    for (const GroupSpec& g : enumerate_groups(n)) {
      const DerivedParams p = derived_params(g);
      const TableConstants c = table_constants(g);
      if (p.g == 1) continue;
      ASSERT_EQ(gcd(c.lambda, p.g), 1U);
      ASSERT_EQ(gcd(c.mu, p.g), 1U);
      ASSERT_EQ(mul_mod(p.z % p.g, c.lambda, p.g), (g.k + p.g - 1) % p.g);
      ASSERT_EQ(mul_mod(g.k % p.g, c.mu, p.g), c.lambda);
    }
  }
}

TEST(QuintupleSemantic, SymmetricGroupExamples) {
  const PairContext ctx = build_context(kS3, kS3);
  EXPECT_TRUE(quintuple_semantic(ctx, 0, {2, 1, 1, 0, 0}));
  for (u64 t : {1ULL, 2ULL})
    for (u64 c = 0; c < 3; ++c)
      for (u64 u = 0; u < 3; ++u)
        for (u64 v = 0; v < 3; ++v) EXPECT_FALSE(quintuple_semantic(ctx, 0, {t, 0, c, u, v}));
}

TEST(QuintupleSemantic, BoundExceeded) {
  OracleConfig cfg;
  cfg.max_group_order = 5;
  try {
    quintuple_semantic(build_context(kS3, kS3), 0, {}, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BoundExceeded);
  }
}

TEST(QuintupleTable, AgreesOnAllSymmetricGroupCandidates) {
  const PairContext ctx = build_context(kS3, kS3);
  const PredicateComparison cmp = compare_predicates(ctx, 0);
  EXPECT_EQ(cmp.examined, 162U);
  EXPECT_EQ(cmp.table_count, 12U);
  EXPECT_EQ(cmp.semantic_count, 12U);
  EXPECT_FALSE(cmp.first_mismatch.has_value());
}

TEST(QuintupleTable, AbelianCommutatorRowLeavesUFree) {
  // Gamma = C6 (zeta delta = 6), G = S3: q = 3 lies in the U row
  const PairContext ctx = build_context(kC6, kS3);
  ASSERT_EQ(prime_row(ctx, 0, 3), PrimeRow::AbelianCommutator);
  const TableConstants k = table_constants(kS3);
  for (u64 u = 0; u < 3; ++u) {
    EXPECT_TRUE(local_row_admits(ctx, 0, 3, {1, 0, 0, u, 1}, k));
    EXPECT_TRUE(local_row_admits(ctx, 0, 3, {1, 0, 0, u, 2}, k));
    EXPECT_FALSE(local_row_admits(ctx, 0, 3, {1, 0, 0, u, 0}, k));
  }
}

TEST(QuintupleTable, PerPrimeCountsMatchRowSizes) {
  std::set<std::pair<PrimeRow, u64>> seen;
  for (u64 n : squarefree_up_to(2000)) {
    const auto classes = enumerate_groups(n);
    for (const GroupSpec& a : classes) {
      for (const GroupSpec& b : classes) {
        const PairContext ctx = build_context(a, b);
        if (!ctx.compatible) continue;
        const TableConstants k = table_constants(b);
        for (std::size_t h = 0; h < ctx.orbit_count; ++h) {
          for (u64 q : b.e_factors.primes) {
            if (q > 43) continue;
            const PrimeRow row = prime_row(ctx, h, q);
            if (!seen.insert({row, q}).second) continue;
            ASSERT_EQ(count_local(ctx, h, q, k), prime_row_count(row, q))
                << a.triple() << " / " << b.triple() << " q=" << q;
          }
        }
      }
    }
  }
  std::set<PrimeRow> rows;
  for (const auto& [row, q] : seen) rows.insert(row);
  EXPECT_EQ(rows.size(), 7U);
}

TEST(PrimeRowCount, Values) {
  EXPECT_EQ(prime_row_count(PrimeRow::CommutatorCentral, 5), 20U);
  EXPECT_EQ(prime_row_count(PrimeRow::AbelianCentral, 5), 4U);
  EXPECT_EQ(prime_row_count(PrimeRow::Unmatched, 5), 200U);
  EXPECT_EQ(prime_row_count(PrimeRow::MatchedPlus, 5), 120U);
  EXPECT_EQ(prime_row_count(PrimeRow::MatchedMinus, 5), 120U);
  EXPECT_EQ(prime_row_count(PrimeRow::Involution, 5), 40U);
  EXPECT_EQ(prime_row_count(PrimeRow::AbelianCommutator, 5), 40U);
}

TEST(EnumerateNh, SymmetricGroupBothPredicates) {
  const PairContext ctx = build_context(kS3, kS3);
  for (auto pred : {QuintuplePredicate::Semantic, QuintuplePredicate::Table}) {
    const CensusResult r = enumerate_Nh(ctx, 0, pred);
    EXPECT_EQ(r.count, 12);
    EXPECT_EQ(r.candidates_examined, 162U);
  }
}

TEST(EnumerateNh, CyclicGaloisSymmetricType) {
  const PairContext ctx = build_context(kC6, kS3);
  EXPECT_EQ(count_Nh(ctx, 0), 12);
  EXPECT_EQ(enumerate_Nh(ctx, 0, QuintuplePredicate::Semantic).count, 12);
  EXPECT_EQ(enumerate_Nh(ctx, 0, QuintuplePredicate::Table).count, 12);
}

TEST(EnumerateNh, Dihedral30) {
  const GroupSpec d30 = dihedral_group(15);
  const PairContext ctx = build_context(d30, d30);
  const CensusResult r = enumerate_Nh(ctx, 0, QuintuplePredicate::Semantic);
  EXPECT_EQ(r.candidates_examined, 8U * 15 * 15 * 15 * 15);
  EXPECT_EQ(r.count, count_Nh(ctx, 0));
  EXPECT_EQ(enumerate_Nh(ctx, 0, QuintuplePredicate::Table).count, r.count);
}

TEST(EnumerateNh, ThreadCountDoesNotMatter) {
  const PairContext ctx = build_context(make_group(2, 21, 20), make_group(2, 21, 20));
  OracleConfig one, four;
  four.threads = 4;
  const PredicateComparison a = compare_predicates(ctx, 0, one);
  const PredicateComparison b = compare_predicates(ctx, 0, four);
  EXPECT_EQ(a.table_count, b.table_count);
  EXPECT_EQ(a.semantic_count, b.semantic_count);
  EXPECT_EQ(a.examined, b.examined);
}

TEST(EnumerateNh, CorruptedLambdaIsCaught) {
  const PairContext ctx = build_context(kS3, kS3);
  TableConstants bad = table_constants(kS3);
  bad.lambda = (bad.lambda + 1) % 3;
  const PredicateComparison cmp = compare_predicates(ctx, 0, {}, bad);
  ASSERT_TRUE(cmp.first_mismatch.has_value());
  EXPECT_FALSE(quintuple_table(ctx, 0, *cmp.first_mismatch, bad) ==
               quintuple_semantic(ctx, 0, *cmp.first_mismatch));
}

TEST(EnumerateNh, BoundExceeded) {
  OracleConfig cfg;
  cfg.candidate_bound = 100;
  try {
    enumerate_Nh(build_context(kS3, kS3), 0, QuintuplePredicate::Table, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BoundExceeded);
  }
}

TEST(SubgroupCensus, Examples) {
  const CensusResult r = regular_subgroup_census(kS3, kS3);
  EXPECT_EQ(r.count, 2);
  EXPECT_EQ(r.method, CensusMethod::SubgroupCensus);
  EXPECT_EQ(regular_subgroup_census(kS3, kC6).count, 1);
  EXPECT_EQ(regular_subgroup_census(kC6, kS3).count, 6);
  EXPECT_EQ(regular_subgroup_census(kC6, kC6).count, 1);
  // gamma = 3 does not divide e = 14
  EXPECT_EQ(regular_subgroup_census(make_group(2, 21, 8), make_group(3, 14, 9)).count, 0);
}

TEST(SubgroupCensus, BoundExceeded) {
  OracleConfig cfg;
  cfg.hol_order_bound = 20;
  try {
    regular_subgroup_census(kS3, kS3, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BoundExceeded);
  }
}

TEST(SubgroupCensus, SubgroupsAreRegular) {
  const SubgroupCensus full = regular_subgroup_census_full(kS3, kS3);
  const Holomorph hol(kS3);
  ASSERT_EQ(full.subgroups.size(), 2U);
  for (const auto& sub : full.subgroups) {
    ASSERT_EQ(sub.size(), 6U);
    std::set<u64> images;
    for (const HolElement& x : sub) images.insert(hol.group().index(hol.act(x, {0, 0})));
    EXPECT_EQ(images.size(), 6U);
  }
}

TEST(SubgroupCensus, SpecialGeneratorPairMultiplicity) {
  for (u64 n : squarefree_up_to(42)) {
    const auto classes = enumerate_groups(n);
    for (const GroupSpec& a : classes) {
      for (const GroupSpec& b : classes) {
        const PairContext ctx = build_context(a, b);
        if (!ctx.compatible) continue;
        const SubgroupCensus census = regular_subgroup_census_full(a, b);
        const Holomorph hol(b);
        const u64 expect = ctx.gamma() * euler_phi(b.e_factors) * ctx.orbit_count / euler_phi(a.d_factors);
        for (const auto& sub : census.subgroups) {
          ASSERT_EQ(special_generator_pairs(ctx, hol, sub), expect) << a.triple() << " / " << b.triple();
        }
      }
    }
  }
}

TEST(AutCensus, Examples) {
  EXPECT_EQ(aut_census(kS3).count, 6);
  EXPECT_EQ(aut_census(kC6).count, 2);
  EXPECT_EQ(aut_census(make_group(6, 7, 3)).count, 42);
  EXPECT_EQ(aut_census(kS3).method, CensusMethod::AutCensus);
}

TEST(AutCensus, MatchesOrderFormula) {
  for (u64 n : squarefree_up_to(110)) {
    for (const GroupSpec& g : enumerate_groups(n)) {
      ASSERT_EQ(aut_census(g).count, aut_order(g)) << g.triple();
    }
  }
}

TEST(AutCensus, BoundExceeded) {
  EXPECT_THROW(aut_census(make_group(1, 257 * 2, 1)), Error);
}

TEST(IsoCensus, Examples) {
  EXPECT_EQ(iso_class_census(6).count, 2);
  EXPECT_EQ(iso_class_census(42).count, 6);
  EXPECT_EQ(iso_class_census(105).count, 2);
  EXPECT_EQ(iso_class_census(1).count, 1);
}

TEST(IsoCensus, MatchesEnumeration) {
  for (u64 n : squarefree_up_to(110)) {
    ASSERT_EQ(iso_class_census(n).count, enumerate_groups(n).size()) << n;
  }
}

TEST(IsoCensus, Errors) {
  try {
    iso_class_census(12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSquarefree);
  }
  try {
    iso_class_census(258);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BoundExceeded);
  }
}
