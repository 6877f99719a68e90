#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mdl/composer.hpp"
#include "mdl/expr.hpp"
#include "support/oracle.hpp"

using namespace mdl;

namespace {

GrantSet g(std::string_view expr) { return parse_grant(expr); }

CombinationReport combine_all(const std::vector<GrantSet>& v) { return combine(v); }

}  // namespace

TEST(Combine, SingleSourceIsClosure) {
  GrantSet src = g("MDL-1.0; model: publish; restrictions: attribution");
  auto r = combine_all({src});
  EXPECT_EQ(r.effective, closure(src));
  EXPECT_TRUE(r.conflicts.empty());
  EXPECT_EQ(r.provenance, std::vector<std::string>{"source-0"});
}

TEST(Combine, PublishWithOutputCommercialization) {
  auto r = combine_all({g("MDL-1.0; model: publish"), g("MDL-1.0; model: output-commercial")});
  std::uint32_t expected = oracle::meet(1u << oracle::kPublish, 1u << oracle::kOutputCom);
  EXPECT_EQ(r.effective.rights().mask(), expected);
  EXPECT_EQ(serialize(r.effective), "MDL-1.0; data: access; model: benchmark, benchmark-trained, research");
  EXPECT_TRUE(r.conflicts.empty());
}

TEST(Combine, AttributionAgainstConfidential) {
  auto r = combine_all({g("MDL-1.0; restrictions: attribution"), g("MDL-1.0; restrictions: confidential")});
  EXPECT_TRUE(r.effective.has(RestrictionKind::Confidential));
  EXPECT_FALSE(r.effective.has(RestrictionKind::AttributionRequired));
  ASSERT_EQ(r.conflicts.size(), 1u);
  EXPECT_EQ(r.conflicts[0].kind, ConflictKind::AttributionVsConfidential);
}

TEST(Combine, DisjointParties) {
  auto r = combine_all({g("MDL-1.0; data: access; restrictions: parties(a|b)"),
                        g("MDL-1.0; data: access; restrictions: parties(c)")});
  const Restriction* p = r.effective.find(RestrictionKind::DesignatedParties);
  ASSERT_NE(p, nullptr);
  EXPECT_TRUE(p->payload.empty());
  ASSERT_EQ(r.conflicts.size(), 1u);
  EXPECT_EQ(r.conflicts[0].kind, ConflictKind::DisjointDesignatedParties);

  auto overlap = combine_all({g("MDL-1.0; restrictions: parties(a|b)"), g("MDL-1.0; restrictions: parties(b)")});
  EXPECT_TRUE(overlap.conflicts.empty());
  EXPECT_EQ(overlap.effective.find(RestrictionKind::DesignatedParties)->payload, std::vector<std::string>{"b"});
}

TEST(Combine, EmptySourceListIsUsageError) {
  EXPECT_THROW(combine(std::span<const GrantSet>{}), UsageError);
}

TEST(Combine, CustomIds) {
  std::vector<GrantSet> v = {g("MDL-1.0"), g("MDL-1.0")};
  std::vector<std::string> ids = {"cifar", "stl"};
  EXPECT_EQ(combine(v, ids).provenance, ids);
  std::vector<std::string> short_ids = {"x"};
  EXPECT_THROW(combine(v, short_ids), UsageError);
}

TEST(Combine, PermutationInvariant) {
  oracle::ExpressionGenerator gen(99);
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<GrantSet> sources;
    for (std::size_t k = 0; k < n; ++k) sources.push_back(parse_grant(gen.next()));
    auto base = combine_all(sources);
    std::shuffle(sources.begin(), sources.end(), rng);
    auto shuffled = combine_all(sources);
    ASSERT_EQ(shuffled.effective, base.effective);
    auto kinds = [](const CombinationReport& r) {
      std::vector<ConflictKind> k;
      for (const auto& c : r.conflicts) k.push_back(c.kind);
      return k;
    };
    ASSERT_EQ(kinds(shuffled), kinds(base));
  }
}

TEST(Combine, NeverExceedsAnySourceOnSingleFamilyPairs) {
  // Every data-only subset and every model-only subset, all ordered pairs.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t d = 0; d < 16; ++d) masks.push_back(d);
  for (std::uint32_t m = 1; m < 128; ++m) masks.push_back(m << 4);
  for (std::uint32_t a : masks)
    for (std::uint32_t b : masks) {
      std::vector<GrantSet> v = {GrantSet(RightSet::from_mask(a)), GrantSet(RightSet::from_mask(b))};
      RightSet eff = combine_all(v).effective.rights();
      ASSERT_TRUE(eff.is_subset_of(closure(RightSet::from_mask(a))));
      ASSERT_TRUE(eff.is_subset_of(closure(RightSet::from_mask(b))));
      ASSERT_EQ(eff.mask(), oracle::meet(a, b));
    }
}

TEST(Derive, Examples) {
  GrantSet research = g("MDL-1.0; model: research; restrictions: parties(mila), attribution");
  auto d = derived_grant(research, AssetKind::TrainedModel);
  ASSERT_TRUE(std::holds_alternative<GrantSet>(d));
  EXPECT_EQ(std::get<GrantSet>(d).rights(), RightSet{Right::Research});
  EXPECT_EQ(std::get<GrantSet>(d).restrictions(), research.restrictions());

  EXPECT_TRUE(std::holds_alternative<NotDerivable>(derived_grant(g("MDL-1.0; data: access"), AssetKind::TrainedModel)));

  auto pub = derived_grant(g("MDL-1.0; model: publish"), AssetKind::TrainedModel);
  ASSERT_TRUE(std::holds_alternative<GrantSet>(pub));
  EXPECT_EQ(std::get<GrantSet>(pub).rights(), (RightSet{Right::Research, Right::Publish}));
}

TEST(Derive, BenchmarkWeightsAreNotRetained) {
  auto d = derived_grant(g("MDL-1.0; model: benchmark-trained"), AssetKind::TrainedModel);
  EXPECT_TRUE(std::holds_alternative<NotDerivable>(d));
}

TEST(Derive, DataAssetsKeepParentTerms) {
  GrantSet parent = g("MDL-1.0; data: label, represent; restrictions: no-sublicense");
  for (AssetKind a : {AssetKind::LabelledData, AssetKind::Representation}) {
    auto d = derived_grant(parent, a);
    ASSERT_TRUE(std::holds_alternative<GrantSet>(d)) << token(a);
    EXPECT_EQ(std::get<GrantSet>(d), closure(parent));
  }
  EXPECT_TRUE(std::holds_alternative<NotDerivable>(derived_grant(g("MDL-1.0; data: access"), AssetKind::LabelledData)));
}

TEST(Derive, OutputAndUntrainedModelAreNotDerivable) {
  GrantSet full = GrantSet::full();
  EXPECT_TRUE(std::holds_alternative<NotDerivable>(derived_grant(full, AssetKind::Output)));
  EXPECT_TRUE(std::holds_alternative<NotDerivable>(derived_grant(full, AssetKind::UntrainedModel)));
}

TEST(Derive, ModelCommercializationEscapeCarriesOnlyExclusions) {
  GrantSet parent = g("MDL-1.0; model: model-commercial; restrictions: parties(acme), attribution, exclude(military)");
  EXPECT_TRUE(is_licensor_escape(parent, AssetKind::TrainedModel));
  auto d = derived_grant(parent, AssetKind::TrainedModel);
  ASSERT_TRUE(std::holds_alternative<GrantSet>(d));
  const GrantSet& out = std::get<GrantSet>(d);
  EXPECT_EQ(out.rights(), RightSet::from_mask(kModelRightsMask));
  ASSERT_EQ(out.restrictions().size(), 1u);
  EXPECT_EQ(out.restrictions()[0], Restriction::ethical_exclusion({"military"}));
}

TEST(Derive, BoundedByParentExhaustively) {
  for (std::uint32_t m = 0; m < (1u << kRightCount); ++m) {
    GrantSet parent(RightSet::from_mask(m));
    for (AssetKind a : kAllAssetKinds) {
      auto d = derived_grant(parent, a);
      if (!std::holds_alternative<GrantSet>(d) || is_licensor_escape(parent, a)) continue;
      ASSERT_TRUE(denote(std::get<GrantSet>(d)).is_subset_of(denote(parent))) << m << " " << token(a);
    }
  }
}
