#include "mdl/composer.hpp"

#include <algorithm>

namespace mdl {

namespace {

constexpr std::array<std::string_view, 6> kAssetTokens = {
    "data", "labelled-data", "representation", "untrained-model", "trained-model", "output",
};

constexpr RightSet kDerivedModelRights = {Right::Research, Right::Publish, Right::InternalUse,
                                          Right::OutputCommercialization};

}  // namespace

std::string_view token(AssetKind a) { return kAssetTokens[static_cast<std::size_t>(a)]; }

std::optional<AssetKind> asset_from_token(std::string_view tok) {
  for (AssetKind a : kAllAssetKinds)
    if (token(a) == tok) return a;
  return std::nullopt;
}

std::string_view token(ConflictKind k) {
  switch (k) {
    case ConflictKind::AttributionVsConfidential: return "attribution-vs-confidential";
    case ConflictKind::DisjointDesignatedParties: return "disjoint-designated-parties";
  }
  return "";
}

CombinationReport combine(std::span<const GrantSet> sources, std::span<const std::string> ids) {
  if (sources.empty()) throw UsageError("combine requires at least one source");
  if (!ids.empty() && ids.size() != sources.size())
    throw UsageError("combine: " + std::to_string(ids.size()) + " ids for " +
                     std::to_string(sources.size()) + " sources");

  CombinationReport report;
  report.effective = closure(sources.front());
  for (const auto& s : sources.subspan(1)) report.effective = meet(report.effective, s);

  bool attribution = false;
  bool confidential = false;
  std::size_t party_lists = 0;
  for (const auto& s : sources) {
    attribution |= s.has(RestrictionKind::AttributionRequired);
    confidential |= s.has(RestrictionKind::Confidential);
    if (s.has(RestrictionKind::DesignatedParties)) ++party_lists;
  }
  if (attribution && confidential)
    report.conflicts.push_back(
        {ConflictKind::AttributionVsConfidential,
         "sources require both attribution and confidentiality; confidentiality retained"});
  if (const Restriction* parties = report.effective.find(RestrictionKind::DesignatedParties);
      parties && party_lists > 1 && parties->payload.empty())
    report.conflicts.push_back(
        {ConflictKind::DisjointDesignatedParties,
         "designated parties of the sources are disjoint; no party may exercise the combined grant"});

  for (std::size_t i = 0; i < sources.size(); ++i)
    report.provenance.push_back(ids.empty() ? "source-" + std::to_string(i) : ids[i]);
  return report;
}

bool is_licensor_escape(const GrantSet& parent, AssetKind asset) {
  return asset == AssetKind::TrainedModel &&
         closure(parent.rights()).contains(Right::ModelCommercialization);
}

Derivation derived_grant(const GrantSet& parent, AssetKind asset) {
  const GrantSet closed = closure(parent);
  const CapabilitySet caps = denote(parent);

  auto same_terms = [&](Capability producing, std::string_view what) -> Derivation {
    if (!caps.contains(producing))
      return NotDerivable{"grant does not permit '" + std::string(token(producing)) + "', so no " +
                          std::string(what) + " may be produced"};
    return closed;
  };

  switch (asset) {
    case AssetKind::Data:
      return same_terms(Capability::DistributeData, "distributed copy of the Data");
    case AssetKind::LabelledData:
      return same_terms(Capability::CreateLabels, "Labelled Data");
    case AssetKind::Representation:
      return same_terms(Capability::CreateRepresentation, "Representation");
    case AssetKind::UntrainedModel:
      return NotDerivable{"an Untrained Model embodies no insights from the Data"};
    case AssetKind::Output:
      return NotDerivable{
          "Output carries no license of its own; whether it may be used or provided is a "
          "capability of the grant"};
    case AssetKind::TrainedModel:
      break;
  }

  if (!caps.contains(Capability::TrainModel))
    return NotDerivable{"grant does not permit 'train-model'"};
  if (!caps.contains(Capability::RetainTrainedModel))
    return NotDerivable{"trained weights must be deleted after evaluation"};

  if (closed.has(Right::ModelCommercialization)) {
    std::vector<Restriction> carried;
    if (const Restriction* ex = parent.find(RestrictionKind::EthicalExclusion)) carried.push_back(*ex);
    return GrantSet(RightSet::from_mask(kModelRightsMask), std::move(carried));
  }
  return GrantSet(closed.rights() & kDerivedModelRights, parent.restrictions());
}

}  // namespace mdl
