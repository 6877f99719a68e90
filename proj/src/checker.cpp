#include "mdl/checker.hpp"

#include <algorithm>

namespace mdl {

namespace {

using A = AssetKind;

constexpr std::array<A, 2> kDataAssets = {A::Data, A::LabelledData};
constexpr std::array<A, 2> kLabelAssets = {A::LabelledData, A::Data};
constexpr std::array<A, 2> kRepresentationAssets = {A::Representation, A::Data};
constexpr std::array<A, 3> kTrainingAssets = {A::TrainedModel, A::UntrainedModel, A::Data};
constexpr std::array<A, 2> kResultAssets = {A::Output, A::TrainedModel};
constexpr std::array<A, 1> kTrainedModel = {A::TrainedModel};
constexpr std::array<A, 1> kOutput = {A::Output};

bool any_restriction_applies(const std::vector<std::string>& payload, const std::string& value) {
  return std::binary_search(payload.begin(), payload.end(), value);
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i];
  }
  return out;
}

Decision forbid(std::string reason) {
  Decision d;
  d.verdict = Verdict::Forbidden;
  d.reason = std::move(reason);
  return d;
}

}  // namespace

std::span<const AssetKind> assets_for(Capability c) {
  using C = Capability;
  switch (c) {
    case C::ViewDownload:
    case C::RunEvaluationAlgorithms:
    case C::DistributeData: return kDataAssets;
    case C::CreateLabels: return kLabelAssets;
    case C::CreateRepresentation: return kRepresentationAssets;
    case C::TrainModel:
    case C::MeasurePerformance: return kTrainingAssets;
    case C::ShowTrainingResults: return kResultAssets;
    case C::RetainTrainedModel:
    case C::PublishModelRestricted:
    case C::ProvideModelToThirdParties:
    case C::EmbedModelInProduct: return kTrainedModel;
    case C::UseOutputForEvaluationOnly:
    case C::UseOutputInternally:
    case C::ProvideOutputToThirdParties: return kOutput;
  }
  return {};
}

void validate(const ActionQuery& q) {
  auto assets = assets_for(q.capability);
  if (std::find(assets.begin(), assets.end(), q.asset) != assets.end()) return;
  std::string allowed;
  for (std::size_t i = 0; i < assets.size(); ++i) {
    if (i) allowed += ", ";
    allowed += token(assets[i]);
  }
  throw QueryError("action '" + std::string(token(q.capability)) + "' cannot apply to asset '" +
                   std::string(token(q.asset)) + "' (expected " + allowed + ")");
}

ActionQuery neutral_query(Capability c) {
  ActionQuery q;
  q.capability = c;
  q.asset = assets_for(c).front();
  return q;
}

std::string_view token(Verdict v) {
  switch (v) {
    case Verdict::Permitted: return "permitted";
    case Verdict::Forbidden: return "forbidden";
    case Verdict::PermittedWithObligations: return "permitted-with-obligations";
  }
  return "";
}

std::string_view token(Obligation o) {
  switch (o) {
    case Obligation::Attribute: return "attribute";
    case Obligation::SameTermsOnDistribution: return "same-terms-on-distribution";
    case Obligation::KeepConfidential: return "keep-confidential";
    case Obligation::DeleteTrainedWeightsAfterEvaluation: return "delete-trained-weights-after-evaluation";
    case Obligation::DownstreamResearchPublicationOnly: return "downstream-research-publication-only";
  }
  return "";
}

std::string_view description(Obligation o) {
  switch (o) {
    case Obligation::Attribute:
      return "Make commercially reasonable efforts to link to the source of the Data.";
    case Obligation::SameTermsOnDistribution:
      return "Distribute the Data only under the same terms as this License.";
    case Obligation::KeepConfidential:
      return "Do not publicly refer to the Licensor or the source of the Data.";
    case Obligation::DeleteTrainedWeightsAfterEvaluation:
      return "Delete the weights of any Model trained on the Data once evaluation is complete.";
    case Obligation::DownstreamResearchPublicationOnly:
      return "Third parties receiving the Model may use it for Research or Publication only.";
  }
  return "";
}

Decision check(const GrantSet& g, const ActionQuery& q) {
  validate(q);

  if (const Restriction* ex = g.find(RestrictionKind::EthicalExclusion);
      ex && q.target_domain && any_restriction_applies(ex->payload, *q.target_domain))
    return forbid("domain '" + *q.target_domain + "' is excluded by the grant (excluded: " +
                  join(ex->payload) + ")");

  if (const Restriction* parties = g.find(RestrictionKind::DesignatedParties)) {
    if (!q.actor) return forbid("actor required: the grant is limited to designated parties");
    if (!any_restriction_applies(parties->payload, *q.actor))
      return forbid("actor '" + *q.actor + "' is not a designated party" +
                    (parties->payload.empty() ? std::string(" (no party is designated)")
                                              : " (designated: " + join(parties->payload) + ")"));
  }

  if (q.involves_sublicense && g.has(RestrictionKind::NoSublicense))
    return forbid("sub-licensing is not permitted by the grant");

  const CapabilitySet caps = denote(g);
  if (!caps.contains(q.capability)) {
    std::string providers;
    for (Right r : kAllRights) {
      if (!right_capabilities(r).contains(q.capability)) continue;
      if (!providers.empty()) providers += ", ";
      providers += token(r);
    }
    return forbid("'" + std::string(token(q.capability)) +
                  "' is not conferred by the grant; it requires one of: " + providers);
  }

  Decision d;
  for (Right r : closure(g.rights()).members())
    if (right_capabilities(r).contains(q.capability)) d.trace.push_back({r, q.capability});

  if (g.has(RestrictionKind::AttributionRequired)) d.obligations.push_back(Obligation::Attribute);
  if (q.capability == Capability::DistributeData)
    d.obligations.push_back(Obligation::SameTermsOnDistribution);
  if (g.has(RestrictionKind::Confidential)) d.obligations.push_back(Obligation::KeepConfidential);
  if (right_capabilities(Right::Benchmark2).contains(q.capability) &&
      caps.contains(Capability::TrainModel) && !caps.contains(Capability::RetainTrainedModel))
    d.obligations.push_back(Obligation::DeleteTrainedWeightsAfterEvaluation);
  if (q.capability == Capability::PublishModelRestricted)
    d.obligations.push_back(Obligation::DownstreamResearchPublicationOnly);

  d.verdict = d.obligations.empty() ? Verdict::Permitted : Verdict::PermittedWithObligations;
  d.reason = "'" + std::string(token(q.capability)) + "' is conferred by " +
             std::string(token(d.trace.front().right));
  return d;
}

ScenarioTable scenario_table(const GrantSet& g) {
  ScenarioTable table;
  for (std::size_t i = 0; i < kCapabilityCount; ++i) {
    Capability c = kAllCapabilities[i];
    table[i] = {c, check(g, neutral_query(c)).verdict};
  }
  return table;
}

std::vector<Obligation> scenario_obligations(const GrantSet& g) {
  std::array<bool, kAllObligations.size()> seen{};
  for (Capability c : kAllCapabilities)
    for (Obligation o : check(g, neutral_query(c)).obligations) seen[static_cast<std::size_t>(o)] = true;
  std::vector<Obligation> out;
  for (Obligation o : kAllObligations)
    if (seen[static_cast<std::size_t>(o)]) out.push_back(o);
  return out;
}

}  // namespace mdl
