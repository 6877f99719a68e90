#include "mdl/taxonomy.hpp"

#include <algorithm>
#include <iterator>

namespace mdl {

namespace {

struct RightInfo {
  std::string_view token;
  std::string_view name;
  std::string_view summary;
};

constexpr std::array<RightInfo, kRightCount> kRightInfo = {{
    {"access", "Access", "Access, view and download the Data to evaluate it; no Untrained Models."},
    {"label", "Labelling", "Add tags, labels or other metadata to the Data."},
    {"distribute", "Distribute", "Make all or part of the Data available to Third Parties."},
    {"represent", "Represent", "Transform the Data into a Representation that mimics it."},
    {"benchmark", "Benchmark (case 1)", "Measure the performance of Models on the Data without training."},
    {"benchmark-trained", "Benchmark (case 2)",
     "Train on the Data to evaluate Models; trained weights may not be reused."},
    {"research", "Research", "Create or improve Models; Output and Trained Models only for evaluation."},
    {"publish", "Publish",
     "Make Models resulting from Research available to Third Parties for Research or Publication only."},
    {"internal", "Internal Use", "Use Models and Output internally for any purpose; nothing to Third Parties."},
    {"output-commercial", "Output Commercialization",
     "Make Output available to Third Parties or use it for their benefit."},
    {"model-commercial", "Model Commercialization",
     "Make a Trained Model available to Third Parties or embody it in a product or service."},
}};

// Row text of the taxonomy table, reproduced as published.
constexpr std::string_view kBenchmarkRow =
    "To access the Data, use the Data as training data to evaluate the efficiency of different "
    "Untrained Models, algorithms and structures, but excludes reuse of the Trained Model, except "
    "to show the results of the Training. This includes the right to use the dataset to measure "
    "the performance of a Trained or Untrained Model, without however having the right to "
    "carry-over weights, code or architecture or implement any modifications resulting from such "
    "evaluation.";

constexpr std::array<std::string_view, kRightCount> kDefinitions = {
    "To access, view and/or download the Data to view it and evaluate it (evaluation algorithms "
    "may be exposed to it, but no Untrained Models).",
    "To build upon Data by adding tags, labels or other metadata to the dataset or subsets of the "
    "Data.",
    "Make all or part of the Data available to third parties.",
    "Transform the data into a new representation, thereby re-representing each data element in a "
    "way that mimics the effects of the initial data itself (i.e. the purpose or end-result "
    "consists of a suitable alternative to such Data).",
    kBenchmarkRow,
    kBenchmarkRow,
    "To access the Data, use the Data to create or improve Models, but without the right to use "
    "the Output or resulting Trained Model for any purpose other than evaluating the Model "
    "Research under the same terms.",
    "To make available to third parties the Models resulting from Research, provided however that "
    "third parties accessing such Trained Models have the right to use them for Research or "
    "Publication only.",
    "To access the Data, use the Data to create or improve Models and resulting Output, but "
    "without the right to Output Commercialization or Model Commercialization. The Output can be "
    "used internally for any purpose, but not made available to Third Parties or for their "
    "benefit.",
    "To access the Data, use the Data to create or improve Models and resulting Output, with the "
    "right to make the Output available to Third Parties or to use it for their benefit. The "
    "Trained Model itself however cannot be not made available to Third Parties. This would allow "
    "SaaS commercialization.",
    "Make a Trained Model itself available to a Third Party, or embodying the Trained Model in a "
    "product or service, with or without direct access to the Output for such Third Party.",
};

struct CapabilityInfo {
  std::string_view token;
  std::string_view description;
};

constexpr std::array<CapabilityInfo, kCapabilityCount> kCapabilityInfo = {{
    {"view-download", "View and download the Data"},
    {"run-evaluation-algorithms", "Expose evaluation algorithms (not Untrained Models) to the Data"},
    {"create-labels", "Create labels, tags or other metadata for the Data"},
    {"distribute-data", "Make all or part of the Data available to Third Parties"},
    {"create-representation", "Create a Representation of the Data"},
    {"train-model", "Train a Model on the Data"},
    {"measure-performance", "Measure the performance of a Model on the Data"},
    {"show-training-results", "Show the results of training"},
    {"retain-trained-model", "Keep and reuse the weights of a Trained Model"},
    {"use-output-evaluation-only", "Use Output solely to evaluate the Model"},
    {"use-output-internally", "Use Output internally for any purpose"},
    {"publish-model-restricted", "Make a Trained Model available for Research or Publication only"},
    {"provide-output-third-party", "Make Output available to Third Parties or use it for their benefit"},
    {"provide-model-third-party", "Make a Trained Model itself available to a Third Party"},
    {"embed-model-in-product", "Embody a Trained Model in a product or service"},
}};

constexpr std::array<std::string_view, 5> kRestrictionTokens = {
    "parties", "no-sublicense", "attribution", "confidential", "exclude",
};

// Direct edges of the implication lattice. Every model right reaches Access
// through Benchmark (case 1), so the redundant ModelRight -> Access edges are
// not listed separately.
constexpr std::array<ImplicationEdge, 10> kEdges = {{
    {Right::Labelling, Right::Access},
    {Right::Distribute, Right::Access},
    {Right::Represent, Right::Access},
    {Right::Benchmark1, Right::Access},
    {Right::Benchmark2, Right::Benchmark1},
    {Right::Research, Right::Benchmark2},
    {Right::Publish, Right::Research},
    {Right::InternalUse, Right::Research},
    {Right::OutputCommercialization, Right::InternalUse},
    {Right::ModelCommercialization, Right::OutputCommercialization},
}};
constexpr ImplicationEdge kModelCommercialToPublish{Right::ModelCommercialization, Right::Publish};

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::string_view token(Right r) { return kRightInfo[index(r)].token; }
std::string_view display_name(Right r) { return kRightInfo[index(r)].name; }
std::string_view summary(Right r) { return kRightInfo[index(r)].summary; }
std::string_view definition(Right r) { return kDefinitions[index(r)]; }

std::string_view token(RightFamily f) {
  return f == RightFamily::Data ? "data" : "model";
}

std::optional<Right> right_from_token(std::string_view tok) {
  for (Right r : kAllRights)
    if (token(r) == tok) return r;
  return std::nullopt;
}

std::string_view token(Capability c) { return kCapabilityInfo[index(c)].token; }
std::string_view description(Capability c) { return kCapabilityInfo[index(c)].description; }

std::optional<Capability> capability_from_token(std::string_view tok) {
  for (Capability c : kAllCapabilities)
    if (token(c) == tok) return c;
  return std::nullopt;
}

std::string_view token(RestrictionKind k) {
  return kRestrictionTokens[static_cast<std::size_t>(k)];
}

Restriction Restriction::designated_parties(std::vector<std::string> parties) {
  return {RestrictionKind::DesignatedParties, sorted_unique(std::move(parties))};
}

Restriction Restriction::ethical_exclusion(std::vector<std::string> domains) {
  return {RestrictionKind::EthicalExclusion, sorted_unique(std::move(domains))};
}

std::string to_string(const Restriction& r) {
  std::string out(token(r.kind));
  if (has_payload(r.kind)) {
    out += '(';
    for (std::size_t i = 0; i < r.payload.size(); ++i) {
      if (i) out += '|';
      out += r.payload[i];
    }
    out += ')';
  }
  return out;
}

GrantSet::GrantSet(RightSet rights, std::vector<Restriction> restrictions)
    : rights_(rights) {
  for (auto& r : restrictions) add(std::move(r));
}

const Restriction* GrantSet::find(RestrictionKind k) const {
  auto it = std::find_if(restrictions_.begin(), restrictions_.end(),
                         [k](const Restriction& r) { return r.kind == k; });
  return it == restrictions_.end() ? nullptr : &*it;
}

GrantSet GrantSet::with_rights(RightSet rights) const {
  GrantSet g = *this;
  g.rights_ = rights;
  return g;
}

void GrantSet::add(Restriction r) {
  if (has(r.kind))
    throw GrantError("duplicate restriction '" + std::string(token(r.kind)) + "'");
  if ((r.kind == RestrictionKind::AttributionRequired && has(RestrictionKind::Confidential)) ||
      (r.kind == RestrictionKind::Confidential && has(RestrictionKind::AttributionRequired)))
    throw GrantError("'attribution' and 'confidential' are mutually exclusive");
  if (has_payload(r.kind)) {
    r.payload = sorted_unique(std::move(r.payload));
    if (r.kind == RestrictionKind::EthicalExclusion && r.payload.empty())
      throw GrantError("'exclude' requires at least one domain");
  } else {
    r.payload.clear();
  }
  auto pos = std::find_if(restrictions_.begin(), restrictions_.end(),
                          [&](const Restriction& x) { return x.kind > r.kind; });
  restrictions_.insert(pos, std::move(r));
}

RightSet implied_rights(Right r) {
  RightSet out;
  for (const auto& e : kEdges)
    if (e.from == r) out.insert(e.to);
  if (r == kModelCommercialToPublish.from) out.insert(kModelCommercialToPublish.to);
  return out;
}

std::vector<ImplicationEdge> implication_edges() {
  std::vector<ImplicationEdge> out;
  for (Right r : kAllRights)
    for (Right to : implied_rights(r).members()) out.push_back({r, to});
  return out;
}

RightSet closure(RightSet rights) {
  RightSet result = rights;
  for (;;) {
    RightSet next = result;
    for (Right r : result.members()) next |= implied_rights(r);
    if (next == result) return result;
    result = next;
  }
}

GrantSet closure(const GrantSet& g) { return g.with_rights(closure(g.rights())); }

CapabilitySet right_capabilities(Right r) {
  using C = Capability;
  switch (r) {
    case Right::Access: return {C::ViewDownload, C::RunEvaluationAlgorithms};
    case Right::Labelling: return {C::CreateLabels};
    case Right::Distribute: return {C::DistributeData};
    case Right::Represent: return {C::CreateRepresentation};
    case Right::Benchmark1: return {C::MeasurePerformance};
    case Right::Benchmark2: return {C::TrainModel, C::MeasurePerformance, C::ShowTrainingResults};
    case Right::Research:
      return {C::TrainModel, C::UseOutputForEvaluationOnly, C::RetainTrainedModel};
    case Right::Publish: return {C::PublishModelRestricted};
    case Right::InternalUse:
      return {C::TrainModel, C::RetainTrainedModel, C::UseOutputInternally};
    case Right::OutputCommercialization: return {C::ProvideOutputToThirdParties};
    case Right::ModelCommercialization:
      return {C::ProvideModelToThirdParties, C::EmbedModelInProduct};
  }
  return {};
}

CapabilitySet denote(RightSet rights) {
  CapabilitySet out;
  for (Right r : closure(rights).members()) out |= right_capabilities(r);
  return out;
}

CapabilitySet denote(const GrantSet& g) { return denote(g.rights()); }

std::vector<Restriction> merge_restrictions(const std::vector<Restriction>& a,
                                            const std::vector<Restriction>& b) {
  auto lookup = [](const std::vector<Restriction>& v, RestrictionKind k) -> const Restriction* {
    for (const auto& r : v)
      if (r.kind == k) return &r;
    return nullptr;
  };
  std::vector<Restriction> out;
  for (RestrictionKind k : kAllRestrictionKinds) {
    const Restriction* ra = lookup(a, k);
    const Restriction* rb = lookup(b, k);
    if (!ra && !rb) continue;
    if (!ra || !rb) {
      out.push_back(ra ? *ra : *rb);
      continue;
    }
    Restriction merged{k, {}};
    if (k == RestrictionKind::DesignatedParties) {
      std::set_intersection(ra->payload.begin(), ra->payload.end(), rb->payload.begin(),
                            rb->payload.end(), std::back_inserter(merged.payload));
    } else if (k == RestrictionKind::EthicalExclusion) {
      std::set_union(ra->payload.begin(), ra->payload.end(), rb->payload.begin(),
                     rb->payload.end(), std::back_inserter(merged.payload));
    }
    out.push_back(std::move(merged));
  }
  bool confidential = std::any_of(out.begin(), out.end(), [](const Restriction& r) {
    return r.kind == RestrictionKind::Confidential;
  });
  if (confidential)
    std::erase_if(out, [](const Restriction& r) {
      return r.kind == RestrictionKind::AttributionRequired;
    });
  return out;
}

GrantSet meet(const GrantSet& a, const GrantSet& b) {
  RightSet rights = closure(a.rights()) & closure(b.rights());
  return GrantSet(rights, merge_restrictions(a.restrictions(), b.restrictions()));
}

}  // namespace mdl
