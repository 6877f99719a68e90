#pragma once

// Compliance checks: is a concrete act permitted under a grant?

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mdl/composer.hpp"
#include "mdl/taxonomy.hpp"

namespace mdl {

struct ActionQuery {
  Capability capability = Capability::ViewDownload;
  AssetKind asset = AssetKind::Data;
  std::optional<std::string> actor;
  std::optional<std::string> target_domain;
  bool involves_sublicense = false;
};

class QueryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Asset kinds an act may be performed on. The first entry is the asset used
/// by neutral queries.
std::span<const AssetKind> assets_for(Capability c);

/// Throws QueryError when the asset does not fit the capability.
void validate(const ActionQuery& q);

/// A query with no actor, domain or sublicensing on the capability's primary
/// asset.
ActionQuery neutral_query(Capability c);

enum class Verdict : std::uint8_t { Permitted, Forbidden, PermittedWithObligations };

std::string_view token(Verdict v);

enum class Obligation : std::uint8_t {
  Attribute,
  SameTermsOnDistribution,
  KeepConfidential,
  DeleteTrainedWeightsAfterEvaluation,
  DownstreamResearchPublicationOnly,
};

inline constexpr std::array<Obligation, 5> kAllObligations = {
    Obligation::Attribute, Obligation::SameTermsOnDistribution, Obligation::KeepConfidential,
    Obligation::DeleteTrainedWeightsAfterEvaluation, Obligation::DownstreamResearchPublicationOnly,
};

std::string_view token(Obligation o);
std::string_view description(Obligation o);

struct Justification {
  Right right;
  Capability capability;
  bool operator==(const Justification&) const = default;
};

struct Decision {
  Verdict verdict = Verdict::Forbidden;
  std::vector<Obligation> obligations;
  std::vector<Justification> trace;
  std::string reason;

  bool permitted() const { return verdict != Verdict::Forbidden; }
};

/// Restriction checks run first (ethical exclusions, designated parties,
/// sublicensing), then the capability check; permitted acts carry the
/// obligations the grant attaches to them.
Decision check(const GrantSet& g, const ActionQuery& q);

using ScenarioTable = std::array<std::pair<Capability, Verdict>, kCapabilityCount>;

/// check() of a neutral query for every capability, in capability order.
ScenarioTable scenario_table(const GrantSet& g);

/// Obligations attached to any permitted row of the scenario table.
std::vector<Obligation> scenario_obligations(const GrantSet& g);

}  // namespace mdl
