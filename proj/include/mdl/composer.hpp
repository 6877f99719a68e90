#pragma once

// Rights propagation across derived assets and combination of datasets
// licensed under several grants.

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mdl/taxonomy.hpp"

namespace mdl {

enum class AssetKind : std::uint8_t {
  Data,
  LabelledData,
  Representation,
  UntrainedModel,
  TrainedModel,
  Output,
};

inline constexpr std::array<AssetKind, 6> kAllAssetKinds = {
    AssetKind::Data,          AssetKind::LabelledData, AssetKind::Representation,
    AssetKind::UntrainedModel, AssetKind::TrainedModel, AssetKind::Output,
};

std::string_view token(AssetKind a);
std::optional<AssetKind> asset_from_token(std::string_view tok);

enum class ConflictKind : std::uint8_t {
  AttributionVsConfidential,
  DisjointDesignatedParties,
};

std::string_view token(ConflictKind k);

struct Conflict {
  ConflictKind kind;
  std::string message;

  bool operator==(const Conflict&) const = default;
};

struct CombinationReport {
  GrantSet effective;  // closed
  std::vector<Conflict> conflicts;
  std::vector<std::string> provenance;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Meet of all sources. `ids` labels the sources in the report's
/// provenance; when empty the sources are labelled `source-0`, `source-1`, ...
/// Throws UsageError when `sources` is empty or `ids` has the wrong length.
CombinationReport combine(std::span<const GrantSet> sources,
                          std::span<const std::string> ids = {});

struct NotDerivable {
  std::string reason;
  bool operator==(const NotDerivable&) const = default;
};

using Derivation = std::variant<GrantSet, NotDerivable>;

/// The license that attaches to an asset of kind `asset` produced under
/// `parent`.
///
///  - Data, LabelledData, Representation: the parent's terms (closed), provided
///    the producing capability (distribute, label, represent) is granted.
///  - TrainedModel under Model Commercialization: every model right, carrying
///    only the parent's ethical exclusions. This is the one case where the
///    derived grant exceeds the parent: the licensee becomes a licensor.
///  - TrainedModel otherwise: the parent's Research, Publish, Internal Use and
///    Output Commercialization rights (from its closure) with the parent's
///    restrictions. Requires that trained weights may be retained.
///  - UntrainedModel and Output: NotDerivable. Output availability is a
///    capability question for the checker, not a new license.
Derivation derived_grant(const GrantSet& parent, AssetKind asset);

/// True when `derived_grant` is allowed to exceed the parent for this case.
bool is_licensor_escape(const GrantSet& parent, AssetKind asset);

}  // namespace mdl
