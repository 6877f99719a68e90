#pragma once

// Rights vocabulary, capability atoms and the implication lattice of the
// Montreal Data License (MDL) taxonomy.
//
// Every type here is an immutable value and every function is pure.

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mdl {

inline constexpr std::string_view kTemplateVersion = "MDL-1.0";

enum class RightFamily : std::uint8_t { Data, Model };

// The eleven rights, in canonical order. The first four are rights over the
// data itself; the remaining seven are rights to use the data in conjunction
// with models. Benchmark is split into case 1 (no training) and case 2
// (a model is trained in order to evaluate it).
enum class Right : std::uint8_t {
  Access,
  Labelling,
  Distribute,
  Represent,
  Benchmark1,
  Benchmark2,
  Research,
  Publish,
  InternalUse,
  OutputCommercialization,
  ModelCommercialization,
};

inline constexpr std::size_t kRightCount = 11;
inline constexpr std::size_t kDataRightCount = 4;

inline constexpr std::array<Right, kRightCount> kAllRights = {
    Right::Access,      Right::Labelling,   Right::Distribute,
    Right::Represent,   Right::Benchmark1,  Right::Benchmark2,
    Right::Research,    Right::Publish,     Right::InternalUse,
    Right::OutputCommercialization,         Right::ModelCommercialization,
};

constexpr std::size_t index(Right r) { return static_cast<std::size_t>(r); }
constexpr RightFamily family(Right r) {
  return index(r) < kDataRightCount ? RightFamily::Data : RightFamily::Model;
}

/// Stable serialized token, e.g. `access`, `benchmark-trained`.
std::string_view token(Right r);
/// Display name, e.g. "Output Commercialization", "Benchmark (case 2)".
std::string_view display_name(Right r);
std::string_view token(RightFamily f);
std::optional<Right> right_from_token(std::string_view tok);
/// Full definition text of the taxonomy table row for `r`. Both Benchmark
/// cases share the Benchmark row.
std::string_view definition(Right r);
/// One-line summary used in the Top Sheet.
std::string_view summary(Right r);

// Atomic acts that rights confer. Capabilities are independent atoms: there
// are no implications among them.
enum class Capability : std::uint8_t {
  ViewDownload,
  RunEvaluationAlgorithms,
  CreateLabels,
  DistributeData,
  CreateRepresentation,
  TrainModel,
  MeasurePerformance,
  ShowTrainingResults,
  RetainTrainedModel,
  UseOutputForEvaluationOnly,
  UseOutputInternally,
  PublishModelRestricted,
  ProvideOutputToThirdParties,
  ProvideModelToThirdParties,
  EmbedModelInProduct,
};

inline constexpr std::size_t kCapabilityCount = 15;

inline constexpr std::array<Capability, kCapabilityCount> kAllCapabilities = {
    Capability::ViewDownload,
    Capability::RunEvaluationAlgorithms,
    Capability::CreateLabels,
    Capability::DistributeData,
    Capability::CreateRepresentation,
    Capability::TrainModel,
    Capability::MeasurePerformance,
    Capability::ShowTrainingResults,
    Capability::RetainTrainedModel,
    Capability::UseOutputForEvaluationOnly,
    Capability::UseOutputInternally,
    Capability::PublishModelRestricted,
    Capability::ProvideOutputToThirdParties,
    Capability::ProvideModelToThirdParties,
    Capability::EmbedModelInProduct,
};

constexpr std::size_t index(Capability c) { return static_cast<std::size_t>(c); }
std::string_view token(Capability c);
std::string_view description(Capability c);
std::optional<Capability> capability_from_token(std::string_view tok);

// Fixed-size set over an enumeration, stored as a bitmask. Iteration yields
// members in enumeration order.
template <typename Enum, std::size_t N, const std::array<Enum, N>& All>
class EnumSet {
 public:
  constexpr EnumSet() = default;
  constexpr EnumSet(std::initializer_list<Enum> members) {
    for (Enum e : members) insert(e);
  }
  static constexpr EnumSet from_mask(std::uint32_t mask) {
    EnumSet s;
    s.bits_ = mask & full_mask();
    return s;
  }
  static constexpr EnumSet all() { return from_mask(full_mask()); }

  constexpr void insert(Enum e) { bits_ |= bit(e); }
  constexpr void erase(Enum e) { bits_ &= ~bit(e); }
  constexpr bool contains(Enum e) const { return (bits_ & bit(e)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::bitset<32>(bits_).count());
  }
  constexpr std::uint32_t mask() const { return bits_; }

  constexpr bool is_subset_of(const EnumSet& o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr EnumSet operator|(const EnumSet& o) const { return from_mask(bits_ | o.bits_); }
  constexpr EnumSet operator&(const EnumSet& o) const { return from_mask(bits_ & o.bits_); }
  constexpr EnumSet operator-(const EnumSet& o) const { return from_mask(bits_ & ~o.bits_); }
  constexpr EnumSet& operator|=(const EnumSet& o) { bits_ |= o.bits_; return *this; }
  constexpr bool operator==(const EnumSet&) const = default;

  std::vector<Enum> members() const {
    std::vector<Enum> out;
    for (Enum e : All)
      if (contains(e)) out.push_back(e);
    return out;
  }

 private:
  static constexpr std::uint32_t bit(Enum e) {
    return std::uint32_t{1} << static_cast<std::uint32_t>(e);
  }
  static constexpr std::uint32_t full_mask() {
    return (std::uint32_t{1} << N) - 1;
  }
  std::uint32_t bits_ = 0;
};

using RightSet = EnumSet<Right, kRightCount, kAllRights>;
using CapabilitySet = EnumSet<Capability, kCapabilityCount, kAllCapabilities>;

inline constexpr std::uint32_t kDataRightsMask = 0x00f;
inline constexpr std::uint32_t kModelRightsMask = 0x7f0;

enum class RestrictionKind : std::uint8_t {
  DesignatedParties,
  NoSublicense,
  AttributionRequired,
  Confidential,
  EthicalExclusion,
};

inline constexpr std::array<RestrictionKind, 5> kAllRestrictionKinds = {
    RestrictionKind::DesignatedParties, RestrictionKind::NoSublicense,
    RestrictionKind::AttributionRequired, RestrictionKind::Confidential,
    RestrictionKind::EthicalExclusion,
};

std::string_view token(RestrictionKind k);
constexpr bool has_payload(RestrictionKind k) {
  return k == RestrictionKind::DesignatedParties ||
         k == RestrictionKind::EthicalExclusion;
}

// A restriction attached to a grant. DesignatedParties carries party
// identifiers; EthicalExclusion carries excluded-domain tags. Payloads are
// kept deduplicated and lexicographically sorted.
struct Restriction {
  RestrictionKind kind;
  std::vector<std::string> payload;

  static Restriction designated_parties(std::vector<std::string> parties);
  static Restriction no_sublicense() { return {RestrictionKind::NoSublicense, {}}; }
  static Restriction attribution() { return {RestrictionKind::AttributionRequired, {}}; }
  static Restriction confidential() { return {RestrictionKind::Confidential, {}}; }
  static Restriction ethical_exclusion(std::vector<std::string> domains);

  bool operator==(const Restriction&) const = default;
};

/// Renders a restriction in expression syntax, e.g. `parties(a|b)`.
std::string to_string(const Restriction& r);

class GrantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The set of rights and restrictions a licensor confers. An empty grant is
// valid and means "all rights reserved".
//
// Restrictions are stored one per kind, ordered by kind. AttributionRequired
// and Confidential may not both be present. An empty DesignatedParties
// payload is representable: it arises from combining grants whose designated
// parties are disjoint and means that nobody may exercise the grant.
class GrantSet {
 public:
  GrantSet() = default;
  explicit GrantSet(RightSet rights) : rights_(rights) {}
  GrantSet(RightSet rights, std::vector<Restriction> restrictions);

  static GrantSet full() { return GrantSet(RightSet::all()); }

  const RightSet& rights() const { return rights_; }
  RightSet data_rights() const { return RightSet::from_mask(rights_.mask() & kDataRightsMask); }
  RightSet model_rights() const { return RightSet::from_mask(rights_.mask() & kModelRightsMask); }
  const std::vector<Restriction>& restrictions() const { return restrictions_; }
  std::string_view version() const { return kTemplateVersion; }

  bool has(Right r) const { return rights_.contains(r); }
  bool has(RestrictionKind k) const { return find(k) != nullptr; }
  const Restriction* find(RestrictionKind k) const;

  GrantSet with_rights(RightSet rights) const;
  /// Adds a restriction, merging nothing: a second restriction of the same
  /// kind or an attribution/confidential clash throws GrantError.
  void add(Restriction r);

  bool operator==(const GrantSet&) const = default;

 private:
  RightSet rights_;
  std::vector<Restriction> restrictions_;
};

/// Direct implication edges out of `r`.
RightSet implied_rights(Right r);

struct ImplicationEdge {
  Right from;
  Right to;
};
/// All declared edges, ordered by source then target.
std::vector<ImplicationEdge> implication_edges();

/// Transitive closure of the rights under implication; restrictions unchanged.
RightSet closure(RightSet rights);
GrantSet closure(const GrantSet& g);

/// Capabilities conferred by `r` alone (not transitive).
CapabilitySet right_capabilities(Right r);

/// Union of right_capabilities over the closure.
CapabilitySet denote(RightSet rights);
CapabilitySet denote(const GrantSet& g);

/// Restriction union used by meet: DesignatedParties payloads are
/// intersected, EthicalExclusion payloads unioned, and Confidential absorbs
/// AttributionRequired.
std::vector<Restriction> merge_restrictions(const std::vector<Restriction>& a,
                                            const std::vector<Restriction>& b);

/// Greatest grant permitted by both `a` and `b`.
GrantSet meet(const GrantSet& a, const GrantSet& b);

}  // namespace mdl
