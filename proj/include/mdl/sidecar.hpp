#pragma once

// `MDL.json`: machine-readable license metadata shipped at a dataset's root.
// The schema is published in docs/sidecar.schema.json.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mdl/taxonomy.hpp"

namespace mdl {

inline constexpr std::string_view kSidecarSchemaVersion = "1";
inline constexpr std::string_view kSidecarFileName = "MDL.json";

struct Licensor {
  std::string name;
  std::optional<std::string> contact;
  bool operator==(const Licensor&) const = default;
};

struct Sidecar {
  std::string schema_version{kSidecarSchemaVersion};
  std::string expression{"MDL-1.0"};  // canonical
  Licensor licensor;
  std::optional<std::string> data_source;
  std::vector<std::string> notices;
  std::optional<std::string> license_text_hash;
  // Unknown top-level members kept by a lenient read; written back verbatim.
  nlohmann::json extra = nlohmann::json::object();

  GrantSet grant() const;
  bool operator==(const Sidecar&) const = default;
};

enum class ReadMode : std::uint8_t { Strict, Lenient };

class SidecarError : public std::runtime_error {
 public:
  SidecarError(std::string path, std::string message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)), message_(std::move(message)) {}

  /// JSON pointer to the offending member, e.g. "/licensor/name".
  const std::string& path() const { return path_; }
  const std::string& message() const { return message_; }

 private:
  std::string path_;
  std::string message_;
};

/// Parses and fully validates a sidecar. Throws SidecarError.
Sidecar read_sidecar(std::string_view bytes, ReadMode mode = ReadMode::Strict);

/// Throws SidecarError if `s` would not survive read_sidecar.
void validate(const Sidecar& s);

/// Canonical bytes: sorted keys, two-space indentation, trailing newline.
/// Empty optional members are omitted.
std::string write_sidecar(const Sidecar& s);

}  // namespace mdl
