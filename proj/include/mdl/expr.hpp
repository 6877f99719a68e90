#pragma once

// Textual MDL expressions, e.g.
//
//   MDL-1.0; data: access, label; model: research; restrictions: attribution
//
// The grammar is documented in docs/grammar.md. Keywords and right tokens are
// case-insensitive; party and domain identifiers are case-sensitive.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mdl/taxonomy.hpp"

namespace mdl {

struct TokenSpan {
  std::string text;
  std::size_t begin = 0;  // byte offset
  std::size_t end = 0;    // one past the last byte
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, std::string found,
             std::string message);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }
  /// Message without location, e.g. "unknown data right 'acess'".
  const std::string& message() const { return message_; }

  /// Multi-line rendering with the input and a caret under the offset.
  std::string annotate(std::string_view input) const;

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string found_;
  std::string message_;
};

struct Expression {
  std::string raw;
  GrantSet grant;
  std::vector<TokenSpan> spans;
};

Expression parse(std::string_view text);
GrantSet parse_grant(std::string_view text);

/// Canonical rendering: lowercase keywords, one space after separators,
/// rights in enumeration order, restrictions in kind order, sorted payloads.
std::string serialize(const GrantSet& g);

/// serialize(parse(text)).
std::string canonical(std::string_view text);

}  // namespace mdl
