#pragma once

// Curated malformed expressions with the byte offset the error must point at.

#include <array>

namespace malformed {

struct Case {
  const char* input;
  std::size_t offset;
  const char* message_part;
};

inline constexpr std::array<Case, 30> kCases = {{
    {"MDL-1.0; data: acess", 15, "unknown data right"},
    {"MDL-1.0; data: access,", 21, "trailing ','"},
    {"MDL-1.0; data: access; data: label", 23, "duplicate clause"},
    {"MDL-1.0; restrictions: parties()", 31, "empty identifier list"},
    {"MDL-1.0; restrictions: exclude()", 31, "empty identifier list"},
    {"MDL-2.0; data: access", 0, "unsupported version"},
    {"MDL-1.0; model: access", 16, "belongs in the data clause"},
    {"MDL-1.0; data: research", 15, "belongs in the model clause"},
    {"MDL-1.0; data: access, access", 23, "duplicate right"},
    {"MDL-1.0; model: publish, research, publish", 35, "duplicate right"},
    {"MDL-1.0; restrictions: attribution, confidential", 36, "mutually exclusive"},
    {"MDL-1.0; restrictions: confidential, attribution", 37, "mutually exclusive"},
    {"MDL-1.0; restrictions: attribution, attribution", 36, "duplicate restriction"},
    {"MDL-1.0; model: research; data: access", 26, "must precede"},
    {"MDL-1.0; license: access", 9, "unknown clause"},
    {"MDL-1.0;", 7, "trailing ';'"},
    {"MDL-1.0; data access", 14, "expected ':'"},
    {"MDL-1.0; data: access label", 22, "unexpected"},
    {"MDL-1.0; restrictions: parties(a|)", 33, "expected an identifier"},
    {"MDL-1.0; restrictions: parties(a", 32, "expected ')'"},
    {"MDL-1.0; restrictions: attribution(x)", 34, "takes no arguments"},
    {"MDL-1.0; restrictions: sublicense", 23, "unknown restriction"},
    {"data: access", 0, "unsupported version"},
    {"MDL-1.0 data: access", 8, "unexpected"},
    {"MDL-1.0; restrictions: exclude(military), exclude(health)", 42, "duplicate restriction"},
    {"MDL-1.0; model: research,, publish", 25, "expected a model right"},
    {"MDL-1.0; data: access; model: research;", 38, "trailing ';'"},
    {"", 0, "expected version"},
    {"MDL-1.0;;", 8, "expected a clause"},
    {"MDL-1.0; restrictions: parties(a b)", 33, "expected ')'"},
}};

}  // namespace malformed
