#pragma once

// The equities-trading decision table: six illustrative rights against four
// acts. Expected verdicts are transcribed by hand, one row per right.

#include <array>
#include <string>

namespace scenarios {

struct Act {
  const char* name;
  const char* capability;
  const char* asset;
};

inline constexpr std::array<Act, 4> kActs = {{
    {"retain trained weights", "retain-trained-model", "trained-model"},
    {"use output to trade internally", "use-output-internally", "output"},
    {"serve predictions to third parties", "provide-output-third-party", "output"},
    {"sell the model", "provide-model-third-party", "trained-model"},
}};

struct Row {
  const char* right;
  std::array<bool, 4> permitted;
};

inline constexpr std::array<Row, 6> kRows = {{
    {"benchmark-trained", {false, false, false, false}},
    {"research", {true, false, false, false}},
    {"publish", {true, false, false, false}},
    {"internal", {true, true, false, false}},
    {"output-commercial", {true, true, true, false}},
    {"model-commercial", {true, true, true, true}},
}};

struct Vector {
  std::string expression;
  const Act* act;
  bool permitted;
};

inline std::array<Vector, 24> vectors() {
  std::array<Vector, 24> out;
  std::size_t i = 0;
  for (const Row& row : kRows)
    for (std::size_t a = 0; a < kActs.size(); ++a)
      out[i++] = {std::string("MDL-1.0; model: ") + row.right, &kActs[a], row.permitted[a]};
  return out;
}

}  // namespace scenarios
