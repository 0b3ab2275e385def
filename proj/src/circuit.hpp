#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace avoid {

using Bits = std::vector<std::uint8_t>;

// Table bit a is f on the assignment whose bit t is the value of inputs[t].
struct OutputFunction {
  std::vector<int> inputs;
  Bits table;

  int arity() const { return static_cast<int>(inputs.size()); }
  bool at(std::uint32_t assignment) const { return table[assignment] != 0; }
  bool eval(const Bits& x) const;
};

OutputFunction make_function(std::vector<int> inputs, Bits table);

struct Circuit {
  int n = 0;
  std::vector<OutputFunction> outputs;

  int m() const { return static_cast<int>(outputs.size()); }
  int locality() const;
};

Circuit make_circuit(int n, std::vector<OutputFunction> outputs);

enum class FnTag {
  Const0,
  Const1,
  AndK,
  OrK,
  Maj3,
  MonotoneCase,
  Parity2,
  AndOr2,
  MajK,
  MonotoneWide,
  NonMonotone,
};

struct FunctionClass {
  FnTag tag = FnTag::NonMonotone;
  int caseId = 0;  // 1..8 for MonotoneCase

  bool operator==(const FunctionClass&) const = default;
  std::string name() const;
};

Bits and_table(int k);
Bits or_table(int k);
Bits maj_table(int k);  // 1 iff at least floor(k/2)+1 ones
Bits xor_table(int k);

bool table_is_monotone(const Bits& table, int arity);
bool depends_on(const Bits& table, int arity, int position);

FunctionClass classify_output_function(const OutputFunction& f);

// Case id of a monotone function of arity <= 3 after padding to three inputs.
int monotone_case(const Bits& table, int arity);

Bits evaluate(const Circuit& c, const Bits& x);

// Length-m string over '0', '1', '*'.
using PartialOutput = std::string;

void check_partial_output(const Circuit& c, const PartialOutput& y);
bool consistent(const Bits& out, const PartialOutput& y);

inline constexpr int kDefaultOracleLimit = 22;

// Lowest x (as an integer with x[0] least significant) whose image agrees with y.
std::optional<Bits> brute_force_preimage(const Circuit& c, const PartialOutput& y,
                                         int limit = kDefaultOracleLimit);

struct IntersectionProfile {
  int k = 0;
  int t = 0;
  bool operator==(const IntersectionProfile&) const = default;
};

IntersectionProfile intersection_profile(const Circuit& c);

// f with some inputs fixed: remaining inputs in original order and the reduced table.
struct Restricted {
  std::vector<int> inputs;
  Bits table;
};

// fixed[v] in {-1, 0, 1}
Restricted restrict_function(const OutputFunction& f, const std::vector<int>& fixed);

// Drops inputs the table ignores.
Restricted essential(const std::vector<int>& inputs, const Bits& table);

}  // namespace avoid
