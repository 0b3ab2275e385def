#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circuit.hpp"

namespace avoid {

struct TraceStep {
  enum class Kind { SetOutput, SetInput, IdentifyInputs, DropOutput, MonotonizeMap };
  Kind kind = Kind::SetOutput;
  int index = -1;  // output (SetOutput, DropOutput) or variable (others)
  int value = -1;  // SetOutput / SetInput bit
  int root = -1;   // IdentifyInputs: index == root (sign 0) or index == not root (sign 1)
  int sign = 0;
  int pos = -1, neg = -1;  // MonotonizeMap
  std::string note;        // case fired, for --explain

  bool operator==(const TraceStep&) const = default;
};

// Steps refer to the source instance's output and variable indices. outMap sends each output of
// the reduced instance to its source output.
struct ReductionTrace {
  int sourceM = 0;
  std::vector<int> outMap;
  std::vector<TraceStep> steps;
};

ReductionTrace identity_trace(int m);

// Trace of `first` followed by `second`, where second's source is first's reduced instance.
ReductionTrace compose(const ReductionTrace& first, const ReductionTrace& second);

PartialOutput backsubstitute(const ReductionTrace& trace, const PartialOutput& reduced);

enum class LitKind { Free, Fixed, Lit };

struct LiteralState {
  LitKind kind = LitKind::Free;
  int value = -1;  // Fixed
  int root = -1;   // Lit
  int sign = 0;    // Lit: 0 means equal to root, 1 means negated
  bool operator==(const LiteralState&) const = default;
};

struct Cluster {
  std::vector<int> outputs;  // K
  std::vector<int> inputs;   // I(K)
};

struct Reduced {
  std::optional<PartialOutput> certificate;  // over the source instance, when the step already finished
  Circuit circuit;                           // reduced instance otherwise
  ReductionTrace trace;
  std::vector<std::string> explain;
};

// Circuit over 2n inputs (x_i at i, not x_i at n+i) whose outputs are monotone and agree with
// the source on (a, not a).
Reduced demorgan_monotonize(const Circuit& c);

Reduced reduce_mon3_to_maj3(const Circuit& c);

Cluster find_heavy_cluster(const Circuit& c);

// Outputs K only; trace drops the rest.
Reduced restrict_to_cluster(const Circuit& c, const Cluster& k);

struct TwoToOneStats {
  int maxAliveRoots = 0;
  int maxBranches = 1;
  int steps = 0;
  int deferred = 0;  // steps where every candidate shared one alive input and the branch set grew
};

Reduced reduce_two_to_one_intersect(const Circuit& c, TwoToOneStats* stats = nullptr);

// Literal state of every variable after each loop iteration of the last elimination run on this
// thread (test hook for the at-most-one-alive-root invariant).
const std::vector<std::vector<LiteralState>>& last_elimination_states();

PartialOutput solve_depth1_monotone(const Circuit& c, std::vector<std::string>* explain = nullptr);

bool is_and_or_const(const OutputFunction& f);

}  // namespace avoid
