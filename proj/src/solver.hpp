#pragma once

#include <map>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "coloring.hpp"
#include "reductions.hpp"

namespace avoid {

struct ProblemClass {
  enum class Tag { NC02, AndOrK, OneIntersectMajK, Maj3, MonNC03, Depth1Monotone, Unsupported };
  Tag tag = Tag::Unsupported;
  int k = 0;
  std::string reason;  // Unsupported

  std::string name() const;
};

enum class SolveStatus { Verified, Unverified, NotFound, Unsupported, Refuted };

// Forces a specific solver; Auto lets dispatch pick by class.
enum class Strategy { Auto, XCycle, Wicket, Grid, NC02, AndOr, Depth1 };

Strategy parse_strategy(const std::string& s);
std::string strategy_name(Strategy s);

struct SolveOptions {
  Strategy method = Strategy::Auto;
  int oracleLimit = kDefaultOracleLimit;
};

struct SolveReport {
  SolveStatus status = SolveStatus::NotFound;
  ProblemClass cls;
  std::string solver;
  int n = 0, m = 0;
  PartialOutput certificate;
  bool verified = false;
  std::string pattern;                      // pattern or structure used, if any
  std::vector<int> edges;                   // its outputs in the original circuit
  std::vector<std::pair<int, Color>> coloring;  // output -> color on those edges
  std::vector<std::string> provenance;      // reduction cases and pattern, in order
  ReductionTrace trace;
  std::vector<std::string> explain;
  std::map<std::string, long> stats;
  std::string reason;
  double seconds = 0;  // wall time, kept out of the JSON
};

ProblemClass classify_problem(const Circuit& c);

SolveReport solve_nc02(const Circuit& c, const SolveOptions& opt = {});
SolveReport solve_andor_k(const Circuit& c, const SolveOptions& opt = {});
SolveReport solve_one_intersect_maj_k(const Circuit& c, const SolveOptions& opt = {});
// strategy is Auto, XCycle or Wicket
SolveReport solve_one_intersect_maj3(const Circuit& c, Strategy strategy, const SolveOptions& opt = {});
SolveReport solve_mon_nc03(const Circuit& c, const SolveOptions& opt = {});
SolveReport solve_depth1(const Circuit& c, const SolveOptions& opt = {});
SolveReport dispatch_solve(const Circuit& c, const SolveOptions& opt = {});

int exit_code(const SolveReport& r);
std::string status_name(SolveStatus s);

// Stable key order, no timings: identical inputs give identical bytes.
std::string report_to_json(const SolveReport& r);
std::string report_explain(const SolveReport& r);

}  // namespace avoid
