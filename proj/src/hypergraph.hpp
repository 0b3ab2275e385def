#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circuit.hpp"

namespace avoid {

inline constexpr int kMaxUniformity = 8;

struct Hypergraph {
  int n_vertices = 0;
  std::vector<std::vector<int>> edges;  // each sorted
  std::vector<int> label;               // edge index -> output index

  int m() const { return static_cast<int>(edges.size()); }
};

Hypergraph build_hypergraph(const Circuit& c);
Hypergraph make_hypergraph(int n_vertices, std::vector<std::vector<int>> edges);
Hypergraph sub_hypergraph(const Hypergraph& h, const std::vector<int>& edgeIdx);

struct StructureReport {
  bool isLinear = false;
  int uniformK = 0;  // 0 when edges differ in size
  bool isConnected = false;
};

StructureReport validate_structure(const Hypergraph& h);

std::vector<int> vertex_degrees(const Hypergraph& h);
int covered_vertices(const Hypergraph& h);
std::vector<std::vector<int>> incidence(const Hypergraph& h);

struct BlockGraph {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;  // (f, g) with f < g, sorted
  std::map<std::pair<int, int>, int> sharedVertex;
  std::vector<std::vector<int>> adj;
};

BlockGraph build_block_graph(const Hypergraph& h);

enum class PatternKind { Wicket, GridK, WeakFano, KCage, KCrown, CStar, OddButterfly, OddKite };

struct PatternSpec {
  PatternKind kind = PatternKind::Wicket;
  int k = 0;
  int l = 0;
  int i = 2;  // kite: position of u_i on the first cycle
  int j = 2;  // kite: position of v_j on the second cycle

  std::string name() const;
};

// Parses "wicket", "grid:4", "weak-fano", "cage:5", "crown:3", "cstar:4", "butterfly:3,3", "kite:3,3".
PatternSpec parse_pattern_spec(const std::string& text);

struct PatternTemplate {
  int n_vertices = 0;
  std::vector<std::vector<int>> edges;  // in search order
  std::vector<std::string> edgeRoles;
  std::vector<std::string> vertexRoles;
};

PatternTemplate pattern_template(const PatternSpec& spec);

struct PatternMatch {
  PatternSpec spec;
  std::vector<std::pair<std::string, int>> edgeRoles;    // template order
  std::vector<std::pair<std::string, int>> vertexRoles;  // template vertex order

  std::vector<int> edges() const;
  int edge(const std::string& role) const;
  int vertex(const std::string& role) const;
};

// Lexicographically least tuple of edge indices (in template role order) forming the pattern.
std::optional<PatternMatch> find_fixed_pattern(const Hypergraph& h, const PatternSpec& spec);

// Direct check that the role maps realize the template inside h.
bool verify_pattern_match(const Hypergraph& h, const PatternMatch& match);

struct LooseXCycle {
  int chiEdge = -1;
  int chiEdge2 = -1;
  int chiVertex = -1;
  // walk1 runs from a vertex of chiEdge to a vertex of chiEdge2; walk2 likewise.
  std::vector<int> walk1Edges, walk1Vertices;  // |vertices| = |edges| + 1
  std::vector<int> walk2Edges, walk2Vertices;
  // Cycle order: chiEdge, walk1, chiEdge2, walk2 reversed. parity[i] alternates from 0.
  std::vector<int> cycleEdges;
  std::vector<int> parity;
  bool simple = true;
};

struct XCycleCheck {
  bool ok = false;
  std::string reason;
};

// Structural invariants: chi pair meets exactly at chiVertex, walks are Berge walks joining
// the chi edges, block-graph walk lengths are odd, repeated edges carry one parity.
XCycleCheck verify_x_cycle(const Hypergraph& h, const LooseXCycle& x);

// Sum over vertices of min(d_R, d_B) for the parity coloring, minus the number of distinct edges.
// Positive means no vertex 2-coloring can realize the alternating MAJ3 coloring.
int x_cycle_counting_margin(const Hypergraph& h, const LooseXCycle& x);

struct XCycleSearchStats {
  long chiPairs = 0;
  long bfsRuns = 0;
  long rejected = 0;
};

// accept is consulted for each structurally valid candidate in deterministic order; default
// accepts candidates with a positive counting margin.
std::optional<LooseXCycle> find_loose_x_cycle(const Hypergraph& h,
                                              const std::function<bool(const LooseXCycle&)>& accept = {},
                                              XCycleSearchStats* stats = nullptr);

std::string hypergraph_to_text(const Hypergraph& h);

}  // namespace avoid
