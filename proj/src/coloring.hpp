#pragma once

#include <map>
#include <optional>
#include <vector>

#include "circuit.hpp"
#include "hypergraph.hpp"

namespace avoid {

enum class Color : std::uint8_t { R = 0, B = 1 };

inline Color color_of(bool bit) { return bit ? Color::B : Color::R; }
inline bool delta(Color c) { return c == Color::B; }
inline char color_char(Color c) { return c == Color::B ? 'B' : 'R'; }

using EdgeColoring = std::map<int, Color>;    // hyperedge index -> color
using VertexColoring = std::map<int, Color>;  // vertex -> color

enum class Method { Exhaustive, Propagation };

inline constexpr int kExhaustiveVertexLimit = 25;

struct ColorabilityVerdict {
  bool colorable = false;
  VertexColoring witness;  // when colorable
  Method method = Method::Exhaustive;
  long nodes = 0;          // search nodes (propagation) or colorings tried (exhaustive)
};

Color induced_edge_color(const OutputFunction& f, const VertexColoring& colors);

// Per-edge function whose inputs are the edge's vertices.
std::vector<OutputFunction> majority_labels(const Hypergraph& h);
std::vector<OutputFunction> circuit_labels(const Hypergraph& h, const Circuit& c);

// Is there a vertex coloring under which every matched edge's function evaluates to its color?
// Propagation branches on seedVertex first (lowest matched vertex when -1).
ColorabilityVerdict decide_phi_colorable(const Hypergraph& h, const std::vector<OutputFunction>& labels,
                                         const std::vector<int>& matchEdges, const EdgeColoring& gamma,
                                         Method method, int seedVertex = -1);

// Crown and C* colorings read edge functions from labels (AND when labels is null).
EdgeColoring canonical_forbidden_coloring(const PatternMatch& match, const Hypergraph& h,
                                          const std::vector<OutputFunction>* labels = nullptr);
EdgeColoring canonical_forbidden_coloring(const LooseXCycle& x);

// y_i = '*' off the match, else the edge color's bit; h.label maps edges to outputs.
PartialOutput certificate_to_partial_output(int m, const Hypergraph& h, const EdgeColoring& gamma);

}  // namespace avoid
