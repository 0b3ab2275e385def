#pragma once

#include <cstdint>
#include <string>

#include "circuit.hpp"

namespace avoid {

enum class GenClass { MonNC03, Maj3, OneIntersectMaj3, OneIntersectMajK, NC02, AndOr, LinearHypergraph };

struct GeneratorSpec {
  GenClass cls = GenClass::MonNC03;
  int k = 3;  // one-intersect-majk and andor
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
};

// "mon-nc03", "maj3", "one-intersect-maj3", "one-intersect-majk:4", "nc02", "andor:3",
// "linear-hypergraph". "(k)" is accepted in place of ":k".
GeneratorSpec parse_generator_class(const std::string& text);
std::string generator_class_name(const GeneratorSpec& spec);

// Throws Infeasible when (n, m) violates the class's counting bound.
Circuit generate(const GeneratorSpec& spec);

// Empty when c meets the class's structural requirements, otherwise the first violation.
std::string validate_generated(const Circuit& c, const GeneratorSpec& spec);

}  // namespace avoid
