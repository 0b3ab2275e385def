#pragma once

#include <string>

#include "circuit.hpp"

namespace avoid {

// "circuit n=<n> m=<m>" then one "out <id>: inputs <i...> ; table <bits>" per output, '#' lines
// ignored. Table character a is f on assignment a (LSB-first).
Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& c);

Circuit load_circuit(const std::string& path);

}  // namespace avoid
