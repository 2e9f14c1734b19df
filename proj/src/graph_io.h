#pragma once
// Interchange formats: graph6 (canonical exchange), DIMACS edge, DOT.

#include <string>

#include "graph.h"

namespace d4c {

enum class Format { Graph6, Dimacs, Dot };

std::string serialize(const Graph& g, Format f);
Graph parse(const std::string& text, Format f);

}  // namespace d4c
