#pragma once

#include "pwo/rdf/graph.hpp"

namespace pwo::rdf {

// True when a bijection between the blank nodes of the two graphs maps one
// triple set onto the other. Ground triples must match exactly.
bool isomorphic(const Graph& a, const Graph& b);

} // namespace pwo::rdf
