#pragma once

#include "pwo/rdf/graph.hpp"

namespace pwo::ontology {

// Closes `g` under inverse properties: for every (s, P, o) with resource o
// and Q an inverse of P, the result also contains (o, Q, s). Inverse pairs
// come from explicit owl:inverseOf triples in `g` plus the built-in
// hasPart/isPartOf pairing within each fragment namespace. Idempotent; never
// removes triples; literal objects are left alone.
rdf::Graph materialize_inverses(const rdf::Graph& g);

} // namespace pwo::ontology
