#pragma once

#include <string>

#include "pwo/rdf/graph.hpp"

namespace pwo::rdfxml {

// Writes `g` as RDF/XML. Deterministic: subjects appear in first-appearance
// order and properties in insertion order. Subjects are always written with
// absolute rdf:about (never rdf:ID), so the output does not depend on where
// it will be stored; `base` is accepted for interface symmetry with the
// parser. A blank node is written as a nested anonymous node element when it
// is the object of exactly one triple, and as a top-level anonymous node when
// it is never an object; any other blank-node shape cannot be expressed in
// the supported subset and raises std::invalid_argument.
std::string serialize_rdfxml(const rdf::Graph& g, const rdf::Iri& base);

// One `<s> <p> <o> .` line per triple, in graph order.
std::string serialize_ntriples(const rdf::Graph& g);

} // namespace pwo::rdfxml
