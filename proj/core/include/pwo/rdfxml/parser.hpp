#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pwo/rdf/graph.hpp"

namespace pwo::rdfxml {

struct ParseDiagnostics {
    struct Warning {
        int line = 1;
        std::string message;
    };
    // Sorted by line, each pointing inside the input document.
    std::vector<Warning> warnings;
};

struct ParseResult {
    rdf::Graph graph;
    ParseDiagnostics diagnostics;
};

// Reads the striped RDF/XML subset:
//   - rdf:RDF envelope containing node elements
//   - typed node elements (emit an rdf:type triple) and rdf:Description
//   - rdf:ID (resolved as a fragment of `base`), rdf:about, rdf:resource
//   - property elements with literal content, rdf:datatype, scoped xml:lang
//   - nested node elements inside property elements
//   - DOCTYPE entity declarations; `&xsd;string` and the truncated
//     `&xsd:string` attribute form both land in the XML Schema namespace
//
// Anything else (rdf:parseType, containers, collections, reification,
// rdf:nodeID, property attributes, xml:base) raises UnsupportedConstruct with
// the offending line rather than being dropped. Malformed XML raises
// XmlSyntaxError. Prefixes declared on the envelope are recorded in the
// returned graph's prefix map.
ParseResult parse_rdfxml(std::string_view document, const rdf::Iri& base);

} // namespace pwo::rdfxml
