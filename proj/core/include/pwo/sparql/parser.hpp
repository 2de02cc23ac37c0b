#pragma once

#include <string_view>

#include "pwo/sparql/ast.hpp"

namespace pwo::sparql {

// Grammar: `PREFIX name: <iri>`* `SELECT (?var+ | *)` `WHERE { pattern }`,
// where pattern is `.`-separated triple patterns, `{…} UNION {…}`
// (left-associative, chainable), and nested brace groups. Terms: ?var,
// <iri>, prefix:local, "literal" with optional ^^type or @lang, and the
// keyword `a` for rdf:type in predicate position.
//
// Keywords outside this subset (FILTER, OPTIONAL, DISTINCT, ORDER, ...) are
// rejected by name. Throws QuerySyntaxError or UnknownPrefix.
QueryAst parse_query(std::string_view text);

} // namespace pwo::sparql
