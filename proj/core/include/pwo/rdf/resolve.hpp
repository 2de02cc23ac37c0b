#pragma once

#include <string_view>

#include "pwo/rdf/term.hpp"

namespace pwo::rdf {

/// Resolves an rdf:ID-style fragment identifier against a document base:
/// any fragment already on `base` is replaced by "#" + `fragment_id`.
/// The identifier must be a valid XML NCName.
Iri resolve_id(const Iri& base, std::string_view fragment_id);

/// Resolves an IRI reference against a base. Handles the forms this toolkit
/// meets in documents: absolute IRIs, "" (the base itself), "#frag", and
/// plain relative paths (merged with dot-segment removal).
Iri resolve_reference(const Iri& base, std::string_view reference);

} // namespace pwo::rdf
