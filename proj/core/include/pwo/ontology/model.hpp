#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pwo/ontology/vocabulary.hpp"
#include "pwo/rdf/graph.hpp"

namespace pwo::ontology {

struct WebSite {
    rdf::Iri iri;
    std::optional<std::string> title;   // webTitle
    std::optional<std::string> about;   // webAbout
    std::vector<rdf::Iri> owners;       // owner
    std::vector<rdf::Iri> scopes;       // hasScope
    std::vector<rdf::Iri> parts;        // hasPart

    bool operator==(const WebSite&) const = default;
};

struct PersonRec {
    rdf::Iri iri;
    std::optional<std::string> mbox;    // prsMbox
    std::vector<rdf::Iri> interests;    // interest
    std::vector<rdf::Iri> authored;     // inverse view of Author; not re-emitted

    bool operator==(const PersonRec&) const = default;
};

struct DomainRec {
    rdf::Iri iri;
    std::optional<std::string> description;  // domDescription
    std::vector<rdf::Iri> subdomains;        // hasSubDomain
    std::vector<rdf::Iri> documents;         // consistof

    bool operator==(const DomainRec&) const = default;
};

struct DocumentRec {
    rdf::Iri iri;
    std::optional<std::string> doc_uri;      // docURI
    std::optional<std::string> title;        // docTitle
    std::optional<std::string> doc_type;     // docType
    std::optional<std::string> description;  // docDescription
    std::optional<std::string> link;         // docLink
    std::optional<std::string> date;         // docDate lexical; validation owns calendar checks
    std::optional<std::string> publish;      // docPublish
    std::vector<rdf::Iri> creators;          // Creator
    std::vector<rdf::Iri> authors;           // Author
    std::vector<rdf::Iri> part_of;           // isPartOf

    bool operator==(const DocumentRec&) const = default;
};

struct PersonalWebModel {
    std::vector<WebSite> webs;
    std::vector<PersonRec> persons;
    std::vector<DomainRec> domains;
    std::vector<DocumentRec> documents;
    // Triples that were neither schema declarations nor representable
    // instance statements.
    std::size_t ignored_triples = 0;

    bool empty() const {
        return webs.empty() && persons.empty() && domains.empty() && documents.empty();
    }

    bool operator==(const PersonalWebModel&) const = default;
};

// Builds the typed view of `g` under `base`'s vocabulary. Individuals with an
// explicit class type register first, in type-triple order; untyped
// individuals reached through vocabulary properties are inferred from the
// property's declared domain or range and appended in usage order. Data
// properties keep the first value seen; references deduplicate, keeping
// order. Schema declaration triples are recognized and skipped; anything else
// unrepresentable increments ignored_triples. Throws ConflictingType when one
// individual carries two explicit class types.
PersonalWebModel extract_model(const rdf::Graph& g, const rdf::Iri& base);

// Rebuilds triples from a model: one block per record (type triple first,
// then fields in declaration order), web/person/domain/document blocks in
// model order. extract_model(build_graph(m, base), base) == m for consistent
// models. Throws DanglingReference when a reference has no target record, and
// std::invalid_argument when record IRIs collide.
rdf::Graph build_graph(const PersonalWebModel& m, const rdf::Iri& base, bool include_schema);

} // namespace pwo::ontology
