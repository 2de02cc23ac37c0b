#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pwo/rdf/graph.hpp"

namespace pwo::ontology {

enum class PropertyKind { Object, Data };

struct PropertySpec {
    std::string name;  // local name within the vocabulary namespace
    PropertyKind kind = PropertyKind::Object;
    rdf::Iri iri;
    rdf::Iri domain;                   // class IRI
    rdf::Iri range;                    // class IRI or datatype IRI
    std::optional<rdf::Iri> inverse;   // declared owl:inverseOf partner
    std::optional<rdf::Literal> comment;
};

// The fixed personal-web vocabulary instantiated under one namespace base:
// four classes (Web, Person, Domain, Documents) and twenty properties, each
// with exactly one declared domain and range.
class Vocabulary {
public:
    explicit Vocabulary(const rdf::Iri& base);

    const rdf::Iri& base() const noexcept { return base_; }
    const std::string& ns() const noexcept { return ns_; }

    const rdf::Iri& web() const noexcept { return classes_[0]; }
    const rdf::Iri& person() const noexcept { return classes_[1]; }
    const rdf::Iri& domain() const noexcept { return classes_[2]; }
    const rdf::Iri& documents() const noexcept { return classes_[3]; }

    // Declaration order: Web, Person, Domain, Documents.
    const std::vector<rdf::Iri>& classes() const noexcept { return classes_; }
    // Declaration order across the four class sections.
    const std::vector<PropertySpec>& properties() const noexcept { return properties_; }

    bool is_class(const rdf::Iri& iri) const;
    const PropertySpec* property(const rdf::Iri& iri) const;
    const PropertySpec* property_named(std::string_view local) const;

    rdf::Iri named(std::string_view local) const { return rdf::Iri(ns_ + std::string(local)); }

private:
    rdf::Iri base_;
    std::string ns_;  // base with any fragment stripped, plus '#'
    std::vector<rdf::Iri> classes_;
    std::vector<PropertySpec> properties_;
};

Vocabulary vocabulary_for(const rdf::Iri& base);

// The complete schema as triples, in declaration order: per class section,
// the class type triple, then each property's type, domain, optional
// inverseOf, optional comment, and range triples.
rdf::Graph emit_schema(const rdf::Iri& base);

} // namespace pwo::ontology
