#include "pwo/ontology/vocabulary.hpp"

namespace pwo::ontology {

namespace {

std::string namespace_of(const rdf::Iri& base) {
    const std::string& v = base.value();
    std::size_t hash = v.find('#');
    return (hash == std::string::npos ? v : v.substr(0, hash)) + "#";
}

} // namespace

Vocabulary::Vocabulary(const rdf::Iri& base) : base_(base), ns_(namespace_of(base)) {
    classes_ = {named("Web"), named("Person"), named("Domain"), named("Documents")};
    const rdf::Iri& web = classes_[0];
    const rdf::Iri& person = classes_[1];
    const rdf::Iri& domain = classes_[2];
    const rdf::Iri& documents = classes_[3];
    rdf::Iri xsd_string = rdf::ns::xsd_string();
    rdf::Iri xsd_date = rdf::ns::xsd_date();

    auto object = [&](std::string name, rdf::Iri dom, rdf::Iri rng,
                      std::optional<rdf::Iri> inverse = std::nullopt) {
        rdf::Iri iri = named(name);
        properties_.push_back({std::move(name), PropertyKind::Object, std::move(iri),
                               std::move(dom), std::move(rng), std::move(inverse), std::nullopt});
    };
    auto data = [&](std::string name, rdf::Iri dom, rdf::Iri rng,
                    std::optional<rdf::Literal> comment = std::nullopt) {
        rdf::Iri iri = named(name);
        properties_.push_back({std::move(name), PropertyKind::Data, std::move(iri),
                               std::move(dom), std::move(rng), std::nullopt, std::move(comment)});
    };

    // Web section
    object("owner", web, person);
    object("hasPart", web, documents, named("isPartOf"));
    object("hasScope", web, domain);
    data("webAbout", web, xsd_string);
    data("webTitle", web, xsd_string, rdf::Literal::tagged("null", "en"));
    // Person section
    object("interest", person, domain);
    object("Author", documents, person);
    data("prsMbox", person, xsd_string);
    // Domain section
    object("consistof", domain, documents);
    object("hasSubDomain", domain, domain);
    data("domDescription", domain, xsd_string);
    // Documents section
    data("docURI", documents, xsd_string);
    object("isPartOf", documents, web, named("hasPart"));
    object("Creator", documents, person);
    data("docDate", documents, xsd_date);
    data("docDescription", documents, xsd_string);
    data("docLink", documents, xsd_string);
    data("docPublish", documents, xsd_string);
    data("docTitle", documents, xsd_string);
    data("docType", documents, xsd_string);
}

bool Vocabulary::is_class(const rdf::Iri& iri) const {
    for (const rdf::Iri& c : classes_) {
        if (c == iri) return true;
    }
    return false;
}

const PropertySpec* Vocabulary::property(const rdf::Iri& iri) const {
    for (const PropertySpec& p : properties_) {
        if (p.iri == iri) return &p;
    }
    return nullptr;
}

const PropertySpec* Vocabulary::property_named(std::string_view local) const {
    for (const PropertySpec& p : properties_) {
        if (p.name == local) return &p;
    }
    return nullptr;
}

Vocabulary vocabulary_for(const rdf::Iri& base) { return Vocabulary(base); }

} // namespace pwo::ontology
