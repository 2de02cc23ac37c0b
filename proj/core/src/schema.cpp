#include "pwo/ontology/vocabulary.hpp"

namespace pwo::ontology {

namespace {

// First property index of each class section, in class order, plus the end.
constexpr std::size_t kSection[] = {0, 5, 8, 11, 20};

} // namespace

rdf::Graph emit_schema(const rdf::Iri& base) {
    Vocabulary v(base);
    rdf::Graph g;
    g.prefixes().add("rdf", rdf::Iri(std::string(rdf::ns::rdf)));
    g.prefixes().add("rdfs", rdf::Iri(std::string(rdf::ns::rdfs)));
    g.prefixes().add("owl", rdf::Iri(std::string(rdf::ns::owl)));
    g.prefixes().add("xsd", rdf::Iri(std::string(rdf::ns::xsd)));
    g.prefixes().add("pw", rdf::Iri(v.ns()));

    using rdf::Term;
    using rdf::Triple;
    for (std::size_t section = 0; section < 4; ++section) {
        g.insert(Triple(Term(v.classes()[section]), rdf::ns::rdf_type(),
                        Term(rdf::ns::owl_class())));
        for (std::size_t i = kSection[section]; i < kSection[section + 1]; ++i) {
            const PropertySpec& p = v.properties()[i];
            const rdf::Iri& kind = p.kind == PropertyKind::Object
                                       ? rdf::ns::owl_object_property()
                                       : rdf::ns::owl_datatype_property();
            g.insert(Triple(Term(p.iri), rdf::ns::rdf_type(), Term(kind)));
            g.insert(Triple(Term(p.iri), rdf::ns::rdfs_domain(), Term(p.domain)));
            if (p.inverse)
                g.insert(Triple(Term(p.iri), rdf::ns::owl_inverse_of(), Term(*p.inverse)));
            if (p.comment)
                g.insert(Triple(Term(p.iri), rdf::ns::rdfs_comment(), Term(*p.comment)));
            g.insert(Triple(Term(p.iri), rdf::ns::rdfs_range(), Term(p.range)));
        }
    }
    return g;
}

} // namespace pwo::ontology
