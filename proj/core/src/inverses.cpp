#include "pwo/ontology/inverses.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace pwo::ontology {

namespace {

using rdf::Iri;
using rdf::Triple;

// Splits a fragment IRI at '#'. Returns false when there is no fragment.
bool fragment_split(const std::string& iri, std::string& ns, std::string& local) {
    std::size_t hash = iri.find('#');
    if (hash == std::string::npos || hash + 1 >= iri.size()) return false;
    ns = iri.substr(0, hash + 1);
    local = iri.substr(hash + 1);
    return true;
}

} // namespace

rdf::Graph materialize_inverses(const rdf::Graph& g) {
    std::map<std::string, std::vector<Iri>> partners;
    auto note = [&partners](const Iri& a, const Iri& b) {
        auto& list = partners[a.value()];
        if (std::find(list.begin(), list.end(), b) == list.end()) list.push_back(b);
    };

    for (const Triple& t : g.triples()) {
        std::string ns, local;
        if (fragment_split(t.predicate().value(), ns, local)) {
            if (local == "hasPart") {
                note(t.predicate(), Iri(ns + "isPartOf"));
                note(Iri(ns + "isPartOf"), t.predicate());
            } else if (local == "isPartOf") {
                note(t.predicate(), Iri(ns + "hasPart"));
                note(Iri(ns + "hasPart"), t.predicate());
            }
        }
        if (t.predicate() == rdf::ns::owl_inverse_of() && t.subject().is_iri() &&
            t.object().is_iri()) {
            note(t.subject().iri(), t.object().iri());
            note(t.object().iri(), t.subject().iri());
        }
    }

    rdf::Graph out = g;
    for (const Triple& t : g.triples()) {
        auto it = partners.find(t.predicate().value());
        if (it == partners.end()) continue;
        if (t.object().is_literal()) continue;
        for (const Iri& q : it->second)
            out.insert(Triple(t.object(), q, t.subject()));
    }
    return out;
}

} // namespace pwo::ontology
