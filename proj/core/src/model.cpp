#include "pwo/ontology/model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pwo::ontology {

namespace {

using rdf::Iri;
using rdf::Literal;
using rdf::Term;
using rdf::Triple;

enum class Kind { Web, Person, Domain, Documents };

std::optional<Kind> kind_of_class(const Vocabulary& v, const Iri& iri) {
    if (iri == v.web()) return Kind::Web;
    if (iri == v.person()) return Kind::Person;
    if (iri == v.domain()) return Kind::Domain;
    if (iri == v.documents()) return Kind::Documents;
    return std::nullopt;
}

void push_unique(std::vector<Iri>& refs, const Iri& iri) {
    if (std::find(refs.begin(), refs.end(), iri) == refs.end()) refs.push_back(iri);
}

struct Extractor {
    const Vocabulary& v;
    PersonalWebModel m;
    std::map<std::string, std::pair<Kind, std::size_t>> slots;

    bool is_schema_subject(const Iri& iri) const {
        return v.is_class(iri) || v.property(iri) != nullptr;
    }

    std::pair<Kind, std::size_t>& create(const Iri& iri, Kind kind) {
        std::size_t index = 0;
        switch (kind) {
            case Kind::Web: index = m.webs.size(); m.webs.push_back({iri, {}, {}, {}, {}, {}}); break;
            case Kind::Person: index = m.persons.size(); m.persons.push_back({iri, {}, {}, {}}); break;
            case Kind::Domain: index = m.domains.size(); m.domains.push_back({iri, {}, {}, {}}); break;
            case Kind::Documents:
                index = m.documents.size();
                m.documents.push_back({iri, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}});
                break;
        }
        return slots[iri.value()] = {kind, index};
    }

    // Returns the record slot for `iri`, creating it with `kind` when new.
    // Returns nullptr when the individual already exists as another kind.
    std::pair<Kind, std::size_t>* ensure(const Iri& iri, Kind kind) {
        auto it = slots.find(iri.value());
        if (it != slots.end()) return it->second.first == kind ? &it->second : nullptr;
        return &create(iri, kind);
    }

    WebSite& web_at(std::size_t i) { return m.webs[i]; }
    PersonRec& person_at(std::size_t i) { return m.persons[i]; }
    DomainRec& domain_at(std::size_t i) { return m.domains[i]; }
    DocumentRec& document_at(std::size_t i) { return m.documents[i]; }

    // First value wins; a second value makes the triple unrepresentable.
    static bool set_once(std::optional<std::string>& field, const std::string& value) {
        if (field) return false;
        field = value;
        return true;
    }

    bool apply_data(const PropertySpec& spec, Kind kind, std::size_t index,
                    const std::string& value) {
        const std::string& n = spec.name;
        switch (kind) {
            case Kind::Web: {
                WebSite& w = web_at(index);
                if (n == "webTitle") return set_once(w.title, value);
                if (n == "webAbout") return set_once(w.about, value);
                return false;
            }
            case Kind::Person: {
                PersonRec& p = person_at(index);
                if (n == "prsMbox") return set_once(p.mbox, value);
                return false;
            }
            case Kind::Domain: {
                DomainRec& d = domain_at(index);
                if (n == "domDescription") return set_once(d.description, value);
                return false;
            }
            case Kind::Documents: {
                DocumentRec& d = document_at(index);
                if (n == "docURI") return set_once(d.doc_uri, value);
                if (n == "docTitle") return set_once(d.title, value);
                if (n == "docType") return set_once(d.doc_type, value);
                if (n == "docDescription") return set_once(d.description, value);
                if (n == "docLink") return set_once(d.link, value);
                if (n == "docDate") return set_once(d.date, value);
                if (n == "docPublish") return set_once(d.publish, value);
                return false;
            }
        }
        return false;
    }

    bool apply_reference(const PropertySpec& spec, std::size_t subject_index,
                         const Iri& subject, const Iri& object) {
        const std::string& n = spec.name;
        if (n == "owner") { push_unique(web_at(subject_index).owners, object); return true; }
        if (n == "hasScope") { push_unique(web_at(subject_index).scopes, object); return true; }
        if (n == "hasPart") { push_unique(web_at(subject_index).parts, object); return true; }
        if (n == "interest") { push_unique(person_at(subject_index).interests, object); return true; }
        if (n == "hasSubDomain") { push_unique(domain_at(subject_index).subdomains, object); return true; }
        if (n == "consistof") { push_unique(domain_at(subject_index).documents, object); return true; }
        if (n == "Creator") { push_unique(document_at(subject_index).creators, object); return true; }
        if (n == "isPartOf") { push_unique(document_at(subject_index).part_of, object); return true; }
        if (n == "Author") {
            push_unique(document_at(subject_index).authors, object);
            auto it = slots.find(object.value());
            push_unique(person_at(it->second.second).authored, subject);
            return true;
        }
        return false;
    }
};

} // namespace

PersonalWebModel extract_model(const rdf::Graph& g, const Iri& base) {
    Vocabulary v(base);
    Extractor ex{v, {}, {}};

    // Explicit class types register first, in type-triple order.
    for (const Triple& t : g.triples()) {
        if (t.predicate() != rdf::ns::rdf_type()) continue;
        if (!t.subject().is_iri() || !t.object().is_iri()) continue;
        std::optional<Kind> kind = kind_of_class(v, t.object().iri());
        if (!kind) continue;
        const Iri& subject = t.subject().iri();
        auto it = ex.slots.find(subject.value());
        if (it != ex.slots.end()) {
            if (it->second.first != *kind) throw ConflictingType(subject.value());
            continue;
        }
        ex.create(subject, *kind);
    }

    for (const Triple& t : g.triples()) {
        if (t.predicate() == rdf::ns::rdf_type()) {
            if (t.subject().is_iri() && t.object().is_iri() &&
                kind_of_class(v, t.object().iri()))
                continue;  // consumed above
            if (t.subject().is_iri() && ex.is_schema_subject(t.subject().iri())) continue;
            ++ex.m.ignored_triples;
            continue;
        }
        if (t.subject().is_iri() && ex.is_schema_subject(t.subject().iri())) continue;

        const PropertySpec* spec = v.property(t.predicate());
        if (!spec || !t.subject().is_iri()) {
            ++ex.m.ignored_triples;
            continue;
        }
        Kind subject_kind = *kind_of_class(v, spec->domain);
        auto* subject_slot = ex.ensure(t.subject().iri(), subject_kind);
        if (!subject_slot) {
            ++ex.m.ignored_triples;
            continue;
        }
        std::size_t subject_index = subject_slot->second;

        if (spec->kind == PropertyKind::Data) {
            if (!t.object().is_literal()) {
                ++ex.m.ignored_triples;
                continue;
            }
            if (!ex.apply_data(*spec, subject_kind, subject_index,
                               t.object().literal().lexical()))
                ++ex.m.ignored_triples;
        } else {
            if (!t.object().is_iri()) {
                ++ex.m.ignored_triples;
                continue;
            }
            Kind object_kind = *kind_of_class(v, spec->range);
            if (!ex.ensure(t.object().iri(), object_kind)) {
                ++ex.m.ignored_triples;
                continue;
            }
            if (!ex.apply_reference(*spec, subject_index, t.subject().iri(), t.object().iri()))
                ++ex.m.ignored_triples;
        }
    }
    return std::move(ex.m);
}

rdf::Graph build_graph(const PersonalWebModel& m, const Iri& base, bool include_schema) {
    Vocabulary v(base);
    rdf::Graph g = include_schema ? emit_schema(base) : rdf::Graph();
    if (!include_schema) {
        g.prefixes().add("rdf", Iri(std::string(rdf::ns::rdf)));
        g.prefixes().add("pw", Iri(v.ns()));
    }

    std::map<std::string, Kind> kinds;
    auto declare = [&kinds](const Iri& iri, Kind k) {
        if (!kinds.emplace(iri.value(), k).second)
            throw std::invalid_argument("duplicate individual IRI in model: " + iri.value());
    };
    for (const WebSite& w : m.webs) declare(w.iri, Kind::Web);
    for (const PersonRec& p : m.persons) declare(p.iri, Kind::Person);
    for (const DomainRec& d : m.domains) declare(d.iri, Kind::Domain);
    for (const DocumentRec& d : m.documents) declare(d.iri, Kind::Documents);

    auto require = [&kinds](const Iri& ref, Kind k) {
        auto it = kinds.find(ref.value());
        if (it == kinds.end() || it->second != k) throw DanglingReference(ref.value());
    };
    auto emit = [&g](const Iri& s, const Iri& p, Term o) {
        g.insert(Triple(Term(s), p, std::move(o)));
    };
    auto emit_text = [&](const Iri& s, std::string_view prop,
                         const std::optional<std::string>& value) {
        if (value) emit(s, v.named(prop), Term(Literal::plain(*value)));
    };
    auto emit_refs = [&](const Iri& s, std::string_view prop,
                         const std::vector<Iri>& refs, Kind expected) {
        for (const Iri& r : refs) {
            require(r, expected);
            emit(s, v.named(prop), Term(r));
        }
    };

    for (const WebSite& w : m.webs) {
        emit(w.iri, rdf::ns::rdf_type(), Term(v.web()));
        emit_text(w.iri, "webTitle", w.title);
        emit_text(w.iri, "webAbout", w.about);
        emit_refs(w.iri, "owner", w.owners, Kind::Person);
        emit_refs(w.iri, "hasScope", w.scopes, Kind::Domain);
        emit_refs(w.iri, "hasPart", w.parts, Kind::Documents);
    }
    for (const PersonRec& p : m.persons) {
        emit(p.iri, rdf::ns::rdf_type(), Term(v.person()));
        emit_text(p.iri, "prsMbox", p.mbox);
        emit_refs(p.iri, "interest", p.interests, Kind::Domain);
        // authored mirrors Author triples emitted from documents; the
        // references are still checked so dangling ones surface.
        for (const Iri& doc : p.authored) require(doc, Kind::Documents);
    }
    for (const DomainRec& d : m.domains) {
        emit(d.iri, rdf::ns::rdf_type(), Term(v.domain()));
        emit_text(d.iri, "domDescription", d.description);
        emit_refs(d.iri, "hasSubDomain", d.subdomains, Kind::Domain);
        emit_refs(d.iri, "consistof", d.documents, Kind::Documents);
    }
    for (const DocumentRec& d : m.documents) {
        emit(d.iri, rdf::ns::rdf_type(), Term(v.documents()));
        emit_text(d.iri, "docURI", d.doc_uri);
        emit_text(d.iri, "docTitle", d.title);
        emit_text(d.iri, "docType", d.doc_type);
        emit_text(d.iri, "docDescription", d.description);
        emit_text(d.iri, "docLink", d.link);
        if (d.date)
            emit(d.iri, v.named("docDate"),
                 Term(Literal::typed(*d.date, rdf::ns::xsd_date())));
        emit_text(d.iri, "docPublish", d.publish);
        emit_refs(d.iri, "Creator", d.creators, Kind::Person);
        emit_refs(d.iri, "Author", d.authors, Kind::Person);
        emit_refs(d.iri, "isPartOf", d.part_of, Kind::Web);
    }
    return g;
}

} // namespace pwo::ontology
