#include "pwo/ontology/validation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "pwo/ontology/vocabulary.hpp"

namespace pwo::ontology {

namespace {

using rdf::Iri;
using rdf::Term;
using rdf::Triple;

std::string term_key(const Term& t) {
    return t.is_blank() ? "_:" + t.blank().label() : t.iri().value();
}

std::string local_name(const Iri& iri) {
    const std::string& v = iri.value();
    std::size_t cut = v.find_last_of("#/");
    return cut == std::string::npos ? v : v.substr(cut + 1);
}

std::string joined_locals(const std::set<std::string>& iris) {
    std::string out;
    for (const std::string& iri : iris) {
        if (!out.empty()) out += ", ";
        out += local_name(Iri(iri));
    }
    return out;
}

} // namespace

ValidationReport validate(const rdf::Graph& g, const Iri& base, bool strict) {
    Vocabulary v(base);
    std::vector<Finding> out;

    // Explicit class types per node; only the four model classes count.
    std::map<std::string, std::set<std::string>> types;
    for (const Triple& t : g.triples()) {
        if (t.predicate() != rdf::ns::rdf_type()) continue;
        if (t.subject().is_literal() || !t.object().is_iri()) continue;
        if (v.is_class(t.object().iri()))
            types[term_key(t.subject())].insert(t.object().iri().value());
    }
    auto types_of = [&types](const Term& node) -> const std::set<std::string>* {
        auto it = types.find(term_key(node));
        return it == types.end() ? nullptr : &it->second;
    };

    for (const Triple& t : g.triples()) {
        const PropertySpec* spec = v.property(t.predicate());
        if (!spec) continue;
        std::string subject = term_key(t.subject());

        if (const auto* st = types_of(t.subject());
            st && !st->count(spec->domain.value())) {
            out.push_back({Severity::Error, "domain-violation", subject,
                           spec->name + " declares domain " + local_name(spec->domain) +
                               "; subject is typed " + joined_locals(*st)});
        }

        if (spec->kind == PropertyKind::Object) {
            if (t.object().is_literal()) {
                out.push_back({Severity::Error, "range-violation", subject,
                               spec->name + " expects a resource object; found the literal \"" +
                                   t.object().literal().lexical() + "\""});
            } else if (const auto* ot = types_of(t.object());
                       ot && !ot->count(spec->range.value())) {
                out.push_back({Severity::Error, "range-violation", subject,
                               spec->name + " declares range " + local_name(spec->range) +
                                   "; object " + term_key(t.object()) + " is typed " +
                                   joined_locals(*ot)});
            }
        } else {
            if (!t.object().is_literal()) {
                out.push_back({Severity::Error, "range-violation", subject,
                               spec->name + " expects a literal value; found " +
                                   term_key(t.object())});
            } else if (spec->range == rdf::ns::xsd_date() &&
                       !rdf::is_valid_date_lexical(t.object().literal().lexical())) {
                out.push_back({Severity::Error, "malformed-date", subject,
                               spec->name + " value \"" + t.object().literal().lexical() +
                                   "\" is not a valid calendar date"});
            }
        }
    }

    // hasPart/isPartOf must close over each other.
    const Iri has_part = v.named("hasPart");
    const Iri is_part_of = v.named("isPartOf");
    Severity inverse_severity = strict ? Severity::Error : Severity::Warning;
    for (const Triple& t : g.triples()) {
        if (t.object().is_literal()) continue;
        if (t.predicate() == has_part &&
            !g.contains(Triple(t.object(), is_part_of, t.subject()))) {
            out.push_back({inverse_severity, "missing-inverse", term_key(t.subject()),
                           "hasPart of " + term_key(t.object()) +
                               " has no isPartOf triple back"});
        } else if (t.predicate() == is_part_of &&
                   !g.contains(Triple(t.object(), has_part, t.subject()))) {
            out.push_back({inverse_severity, "missing-inverse", term_key(t.subject()),
                           "isPartOf of " + term_key(t.object()) +
                               " has no hasPart triple back"});
        }
    }

    // hasSubDomain must stay acyclic; flag every node that reaches itself.
    const Iri has_sub_domain = v.named("hasSubDomain");
    std::map<std::string, std::vector<std::string>> edges;
    std::vector<std::string> nodes;  // first-appearance order
    for (const Triple& t : g.triples()) {
        if (t.predicate() != has_sub_domain || t.object().is_literal()) continue;
        std::string from = term_key(t.subject());
        if (!edges.count(from)) nodes.push_back(from);
        edges[from].push_back(term_key(t.object()));
    }
    for (const std::string& start : nodes) {
        std::set<std::string> seen;
        std::vector<std::string> stack = edges[start];
        bool cyclic = false;
        while (!stack.empty() && !cyclic) {
            std::string node = stack.back();
            stack.pop_back();
            if (node == start) {
                cyclic = true;
                break;
            }
            if (!seen.insert(node).second) continue;
            auto it = edges.find(node);
            if (it != edges.end())
                stack.insert(stack.end(), it->second.begin(), it->second.end());
        }
        if (cyclic)
            out.push_back({Severity::Error, "subdomain-cycle", start,
                           "domain reaches itself through hasSubDomain"});
    }

    // Structural expectations on typed individuals.
    for (const auto& [node, classes] : types) {
        Term subject = node.rfind("_:", 0) == 0 ? Term(rdf::BlankNode(node.substr(2)))
                                                : Term(Iri(node));
        if (classes.count(v.documents().value())) {
            if (g.match(subject, Term(v.named("docTitle")), std::nullopt).empty())
                out.push_back({Severity::Warning, "missing-doctitle", node,
                               "document has no docTitle"});
            if (g.match(subject, Term(v.named("docURI")), std::nullopt).empty())
                out.push_back({Severity::Warning, "missing-docuri", node,
                               "document has no docURI"});
        }
        if (classes.count(v.web().value())) {
            if (g.match(subject, Term(v.named("owner")), std::nullopt).empty())
                out.push_back({Severity::Warning, "missing-owner", node, "web has no owner"});
        }
    }

    std::stable_sort(out.begin(), out.end(), [](const Finding& a, const Finding& b) {
        return std::tie(a.subject, a.code, a.message) < std::tie(b.subject, b.code, b.message);
    });

    ValidationReport report;
    report.findings = std::move(out);
    return report;
}

} // namespace pwo::ontology
