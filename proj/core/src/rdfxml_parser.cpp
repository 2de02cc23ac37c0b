#include "pwo/rdfxml/parser.hpp"

#include <algorithm>
#include <set>

#include "pwo/rdf/resolve.hpp"
#include "pwo/rdf/term.hpp"
#include "xml_document.hpp"

namespace pwo::rdfxml {

namespace {

using rdf::Iri;
using rdf::Literal;
using rdf::Term;
using rdf::Triple;
using xml::XmlAttribute;
using xml::XmlElement;
using xml::XmlNode;
using xml::XmlText;

bool in_rdf_ns(const std::string& ns) { return ns == rdf::ns::rdf; }
bool in_xml_ns(const XmlAttribute& a) {
    return a.ns == "http://www.w3.org/XML/1998/namespace" || a.prefix == "xml";
}

bool is_whitespace(std::string_view text) {
    return text.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

bool is_container_membership(const std::string& local) {
    if (local.size() < 2 || local[0] != '_') return false;
    return std::all_of(local.begin() + 1, local.end(),
                       [](char ch) { return ch >= '0' && ch <= '9'; });
}

struct Ctx {
    const Iri& base;
    rdf::Graph graph;
    std::vector<ParseDiagnostics::Warning> warnings;
    std::set<std::string> seen_ids;
    int blank_counter = 0;

    Term fresh_blank() { return Term(rdf::BlankNode("b" + std::to_string(++blank_counter))); }
};

Iri element_iri(const XmlElement& el) {
    if (el.ns.empty())
        throw XmlSyntaxError(el.line, "element '" + el.qname() + "' has no namespace");
    return Iri(el.ns + el.local);
}

// Updates `lang` from xml:lang if present; xml:lang="" clears it.
void apply_lang(const XmlElement& el, std::string& lang) {
    for (const XmlAttribute& a : el.attributes) {
        if (in_xml_ns(a) && a.local == "lang") lang = a.value;
    }
}

void reject_xml_base(const XmlElement& el) {
    for (const XmlAttribute& a : el.attributes) {
        if (in_xml_ns(a) && a.local == "base")
            throw UnsupportedConstruct(a.line, "xml:base");
    }
}

void finish_node(const XmlElement& el, const Term& subject, std::string lang, Ctx& ctx);

// Computes the subject term a node element denotes, validating its
// attributes. Emission of its triples is deferred to finish_node so callers
// can slot an arc triple in between.
Term begin_node(const XmlElement& el, Ctx& ctx) {
    if (in_rdf_ns(el.ns)) {
        if (el.local == "Bag" || el.local == "Seq" || el.local == "Alt" || el.local == "li" ||
            is_container_membership(el.local))
            throw UnsupportedConstruct(el.line, "rdf:" + el.local + " (containers)");
        if (el.local == "RDF")
            throw XmlSyntaxError(el.line, "nested rdf:RDF element");
    }
    reject_xml_base(el);

    const XmlAttribute* id_attr = nullptr;
    const XmlAttribute* about_attr = nullptr;
    for (const XmlAttribute& a : el.attributes) {
        if (in_xml_ns(a)) {
            if (a.local == "lang" || a.local == "space") continue;
            throw UnsupportedConstruct(a.line, "xml:" + a.local);
        }
        if (in_rdf_ns(a.ns)) {
            if (a.local == "ID") { id_attr = &a; continue; }
            if (a.local == "about") { about_attr = &a; continue; }
            if (a.local == "nodeID") throw UnsupportedConstruct(a.line, "rdf:nodeID");
            if (a.local == "parseType")
                throw UnsupportedConstruct(a.line, "rdf:parseType=\"" + a.value + "\"");
        }
        throw UnsupportedConstruct(a.line, "property attribute '" + a.qname() + "'");
    }
    if (id_attr && about_attr)
        throw XmlSyntaxError(el.line, "rdf:ID and rdf:about are mutually exclusive");
    if (id_attr) {
        Iri resolved = rdf::resolve_id(ctx.base, id_attr->value);
        if (!ctx.seen_ids.insert(resolved.value()).second)
            ctx.warnings.push_back({id_attr->line,
                                    "duplicate rdf:ID '" + id_attr->value + "'"});
        return Term(resolved);
    }
    if (about_attr) return Term(rdf::resolve_reference(ctx.base, about_attr->value));
    return ctx.fresh_blank();
}

void parse_property(const XmlElement& el, const Term& subject, std::string lang, Ctx& ctx) {
    if (in_rdf_ns(el.ns)) {
        if (el.local == "li" || is_container_membership(el.local))
            throw UnsupportedConstruct(el.line, "rdf:" + el.local + " (containers)");
        if (el.local == "Description")
            throw XmlSyntaxError(el.line, "rdf:Description in a property position");
    }
    reject_xml_base(el);
    apply_lang(el, lang);
    Iri predicate = element_iri(el);

    const XmlAttribute* resource_attr = nullptr;
    const XmlAttribute* datatype_attr = nullptr;
    for (const XmlAttribute& a : el.attributes) {
        if (in_xml_ns(a)) {
            if (a.local == "lang" || a.local == "space") continue;
            throw UnsupportedConstruct(a.line, "xml:" + a.local);
        }
        if (in_rdf_ns(a.ns)) {
            if (a.local == "resource") { resource_attr = &a; continue; }
            if (a.local == "datatype") { datatype_attr = &a; continue; }
            if (a.local == "parseType")
                throw UnsupportedConstruct(a.line, "rdf:parseType=\"" + a.value + "\"");
            if (a.local == "ID")
                throw UnsupportedConstruct(a.line, "rdf:ID on a property element (reification)");
            if (a.local == "nodeID") throw UnsupportedConstruct(a.line, "rdf:nodeID");
        }
        throw UnsupportedConstruct(a.line, "property attribute '" + a.qname() + "'");
    }

    std::vector<const XmlElement*> child_elements;
    std::string text;
    bool has_text = false;
    for (const XmlNode& node : el.children) {
        if (const auto* t = std::get_if<XmlText>(&node)) {
            text += t->text;
            has_text = true;
        } else {
            child_elements.push_back(&std::get<XmlElement>(node));
        }
    }
    if (!child_elements.empty() && has_text && !is_whitespace(text))
        throw XmlSyntaxError(el.line, "mixed text and element content in property element");

    if (resource_attr) {
        if (!child_elements.empty() || (has_text && !is_whitespace(text)))
            throw XmlSyntaxError(el.line, "property element with rdf:resource must be empty");
        if (datatype_attr)
            throw XmlSyntaxError(el.line, "rdf:resource and rdf:datatype are mutually exclusive");
        Term object(rdf::resolve_reference(ctx.base, resource_attr->value));
        ctx.graph.insert(Triple(subject, predicate, object));
        return;
    }

    if (!child_elements.empty()) {
        if (child_elements.size() > 1)
            throw XmlSyntaxError(el.line, "more than one node element inside a property element");
        if (datatype_attr)
            throw XmlSyntaxError(datatype_attr->line,
                                 "rdf:datatype on a property element with node content");
        const XmlElement& node_el = *child_elements.front();
        Term object = begin_node(node_el, ctx);
        ctx.graph.insert(Triple(subject, predicate, object));
        finish_node(node_el, object, lang, ctx);
        return;
    }

    Literal literal = [&] {
        if (datatype_attr)
            return Literal::typed(text, rdf::resolve_reference(ctx.base, datatype_attr->value));
        if (!lang.empty()) return Literal::tagged(text, lang);
        return Literal::plain(text);
    }();
    ctx.graph.insert(Triple(subject, predicate, Term(std::move(literal))));
}

void finish_node(const XmlElement& el, const Term& subject, std::string lang, Ctx& ctx) {
    apply_lang(el, lang);
    bool typed = !(in_rdf_ns(el.ns) && el.local == "Description");
    if (typed)
        ctx.graph.insert(Triple(subject, rdf::ns::rdf_type(), Term(element_iri(el))));

    for (const XmlNode& node : el.children) {
        if (const auto* t = std::get_if<XmlText>(&node)) {
            if (!is_whitespace(t->text))
                throw XmlSyntaxError(t->line, "text content between property elements");
            continue;
        }
        parse_property(std::get<XmlElement>(node), subject, lang, ctx);
    }
}

} // namespace

ParseResult parse_rdfxml(std::string_view document, const rdf::Iri& base) {
    xml::XmlDocument doc = xml::parse_xml(document);

    Ctx ctx{base, {}, {}, {}, 0};
    for (const xml::XmlWarning& w : doc.warnings) ctx.warnings.push_back({w.line, w.message});

    const XmlElement& root = doc.root;
    if (!(in_rdf_ns(root.ns) && root.local == "RDF"))
        throw XmlSyntaxError(root.line, "expected an rdf:RDF root element");

    std::string lang;
    reject_xml_base(root);
    for (const XmlAttribute& a : root.attributes) {
        if (in_xml_ns(a) && (a.local == "lang" || a.local == "space")) continue;
        throw XmlSyntaxError(a.line, "unexpected attribute '" + a.qname() + "' on rdf:RDF");
    }
    apply_lang(root, lang);

    for (const auto& [prefix, ns_iri] : root.ns_decls) {
        if (prefix.empty()) continue;
        try {
            ctx.graph.prefixes().add(prefix, Iri(ns_iri));
        } catch (const MalformedIri&) {
            // Prefix bookkeeping is best-effort; an odd xmlns value only
            // affects later compaction, not parsing.
        }
    }

    for (const XmlNode& node : root.children) {
        if (const auto* t = std::get_if<XmlText>(&node)) {
            if (!is_whitespace(t->text))
                throw XmlSyntaxError(t->line, "text content inside rdf:RDF");
            continue;
        }
        const XmlElement& el = std::get<XmlElement>(node);
        Term subject = begin_node(el, ctx);
        finish_node(el, subject, lang, ctx);
    }

    std::stable_sort(ctx.warnings.begin(), ctx.warnings.end(),
                     [](const auto& a, const auto& b) { return a.line < b.line; });

    ParseResult result;
    result.graph = std::move(ctx.graph);
    result.diagnostics.warnings = std::move(ctx.warnings);
    return result;
}

} // namespace pwo::rdfxml
