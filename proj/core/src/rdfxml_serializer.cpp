#include "pwo/rdfxml/serializer.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "pwo/rdf/term.hpp"

namespace pwo::rdfxml {

namespace {

using rdf::Graph;
using rdf::Iri;
using rdf::Literal;
using rdf::Term;
using rdf::Triple;

std::string escape_text(const std::string& in) {
    std::string out;
    out.reserve(in.size());
    for (char ch : in) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string escape_attribute(const std::string& in) {
    std::string out;
    out.reserve(in.size());
    for (char ch : in) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

bool is_ncname(std::string_view s) {
    if (s.empty()) return false;
    auto start = [](char ch) {
        return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || ch == '_';
    };
    auto rest = [&](char ch) {
        return start(ch) || (ch >= '0' && ch <= '9') || ch == '-' || ch == '.';
    };
    if (!start(s[0])) return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!rest(s[i])) return false;
    }
    return true;
}

// Splits an IRI into a namespace part and an NCName local part at the last
// '#', '/' or ':'. Returns false when no split yields a usable local name.
bool split_name(const std::string& iri, std::string& ns, std::string& local) {
    std::size_t cut = iri.find_last_of("#/:");
    if (cut == std::string::npos || cut + 1 >= iri.size()) return false;
    std::string_view tail(iri);
    tail.remove_prefix(cut + 1);
    if (!is_ncname(tail)) return false;
    ns = iri.substr(0, cut + 1);
    local = std::string(tail);
    return true;
}

class PrefixAllocator {
public:
    explicit PrefixAllocator(const rdf::PrefixMap& known) {
        assign(std::string(rdf::ns::rdf), "rdf");
        well_known_.emplace_back(rdf::ns::rdfs, "rdfs");
        well_known_.emplace_back(rdf::ns::owl, "owl");
        well_known_.emplace_back(rdf::ns::xsd, "xsd");
        for (const auto& [prefix, iri] : known.entries()) {
            if (!prefix.empty()) preferred_.emplace_back(iri.value(), prefix);
        }
    }

    // Returns `prefix:local` for a name IRI, allocating a prefix on first use.
    std::string qname(const std::string& iri) {
        std::string ns, local;
        if (!split_name(iri, ns, local))
            throw std::invalid_argument(
                "IRI cannot be written as an XML qualified name: " + iri);
        auto it = by_ns_.find(ns);
        if (it != by_ns_.end()) return it->second + ":" + local;
        return assign(ns, pick_prefix(ns)) + ":" + local;
    }

    // Declaration list in allocation order.
    const std::vector<std::pair<std::string, std::string>>& declarations() const {
        return decls_;
    }

private:
    std::string pick_prefix(const std::string& ns) {
        for (const auto& [known_ns, prefix] : well_known_) {
            if (ns == known_ns && !taken_.count(prefix)) return prefix;
        }
        for (const auto& [known_ns, prefix] : preferred_) {
            if (ns == known_ns && !taken_.count(prefix) && is_ncname(prefix)) return prefix;
        }
        return "ns" + std::to_string(++counter_);
    }

    std::string assign(const std::string& ns, const std::string& prefix) {
        by_ns_[ns] = prefix;
        taken_.insert(prefix);
        decls_.emplace_back(prefix, ns);
        return prefix;
    }

    std::map<std::string, std::string> by_ns_;
    std::set<std::string> taken_;
    std::vector<std::pair<std::string, std::string>> decls_;
    std::vector<std::pair<std::string, std::string>> well_known_;
    std::vector<std::pair<std::string, std::string>> preferred_;
    int counter_ = 0;
};

struct Writer {
    const Graph& graph;
    PrefixAllocator prefixes;
    std::map<std::string, std::vector<const Triple*>> by_subject_key;
    std::map<std::string, int> blank_object_uses;
    std::set<std::string> emitted_blanks;
    std::set<std::string> in_progress_blanks;
    std::string body;
    std::size_t triples_written = 0;

    explicit Writer(const Graph& g) : graph(g), prefixes(g.prefixes()) {}

    static std::string subject_key(const Term& t) {
        return t.is_blank() ? "_:" + t.blank().label() : t.iri().value();
    }

    void index() {
        for (const Triple& t : graph.triples()) {
            by_subject_key[subject_key(t.subject())].push_back(&t);
            if (t.object().is_blank()) ++blank_object_uses[t.object().blank().label()];
        }
        for (const auto& [label, uses] : blank_object_uses) {
            if (uses > 1)
                throw std::invalid_argument(
                    "blank node _:" + label +
                    " is the object of more than one triple; not expressible without rdf:nodeID");
        }
    }

    // Chooses the element name for a subject: the first rdf:type triple whose
    // object is an IRI expressible as a QName. Returns nullptr to use
    // rdf:Description.
    const Triple* pick_type(const std::vector<const Triple*>& group) {
        for (const Triple* t : group) {
            if (t->predicate() == rdf::ns::rdf_type() && t->object().is_iri()) {
                std::string ns, local;
                if (split_name(t->object().iri().value(), ns, local)) return t;
            }
        }
        return nullptr;
    }

    void write_literal_property(const std::string& pname, const Literal& lit, int depth) {
        std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
        body += indent + "<" + pname;
        if (lit.datatype())
            body += " rdf:datatype=\"" + escape_attribute(lit.datatype()->value()) + "\"";
        if (lit.lang()) body += " xml:lang=\"" + escape_attribute(*lit.lang()) + "\"";
        body += ">" + escape_text(lit.lexical()) + "</" + pname + ">\n";
    }

    void write_node(const Term& subject, int depth) {
        if (subject.is_blank()) {
            const std::string& label = subject.blank().label();
            if (!in_progress_blanks.insert(label).second)
                throw std::invalid_argument("blank node _:" + label +
                                            " participates in a cycle; not expressible");
            emitted_blanks.insert(label);
        }
        std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
        auto group_it = by_subject_key.find(subject_key(subject));
        static const std::vector<const Triple*> kEmpty;
        const auto& group = group_it != by_subject_key.end() ? group_it->second : kEmpty;

        const Triple* type_triple = pick_type(group);
        std::string element = type_triple
                                  ? prefixes.qname(type_triple->object().iri().value())
                                  : "rdf:Description";
        body += indent + "<" + element;
        if (subject.is_iri())
            body += " rdf:about=\"" + escape_attribute(subject.iri().value()) + "\"";
        if (group.empty() || (group.size() == 1 && type_triple)) {
            body += "/>\n";
            if (type_triple) ++triples_written;
            if (subject.is_blank()) in_progress_blanks.erase(subject.blank().label());
            return;
        }
        body += ">\n";
        for (const Triple* t : group) {
            if (t == type_triple) {
                ++triples_written;
                continue;
            }
            write_property(*t, depth + 1);
        }
        body += indent + "</" + element + ">\n";
        if (subject.is_blank()) in_progress_blanks.erase(subject.blank().label());
    }

    void write_property(const Triple& t, int depth) {
        std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
        std::string pname = prefixes.qname(t.predicate().value());
        const Term& o = t.object();
        if (o.is_literal()) {
            write_literal_property(pname, o.literal(), depth);
        } else if (o.is_iri()) {
            body += indent + "<" + pname + " rdf:resource=\"" +
                    escape_attribute(o.iri().value()) + "\"/>\n";
        } else {
            body += indent + "<" + pname + ">\n";
            write_node(o, depth + 1);
            body += indent + "</" + pname + ">\n";
        }
        ++triples_written;
    }

    std::string run() {
        index();
        std::set<std::string> started;
        for (const Triple& t : graph.triples()) {
            const Term& s = t.subject();
            if (s.is_blank() && blank_object_uses.count(s.blank().label())) continue;
            if (!started.insert(subject_key(s)).second) continue;
            write_node(s, 1);
        }
        // A blank that is an object but has no triples of its own is written
        // inline by write_property; anything still unwritten is unreachable.
        if (triples_written != graph.size())
            throw std::invalid_argument(
                "graph contains a blank-node cycle not expressible in this subset");

        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<rdf:RDF";
        for (const auto& [prefix, ns] : prefixes.declarations())
            out += "\n    xmlns:" + prefix + "=\"" + escape_attribute(ns) + "\"";
        if (body.empty()) {
            out += "/>\n";
        } else {
            out += ">\n" + body + "</rdf:RDF>\n";
        }
        return out;
    }
};

} // namespace

std::string serialize_rdfxml(const Graph& g, const Iri& base) {
    (void)base;
    Writer writer(g);
    return writer.run();
}

std::string serialize_ntriples(const Graph& g) {
    std::string out;
    for (const Triple& t : g.triples()) {
        out += rdf::to_ntriples(t.subject());
        out += ' ';
        out += rdf::to_ntriples(Term(t.predicate()));
        out += ' ';
        out += rdf::to_ntriples(t.object());
        out += " .\n";
    }
    return out;
}

} // namespace pwo::rdfxml
