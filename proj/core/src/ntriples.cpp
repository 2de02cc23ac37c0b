#include "pwo/rdf/term.hpp"

namespace pwo::rdf {

namespace {

std::string escape_literal(const std::string& in) {
    std::string out;
    out.reserve(in.size());
    for (char ch : in) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    return out;
}

} // namespace

std::string to_ntriples(const Term& term) {
    if (term.is_iri()) return "<" + term.iri().value() + ">";
    if (term.is_blank()) return "_:" + term.blank().label();
    const Literal& lit = term.literal();
    std::string out = "\"" + escape_literal(lit.lexical()) + "\"";
    if (lit.datatype()) out += "^^<" + lit.datatype()->value() + ">";
    if (lit.lang()) out += "@" + *lit.lang();
    return out;
}

} // namespace pwo::rdf
