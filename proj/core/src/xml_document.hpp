#pragma once

// Minimal namespace-aware XML reader backing the RDF/XML front end. Internal
// to the library; not installed.

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pwo/errors.hpp"

namespace pwo::xml {

struct XmlAttribute {
    std::string prefix;  // "" when unprefixed
    std::string local;
    std::string ns;      // resolved namespace IRI; "" for unprefixed attributes
    std::string value;   // entity-expanded
    int line = 1;

    std::string qname() const { return prefix.empty() ? local : prefix + ":" + local; }
};

struct XmlText {
    std::string text;
    int line = 1;
};

struct XmlElement;
using XmlNode = std::variant<XmlText, XmlElement>;

struct XmlElement {
    std::string prefix;
    std::string local;
    std::string ns;
    std::vector<XmlAttribute> attributes;  // namespace declarations excluded
    std::vector<std::pair<std::string, std::string>> ns_decls;  // declared on this element
    std::vector<XmlNode> children;
    int line = 1;

    std::string qname() const { return prefix.empty() ? local : prefix + ":" + local; }
};

struct XmlWarning {
    int line = 1;
    std::string message;
};

struct XmlDocument {
    XmlElement root;
    std::vector<XmlWarning> warnings;
    std::map<std::string, std::string> entities;  // internal-subset declarations
};

// Parses one document. Throws pwo::XmlSyntaxError on malformed input.
//
// Supported: prolog, DOCTYPE internal subsets holding <!ENTITY name "value">
// declarations, comments, CDATA sections, processing instructions (kept as
// warnings), namespace declarations with lexical scoping, character
// references, and general entity references. Inside attribute values the
// truncated form `&name:local` (no semicolon) expands to the entity value
// followed by `local`, provided `name` is a declared entity; the `xsd` entity
// is predeclared to the XML Schema datatype namespace.
XmlDocument parse_xml(std::string_view text);

} // namespace pwo::xml
