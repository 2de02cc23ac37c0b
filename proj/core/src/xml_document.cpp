#include "xml_document.hpp"

#include <cctype>

#include "pwo/rdf/term.hpp"

namespace pwo::xml {

namespace {

constexpr std::string_view kXmlNs = "http://www.w3.org/XML/1998/namespace";

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;

    bool eof() const { return pos >= text.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos + ahead < text.size() ? text[pos + ahead] : '\0';
    }
    bool starts_with(std::string_view s) const {
        return text.compare(pos, s.size(), s) == 0;
    }
    void advance(std::size_t n = 1) {
        for (std::size_t i = 0; i < n && pos < text.size(); ++i, ++pos) {
            if (text[pos] == '\n') ++line;
        }
    }
};

[[noreturn]] void fail(const Cursor& c, std::string reason) {
    throw XmlSyntaxError(c.line, std::move(reason));
}

bool is_space(char ch) {
    return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n';
}

bool is_name_start(char ch) {
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
}

bool is_name_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '.';
}

void skip_space(Cursor& c) {
    while (!c.eof() && is_space(c.peek())) c.advance();
}

void expect(Cursor& c, char ch, std::string_view what) {
    if (c.peek() != ch) fail(c, "expected " + std::string(what));
    c.advance();
}

// Reads an unqualified XML name (one QName half).
std::string read_name(Cursor& c) {
    if (!is_name_start(c.peek())) fail(c, "expected a name");
    std::string out;
    while (!c.eof() && is_name_char(c.peek())) {
        out += c.peek();
        c.advance();
    }
    return out;
}

// Reads prefix:local, returning {prefix, local} with empty prefix when bare.
std::pair<std::string, std::string> read_qname(Cursor& c) {
    std::string first = read_name(c);
    if (c.peek() != ':') return {"", std::move(first)};
    c.advance();
    std::string second = read_name(c);
    return {std::move(first), std::move(second)};
}

void append_utf8(std::string& out, unsigned long cp) {
    if (cp <= 0x7F) {
        out += static_cast<char>(cp);
    } else if (cp <= 0x7FF) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp <= 0xFFFF) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

void parse_char_reference(Cursor& c, std::string& out) {
    c.advance();  // '#'
    unsigned long cp = 0;
    bool hex = c.peek() == 'x' || c.peek() == 'X';
    if (hex) c.advance();
    bool any = false;
    while (!c.eof() && c.peek() != ';') {
        char ch = c.peek();
        int digit;
        if (ch >= '0' && ch <= '9') digit = ch - '0';
        else if (hex && ch >= 'a' && ch <= 'f') digit = ch - 'a' + 10;
        else if (hex && ch >= 'A' && ch <= 'F') digit = ch - 'A' + 10;
        else fail(c, "bad character reference");
        cp = cp * (hex ? 16 : 10) + static_cast<unsigned long>(digit);
        if (cp > 0x10FFFF) fail(c, "character reference out of range");
        any = true;
        c.advance();
    }
    if (!any || c.eof()) fail(c, "bad character reference");
    c.advance();  // ';'
    append_utf8(out, cp);
}

const char* builtin_entity(const std::string& name) {
    if (name == "amp") return "&";
    if (name == "lt") return "<";
    if (name == "gt") return ">";
    if (name == "quot") return "\"";
    if (name == "apos") return "'";
    return nullptr;
}

// Expands one reference starting at '&'. In attribute values the truncated
// `&name:local` remnant is accepted when `name` is a declared entity.
void parse_reference(Cursor& c, const std::map<std::string, std::string>& entities,
                     bool in_attribute, std::string& out) {
    int at_line = c.line;
    c.advance();  // '&'
    if (c.peek() == '#') {
        parse_char_reference(c, out);
        return;
    }
    if (!is_name_start(c.peek()))
        throw XmlSyntaxError(at_line, "bare '&' must start an entity reference");
    std::string name;
    while (!c.eof() && is_name_char(c.peek())) {
        name += c.peek();
        c.advance();
    }
    if (c.peek() == ';') {
        c.advance();
        if (const char* b = builtin_entity(name)) {
            out += b;
            return;
        }
        auto it = entities.find(name);
        if (it == entities.end())
            throw XmlSyntaxError(at_line, "reference to undeclared entity '" + name + "'");
        out += it->second;
        return;
    }
    if (c.peek() == ':' && in_attribute) {
        auto it = entities.find(name);
        if (it != entities.end()) {
            c.advance();
            out += it->second;
            while (!c.eof() && is_name_char(c.peek())) {
                out += c.peek();
                c.advance();
            }
            return;
        }
    }
    throw XmlSyntaxError(at_line, "unterminated entity reference '&" + name + "'");
}

std::string parse_attribute_value(Cursor& c, const std::map<std::string, std::string>& entities) {
    char quote = c.peek();
    if (quote != '"' && quote != '\'') fail(c, "expected a quoted attribute value");
    c.advance();
    std::string out;
    while (!c.eof() && c.peek() != quote) {
        if (c.peek() == '<') fail(c, "'<' in attribute value");
        if (c.peek() == '&') {
            parse_reference(c, entities, /*in_attribute=*/true, out);
        } else {
            out += c.peek();
            c.advance();
        }
    }
    if (c.eof()) fail(c, "unterminated attribute value");
    c.advance();
    return out;
}

void skip_comment(Cursor& c) {
    c.advance(4);  // "<!--"
    while (!c.eof()) {
        if (c.starts_with("-->")) {
            c.advance(3);
            return;
        }
        c.advance();
    }
    fail(c, "unterminated comment");
}

// Returns the PI target. The body is discarded.
std::string skip_pi(Cursor& c) {
    c.advance(2);  // "<?"
    std::string target = read_name(c);
    while (!c.eof()) {
        if (c.starts_with("?>")) {
            c.advance(2);
            return target;
        }
        c.advance();
    }
    fail(c, "unterminated processing instruction");
}

void skip_quoted(Cursor& c) {
    char quote = c.peek();
    if (quote != '"' && quote != '\'') fail(c, "expected a quoted string");
    c.advance();
    while (!c.eof() && c.peek() != quote) c.advance();
    if (c.eof()) fail(c, "unterminated quoted string");
    c.advance();
}

void parse_doctype(Cursor& c, XmlDocument& doc) {
    c.advance(9);  // "<!DOCTYPE"
    skip_space(c);
    read_qname(c);  // document type name, unused
    skip_space(c);
    if (c.starts_with("SYSTEM")) {
        c.advance(6);
        skip_space(c);
        skip_quoted(c);
        skip_space(c);
    } else if (c.starts_with("PUBLIC")) {
        c.advance(6);
        skip_space(c);
        skip_quoted(c);
        skip_space(c);
        skip_quoted(c);
        skip_space(c);
    }
    if (c.peek() == '[') {
        c.advance();
        std::vector<std::string> declared_here;
        while (true) {
            skip_space(c);
            if (c.eof()) fail(c, "unterminated DOCTYPE internal subset");
            if (c.peek() == ']') {
                c.advance();
                break;
            }
            if (c.starts_with("<!--")) {
                skip_comment(c);
                continue;
            }
            if (c.starts_with("<?")) {
                int at_line = c.line;
                std::string target = skip_pi(c);
                doc.warnings.push_back({at_line, "processing instruction '" + target + "' ignored"});
                continue;
            }
            if (c.starts_with("<!ENTITY")) {
                int at_line = c.line;
                c.advance(8);
                skip_space(c);
                if (c.peek() == '%') fail(c, "parameter entities are not supported");
                std::string name = read_name(c);
                skip_space(c);
                std::string raw;
                {
                    char quote = c.peek();
                    if (quote != '"' && quote != '\'') fail(c, "expected a quoted entity value");
                    c.advance();
                    while (!c.eof() && c.peek() != quote) {
                        if (c.peek() == '&') {
                            parse_reference(c, doc.entities, /*in_attribute=*/false, raw);
                        } else {
                            raw += c.peek();
                            c.advance();
                        }
                    }
                    if (c.eof()) fail(c, "unterminated entity value");
                    c.advance();
                }
                skip_space(c);
                expect(c, '>', "'>' after entity declaration");
                bool seen = false;
                for (const std::string& prior : declared_here) {
                    if (prior == name) seen = true;
                }
                // The first declaration is binding; later ones only warn.
                if (seen) {
                    doc.warnings.push_back({at_line, "entity '" + name + "' redeclared"});
                } else {
                    doc.entities[name] = std::move(raw);
                }
                declared_here.push_back(name);
                continue;
            }
            fail(c, "unsupported markup in DOCTYPE internal subset");
        }
    }
    skip_space(c);
    expect(c, '>', "'>' closing DOCTYPE");
}

using NsScope = std::map<std::string, std::string>;

std::string resolve_prefix(const Cursor& c, const NsScope& scope, const std::string& prefix) {
    if (prefix == "xml") return std::string(kXmlNs);
    auto it = scope.find(prefix);
    if (it == scope.end() || (!prefix.empty() && it->second.empty()))
        fail(c, "unbound namespace prefix '" + prefix + "'");
    return it->second;
}

XmlElement parse_element(Cursor& c, const NsScope& parent_scope, XmlDocument& doc);

void append_text(XmlElement& element, std::string text, int line) {
    if (!element.children.empty()) {
        if (auto* prior = std::get_if<XmlText>(&element.children.back())) {
            prior->text += text;
            return;
        }
    }
    element.children.push_back(XmlText{std::move(text), line});
}

void parse_content(Cursor& c, XmlElement& element, const NsScope& scope, XmlDocument& doc) {
    while (true) {
        if (c.eof()) fail(c, "unexpected end of document inside <" + element.qname() + ">");
        if (c.starts_with("</")) {
            c.advance(2);
            auto [prefix, local] = read_qname(c);
            if (prefix != element.prefix || local != element.local)
                fail(c, "mismatched end tag </" + (prefix.empty() ? local : prefix + ":" + local) +
                            "> for <" + element.qname() + ">");
            skip_space(c);
            expect(c, '>', "'>' closing end tag");
            return;
        }
        if (c.starts_with("<!--")) {
            skip_comment(c);
            continue;
        }
        if (c.starts_with("<![CDATA[")) {
            int at_line = c.line;
            c.advance(9);
            std::string raw;
            while (!c.eof() && !c.starts_with("]]>")) {
                raw += c.peek();
                c.advance();
            }
            if (c.eof()) fail(c, "unterminated CDATA section");
            c.advance(3);
            append_text(element, std::move(raw), at_line);
            continue;
        }
        if (c.starts_with("<?")) {
            int at_line = c.line;
            std::string target = skip_pi(c);
            doc.warnings.push_back({at_line, "processing instruction '" + target + "' ignored"});
            continue;
        }
        if (c.peek() == '<') {
            element.children.push_back(parse_element(c, scope, doc));
            continue;
        }
        int at_line = c.line;
        std::string run;
        while (!c.eof() && c.peek() != '<') {
            if (c.peek() == '&') {
                parse_reference(c, doc.entities, /*in_attribute=*/false, run);
            } else {
                run += c.peek();
                c.advance();
            }
        }
        append_text(element, std::move(run), at_line);
    }
}

XmlElement parse_element(Cursor& c, const NsScope& parent_scope, XmlDocument& doc) {
    XmlElement element;
    element.line = c.line;
    expect(c, '<', "'<'");
    auto [prefix, local] = read_qname(c);
    element.prefix = std::move(prefix);
    element.local = std::move(local);

    struct RawAttribute {
        std::string prefix, local, value;
        int line;
    };
    std::vector<RawAttribute> raw;
    NsScope scope = parent_scope;

    while (true) {
        bool spaced = is_space(c.peek());
        skip_space(c);
        if (c.peek() == '>' || c.starts_with("/>")) break;
        if (c.eof()) fail(c, "unterminated start tag <" + element.qname() + ">");
        if (!spaced) fail(c, "expected whitespace before attribute");
        int at_line = c.line;
        auto [aprefix, alocal] = read_qname(c);
        skip_space(c);
        expect(c, '=', "'=' after attribute name");
        skip_space(c);
        std::string value = parse_attribute_value(c, doc.entities);
        if (aprefix.empty() && alocal == "xmlns") {
            scope[""] = value;
            element.ns_decls.emplace_back("", std::move(value));
        } else if (aprefix == "xmlns") {
            if (value.empty()) fail(c, "cannot undeclare prefix '" + alocal + "'");
            scope[alocal] = value;
            element.ns_decls.emplace_back(alocal, std::move(value));
        } else {
            raw.push_back({std::move(aprefix), std::move(alocal), std::move(value), at_line});
        }
    }

    element.ns = element.prefix.empty()
                     ? (scope.count("") ? scope.at("") : "")
                     : resolve_prefix(c, scope, element.prefix);
    for (RawAttribute& a : raw) {
        XmlAttribute attr;
        attr.prefix = std::move(a.prefix);
        attr.local = std::move(a.local);
        attr.ns = attr.prefix.empty() ? "" : resolve_prefix(c, scope, attr.prefix);
        attr.value = std::move(a.value);
        attr.line = a.line;
        for (const XmlAttribute& prior : element.attributes) {
            if (prior.ns == attr.ns && prior.local == attr.local && prior.prefix == attr.prefix)
                fail(c, "duplicate attribute '" + attr.qname() + "'");
        }
        element.attributes.push_back(std::move(attr));
    }

    if (c.starts_with("/>")) {
        c.advance(2);
        return element;
    }
    expect(c, '>', "'>' closing start tag");
    parse_content(c, element, scope, doc);
    return element;
}

} // namespace

XmlDocument parse_xml(std::string_view text) {
    if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) text.remove_prefix(3);
    Cursor c{text};
    XmlDocument doc;
    doc.entities["xsd"] = std::string(rdf::ns::xsd);

    bool saw_doctype = false;
    while (true) {
        skip_space(c);
        if (c.eof()) fail(c, "no root element");
        if (c.starts_with("<?")) {
            int at_line = c.line;
            std::string target = skip_pi(c);
            if (target != "xml")
                doc.warnings.push_back({at_line, "processing instruction '" + target + "' ignored"});
            continue;
        }
        if (c.starts_with("<!--")) {
            skip_comment(c);
            continue;
        }
        if (c.starts_with("<!DOCTYPE")) {
            if (saw_doctype) fail(c, "multiple DOCTYPE declarations");
            saw_doctype = true;
            parse_doctype(c, doc);
            continue;
        }
        if (c.peek() == '<') break;
        fail(c, "text outside the root element");
    }

    NsScope scope;
    doc.root = parse_element(c, scope, doc);

    while (true) {
        skip_space(c);
        if (c.eof()) break;
        if (c.starts_with("<!--")) {
            skip_comment(c);
            continue;
        }
        if (c.starts_with("<?")) {
            int at_line = c.line;
            std::string target = skip_pi(c);
            doc.warnings.push_back({at_line, "processing instruction '" + target + "' ignored"});
            continue;
        }
        fail(c, "content after the root element");
    }
    return doc;
}

} // namespace pwo::xml
