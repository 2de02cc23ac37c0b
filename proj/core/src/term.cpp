#include "pwo/rdf/term.hpp"

#include <cctype>

namespace pwo::rdf {

namespace {

bool is_scheme_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_scheme_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '+' || c == '-' || c == '.';
}

// "scheme:" with scheme = ALPHA (ALPHA / DIGIT / "+" / "-" / ".")*
bool has_scheme(std::string_view text) {
    if (text.empty() || !is_scheme_start(text[0])) return false;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] == ':') return true;
        if (!is_scheme_char(text[i])) return false;
    }
    return false;
}

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_string(const std::string& s) {
    return std::hash<std::string>{}(s);
}

} // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
    if (value_.empty()) throw MalformedIri(value_, "empty");
    for (char c : value_) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            throw MalformedIri(value_, "contains whitespace");
        }
        if (c == '<' || c == '>') {
            throw MalformedIri(value_, "contains an unescaped angle bracket");
        }
    }
    if (!has_scheme(value_)) throw MalformedIri(value_, "missing scheme");
}

BlankNode::BlankNode(std::string label) : label_(std::move(label)) {
    if (label_.empty()) throw std::invalid_argument("blank node label must not be empty");
    for (char c : label_) {
        if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') {
            throw std::invalid_argument("blank node label must match [A-Za-z0-9_]+");
        }
    }
}

Literal::Literal(std::string lexical, std::optional<Iri> datatype,
                 std::optional<std::string> lang)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)), lang_(std::move(lang)) {
    if (datatype_ && lang_) {
        throw std::invalid_argument("literal cannot carry both a datatype and a language tag");
    }
}

Literal Literal::plain(std::string lexical) {
    return Literal(std::move(lexical), std::nullopt, std::nullopt);
}

Literal Literal::typed(std::string lexical, Iri datatype) {
    return Literal(std::move(lexical), std::move(datatype), std::nullopt);
}

Literal Literal::tagged(std::string lexical, std::string lang) {
    return Literal(std::move(lexical), std::nullopt, std::move(lang));
}

Triple::Triple(Term subject, Iri predicate, Term object)
    : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
    if (subject_.is_literal()) {
        throw std::invalid_argument("triple subject must not be a literal");
    }
}

bool match_equal(const Term& a, const Term& b) {
    if (a == b) return true;
    if (!a.is_literal() || !b.is_literal()) return false;
    const Literal& la = a.literal();
    const Literal& lb = b.literal();
    if (la.lexical() != lb.lexical() || la.lang() != lb.lang()) return false;
    auto effective = [](const Literal& l) -> const Iri& {
        return l.datatype() ? *l.datatype() : ns::xsd_string();
    };
    return effective(la) == effective(lb);
}

bool is_valid_date_lexical(std::string_view lexical) {
    if (lexical.size() != 10 || lexical[4] != '-' || lexical[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (std::isdigit(static_cast<unsigned char>(lexical[i])) == 0) return false;
    }
    int year = (lexical[0] - '0') * 1000 + (lexical[1] - '0') * 100 +
               (lexical[2] - '0') * 10 + (lexical[3] - '0');
    int month = (lexical[5] - '0') * 10 + (lexical[6] - '0');
    int day = (lexical[8] - '0') * 10 + (lexical[9] - '0');
    if (month < 1 || month > 12 || day < 1) return false;
    static constexpr int days_in[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int limit = days_in[month - 1];
    bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    if (month == 2 && leap) limit = 29;
    return day <= limit;
}

std::size_t hash_value(const Term& term) {
    if (term.is_iri()) {
        return hash_combine(1, hash_string(term.iri().value()));
    }
    if (term.is_blank()) {
        return hash_combine(2, hash_string(term.blank().label()));
    }
    const Literal& l = term.literal();
    std::size_t h = hash_combine(3, hash_string(l.lexical()));
    if (l.datatype()) h = hash_combine(h, hash_string(l.datatype()->value()));
    if (l.lang()) h = hash_combine(h, hash_string(*l.lang()));
    return h;
}

std::size_t hash_value(const Triple& triple) {
    std::size_t h = hash_value(triple.subject());
    h = hash_combine(h, hash_string(triple.predicate().value()));
    return hash_combine(h, hash_value(triple.object()));
}

namespace ns {

namespace {
Iri make(std::string_view space, std::string_view local) {
    return Iri(std::string(space) + std::string(local));
}
} // namespace

const Iri& rdf_type() {
    static const Iri iri = make(rdf, "type");
    return iri;
}
const Iri& rdfs_domain() {
    static const Iri iri = make(rdfs, "domain");
    return iri;
}
const Iri& rdfs_range() {
    static const Iri iri = make(rdfs, "range");
    return iri;
}
const Iri& rdfs_comment() {
    static const Iri iri = make(rdfs, "comment");
    return iri;
}
const Iri& owl_class() {
    static const Iri iri = make(owl, "Class");
    return iri;
}
const Iri& owl_object_property() {
    static const Iri iri = make(owl, "ObjectProperty");
    return iri;
}
const Iri& owl_datatype_property() {
    static const Iri iri = make(owl, "DatatypeProperty");
    return iri;
}
const Iri& owl_inverse_of() {
    static const Iri iri = make(owl, "inverseOf");
    return iri;
}
const Iri& xsd_string() {
    static const Iri iri = make(xsd, "string");
    return iri;
}
const Iri& xsd_date() {
    static const Iri iri = make(xsd, "date");
    return iri;
}

} // namespace ns

} // namespace pwo::rdf
