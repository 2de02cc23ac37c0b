#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pwo/errors.hpp"

namespace pwo::rdf {

/// An absolute IRI. Validation is lexical: a scheme followed by ":", no
/// whitespace, no unescaped angle brackets.
class Iri {
public:
    explicit Iri(std::string value);

    const std::string& value() const noexcept { return value_; }

    bool operator==(const Iri& other) const noexcept = default;
    auto operator<=>(const Iri& other) const noexcept = default;

private:
    std::string value_;
};

/// A blank node label, unique within one graph's scope.
class BlankNode {
public:
    explicit BlankNode(std::string label);

    const std::string& label() const noexcept { return label_; }

    bool operator==(const BlankNode& other) const noexcept = default;
    auto operator<=>(const BlankNode& other) const noexcept = default;

private:
    std::string label_;
};

/// A literal: lexical form plus at most one of datatype IRI or language tag.
class Literal {
public:
    static Literal plain(std::string lexical);
    static Literal typed(std::string lexical, Iri datatype);
    static Literal tagged(std::string lexical, std::string lang);

    const std::string& lexical() const noexcept { return lexical_; }
    const std::optional<Iri>& datatype() const noexcept { return datatype_; }
    const std::optional<std::string>& lang() const noexcept { return lang_; }

    bool operator==(const Literal& other) const noexcept = default;
    auto operator<=>(const Literal& other) const noexcept = default;

private:
    Literal(std::string lexical, std::optional<Iri> datatype,
            std::optional<std::string> lang);

    std::string lexical_;
    std::optional<Iri> datatype_;
    std::optional<std::string> lang_;
};

/// Tagged union over the three RDF node kinds.
class Term {
public:
    Term(Iri iri) : node_(std::move(iri)) {}
    Term(BlankNode blank) : node_(std::move(blank)) {}
    Term(Literal literal) : node_(std::move(literal)) {}

    bool is_iri() const noexcept { return std::holds_alternative<Iri>(node_); }
    bool is_blank() const noexcept { return std::holds_alternative<BlankNode>(node_); }
    bool is_literal() const noexcept { return std::holds_alternative<Literal>(node_); }
    bool is_resource() const noexcept { return !is_literal(); }

    const Iri& iri() const { return std::get<Iri>(node_); }
    const BlankNode& blank() const { return std::get<BlankNode>(node_); }
    const Literal& literal() const { return std::get<Literal>(node_); }

    bool operator==(const Term& other) const noexcept = default;
    auto operator<=>(const Term& other) const noexcept = default;

private:
    std::variant<Iri, BlankNode, Literal> node_;
};

/// One statement. The subject is never a literal; the predicate is an IRI.
class Triple {
public:
    Triple(Term subject, Iri predicate, Term object);

    const Term& subject() const noexcept { return subject_; }
    const Iri& predicate() const noexcept { return predicate_; }
    const Term& object() const noexcept { return object_; }

    bool operator==(const Triple& other) const noexcept = default;
    auto operator<=>(const Triple& other) const noexcept = default;

private:
    Term subject_;
    Iri predicate_;
    Term object_;
};

/// Equality used when matching patterns against data: a plain literal and an
/// explicitly xsd:string-typed literal with the same lexical form are
/// interchangeable; everything else compares strictly.
bool match_equal(const Term& a, const Term& b);

/// True iff `lexical` is a calendar-valid YYYY-MM-DD date.
bool is_valid_date_lexical(std::string_view lexical);

/// Renders one term in N-Triples syntax: `<iri>`, `_:label`, or a quoted
/// literal with `\" \\ \n \r \t` escapes plus `^^<iri>` / `@lang` suffixes.
std::string to_ntriples(const Term& term);

std::size_t hash_value(const Term& term);
std::size_t hash_value(const Triple& triple);

/// Well-known vocabulary IRIs.
namespace ns {

inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view owl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view xml = "http://www.w3.org/XML/1998/namespace";

const Iri& rdf_type();
const Iri& rdfs_domain();
const Iri& rdfs_range();
const Iri& rdfs_comment();
const Iri& owl_class();
const Iri& owl_object_property();
const Iri& owl_datatype_property();
const Iri& owl_inverse_of();
const Iri& xsd_string();
const Iri& xsd_date();

} // namespace ns

} // namespace pwo::rdf

template <>
struct std::hash<pwo::rdf::Term> {
    std::size_t operator()(const pwo::rdf::Term& t) const noexcept {
        return pwo::rdf::hash_value(t);
    }
};

template <>
struct std::hash<pwo::rdf::Triple> {
    std::size_t operator()(const pwo::rdf::Triple& t) const noexcept {
        return pwo::rdf::hash_value(t);
    }
};
