#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pwo/rdf/graph.hpp"

namespace pwo::ontology {

enum class Severity { Error, Warning };

struct Finding {
    Severity severity = Severity::Error;
    std::string code;
    std::string subject;  // IRI, or _:label for blank subjects
    std::string message;

    bool operator==(const Finding&) const = default;
};

struct ValidationReport {
    // Ordered by subject, then code, then message.
    std::vector<Finding> findings;

    bool has_errors() const {
        for (const Finding& f : findings) {
            if (f.severity == Severity::Error) return true;
        }
        return false;
    }
    std::size_t error_count() const {
        std::size_t n = 0;
        for (const Finding& f : findings) n += f.severity == Severity::Error;
        return n;
    }
    std::size_t warning_count() const { return findings.size() - error_count(); }
};

// Checks instance data in `g` against the vocabulary under `base`.
//
// Errors: domain-violation and range-violation (only when the subject/object
// carries an explicit conflicting class type; untyped nodes pass),
// malformed-date for docDate lexicals, subdomain-cycle for hasSubDomain
// loops. missing-inverse (a hasPart without its isPartOf or vice versa) is an
// error under `strict`, otherwise a warning. Warnings: missing-doctitle,
// missing-docuri, missing-owner.
ValidationReport validate(const rdf::Graph& g, const rdf::Iri& base, bool strict);

} // namespace pwo::ontology
