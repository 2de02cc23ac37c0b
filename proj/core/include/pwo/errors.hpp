#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pwo {

/// Base class for every error this library reports about its inputs.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedIri : public Error {
public:
    MalformedIri(std::string text, std::string reason)
        : Error("malformed IRI \"" + text + "\": " + reason),
          text_(std::move(text)),
          reason_(std::move(reason)) {}

    const std::string& text() const noexcept { return text_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string text_;
    std::string reason_;
};

class XmlSyntaxError : public Error {
public:
    XmlSyntaxError(int line, std::string reason)
        : Error("XML syntax error at line " + std::to_string(line) + ": " + reason),
          line_(line),
          reason_(std::move(reason)) {}

    int line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    int line_;
    std::string reason_;
};

class UnsupportedConstruct : public Error {
public:
    UnsupportedConstruct(int line, std::string construct)
        : Error("unsupported RDF/XML construct at line " + std::to_string(line) + ": " + construct),
          line_(line),
          construct_(std::move(construct)) {}

    int line() const noexcept { return line_; }
    const std::string& construct() const noexcept { return construct_; }

private:
    int line_;
    std::string construct_;
};

class QuerySyntaxError : public Error {
public:
    QuerySyntaxError(std::size_t position, std::string expected)
        : Error("query syntax error at offset " + std::to_string(position) + ": " + expected),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

class UnknownPrefix : public Error {
public:
    explicit UnknownPrefix(std::string name)
        : Error("unknown prefix \"" + name + ":\""), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class ConflictingType : public Error {
public:
    explicit ConflictingType(std::string iri)
        : Error("individual <" + iri + "> carries more than one model class"),
          iri_(std::move(iri)) {}

    const std::string& iri() const noexcept { return iri_; }

private:
    std::string iri_;
};

class DanglingReference : public Error {
public:
    explicit DanglingReference(std::string iri)
        : Error("reference to <" + iri + "> does not resolve inside the model"),
          iri_(std::move(iri)) {}

    const std::string& iri() const noexcept { return iri_; }

private:
    std::string iri_;
};

/// Base for failures while retrieving a source by path or URL.
class FetchError : public Error {
public:
    FetchError(std::string location, const std::string& message)
        : Error(message), location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

class NotFound : public FetchError {
public:
    explicit NotFound(std::string location)
        : FetchError(location, "not found: " + location) {}
};

class Timeout : public FetchError {
public:
    Timeout(std::string location, long long ms)
        : FetchError(location,
                     "timed out after " + std::to_string(ms) + " ms: " + location),
          ms_(ms) {}

    long long milliseconds() const noexcept { return ms_; }

private:
    long long ms_;
};

class TooManyRedirects : public FetchError {
public:
    explicit TooManyRedirects(std::string location)
        : FetchError(location, "too many redirects: " + location) {}
};

class TransportFailure : public FetchError {
public:
    TransportFailure(std::string location, std::string detail)
        : FetchError(location, "transport failure for " + location + ": " + detail),
          detail_(std::move(detail)) {}

    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
};

/// Wraps any fetch/parse error with the ordinal of the source that caused it.
class SourceLoadError : public Error {
public:
    SourceLoadError(int source_id, std::string location, const std::string& cause)
        : Error("source " + std::to_string(source_id) + " (" + location + "): " + cause),
          source_id_(source_id),
          location_(std::move(location)) {}

    int source_id() const noexcept { return source_id_; }
    const std::string& location() const noexcept { return location_; }

private:
    int source_id_;
    std::string location_;
};

} // namespace pwo
