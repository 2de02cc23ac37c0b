#include "pwo/federation/federation.hpp"

#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "pwo/errors.hpp"
#include "pwo/rdf/resolve.hpp"

#include "httplib.h"

namespace pwo::federation {

namespace {

bool has_scheme_prefix(std::string_view text, std::string_view scheme) {
    if (text.size() < scheme.size()) return false;
    for (size_t i = 0; i < scheme.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(text[i])) != scheme[i]) return false;
    }
    return true;
}

bool is_http_url(std::string_view location) {
    return has_scheme_prefix(location, "http://") || has_scheme_prefix(location, "https://");
}

std::string read_file(const std::string& location) {
    std::ifstream in(location, std::ios::binary);
    if (!in) throw NotFound(location);
    std::ostringstream body;
    body << in.rdbuf();
    if (in.bad()) throw TransportFailure(location, "read failure");
    return std::move(body).str();
}

// scheme://authority part for the client, path?query part for the request.
struct SplitUrl {
    std::string origin;
    std::string target;
};

SplitUrl split_url(const std::string& url) {
    auto scheme_end = url.find("://");
    auto authority_end = url.find_first_of("/?#", scheme_end + 3);
    SplitUrl out;
    if (authority_end == std::string::npos) {
        out.origin = url;
        out.target = "/";
        return out;
    }
    out.origin = url.substr(0, authority_end);
    auto fragment = url.find('#', authority_end);
    std::string rest = url.substr(authority_end, fragment == std::string::npos
                                                     ? std::string::npos
                                                     : fragment - authority_end);
    if (rest.empty() || rest[0] == '?') rest = "/" + rest;
    out.target = rest;
    return out;
}

bool is_redirect(int status) {
    return status == 301 || status == 302 || status == 303 || status == 307 || status == 308;
}

std::string fetch_url(const std::string& location, std::chrono::milliseconds timeout) {
    std::string current = location;
    for (int hop = 0; hop <= 5; ++hop) {
        auto [origin, target] = split_url(current);
        httplib::Client client(origin);
        client.set_follow_location(false);
        client.set_connection_timeout(timeout);
        client.set_read_timeout(timeout);
        client.set_write_timeout(timeout);

        auto started = std::chrono::steady_clock::now();
        auto res = client.Get(target, {{"Accept", "application/rdf+xml"}});
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - started);

        if (!res) {
            auto err = res.error();
            if (err == httplib::Error::ConnectionTimeout) throw Timeout(location, timeout.count());
            if ((err == httplib::Error::Read || err == httplib::Error::Write) &&
                elapsed >= timeout) {
                throw Timeout(location, timeout.count());
            }
            throw TransportFailure(location, httplib::to_string(err));
        }
        if (is_redirect(res->status)) {
            auto next = res->get_header_value("Location");
            if (next.empty()) throw TransportFailure(location, "redirect without Location");
            if (hop == 5) throw TooManyRedirects(location);
            current = rdf::resolve_reference(rdf::Iri{current}, next).value();
            continue;
        }
        if (res->status == 404) throw NotFound(location);
        if (res->status < 200 || res->status >= 300) {
            throw TransportFailure(location, "HTTP status " + std::to_string(res->status));
        }
        return res->body;
    }
    throw TooManyRedirects(location);
}

} // namespace

rdf::Iri effective_base(const SourceSpec& src) {
    if (src.declared_base) return *src.declared_base;
    if (is_http_url(src.location)) return rdf::Iri{src.location};
    auto absolute = std::filesystem::absolute(src.location).lexically_normal();
    return rdf::Iri{"file://" + absolute.generic_string()};
}

std::string fetch(const SourceSpec& src, std::chrono::milliseconds timeout) {
    if (is_http_url(src.location)) return fetch_url(src.location, timeout);
    return read_file(src.location);
}

} // namespace pwo::federation
