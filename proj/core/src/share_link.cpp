#include "pwo/federation/federation.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "pwo/errors.hpp"

namespace pwo::federation {

namespace {

bool is_unreserved(unsigned char c) {
    return std::isalnum(c) != 0 || c == '-' || c == '.' || c == '_' || c == '~';
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

} // namespace

std::string percent_encode(std::string_view text) {
    static const char* digits = "0123456789ABCDEF";
    std::string out;
    out.reserve(text.size());
    for (unsigned char c : text) {
        if (is_unreserved(c)) {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(digits[c >> 4]);
            out.push_back(digits[c & 0xF]);
        }
    }
    return out;
}

std::string percent_decode(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '%') {
            out.push_back(text[i]);
            continue;
        }
        if (i + 2 >= text.size()) throw std::invalid_argument("truncated percent escape");
        int hi = hex_digit(text[i + 1]);
        int lo = hex_digit(text[i + 2]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("invalid percent escape");
        out.push_back(static_cast<char>(hi * 16 + lo));
        i += 2;
    }
    return out;
}

std::string make_share_link(const std::string& endpoint, const std::string& query_text,
                            const std::vector<std::string>& source_urls) {
    auto starts = [&endpoint](std::string_view scheme) {
        if (endpoint.size() < scheme.size()) return false;
        for (size_t i = 0; i < scheme.size(); ++i) {
            if (std::tolower(static_cast<unsigned char>(endpoint[i])) != scheme[i]) return false;
        }
        return true;
    };
    if (!starts("http://") && !starts("https://")) {
        throw MalformedIri(endpoint, "share endpoint must be an http(s) URL");
    }
    std::string link = endpoint + "?query=" + percent_encode(query_text);
    for (const auto& url : source_urls) {
        link += "&source=" + percent_encode(url);
    }
    return link;
}

} // namespace pwo::federation
