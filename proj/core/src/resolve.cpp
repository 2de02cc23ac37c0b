#include "pwo/rdf/resolve.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace pwo::rdf {

namespace {

bool ncname_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool ncname_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-' || c == '.';
}

std::string strip_fragment(const std::string& iri) {
    auto hash = iri.find('#');
    return hash == std::string::npos ? iri : iri.substr(0, hash);
}

bool looks_absolute(std::string_view ref) {
    if (ref.empty() || std::isalpha(static_cast<unsigned char>(ref[0])) == 0) return false;
    for (std::size_t i = 1; i < ref.size(); ++i) {
        char c = ref[i];
        if (c == ':') return true;
        if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '+' && c != '-' && c != '.') {
            return false;
        }
    }
    return false;
}

// Splits "scheme://authority/path" into the part up to the path and the path.
void split_after_authority(const std::string& iri, std::string& head, std::string& path) {
    auto scheme_end = iri.find(':');
    std::size_t path_start;
    if (iri.compare(scheme_end + 1, 2, "//") == 0) {
        path_start = iri.find('/', scheme_end + 3);
        if (path_start == std::string::npos) {
            head = iri;
            path.clear();
            return;
        }
    } else {
        path_start = scheme_end + 1;
    }
    head = iri.substr(0, path_start);
    path = iri.substr(path_start);
}

std::string remove_dot_segments(const std::string& path) {
    std::vector<std::string> out;
    std::size_t i = 0;
    bool trailing_slash = !path.empty() && path.back() == '/';
    while (i < path.size()) {
        auto next = path.find('/', i);
        std::string seg = path.substr(i, next == std::string::npos ? std::string::npos : next - i);
        i = next == std::string::npos ? path.size() : next + 1;
        if (seg == "." || seg.empty()) continue;
        if (seg == "..") {
            if (!out.empty()) out.pop_back();
            continue;
        }
        out.push_back(seg);
    }
    std::string joined;
    for (const auto& seg : out) joined += "/" + seg;
    if (joined.empty()) joined = "/";
    if (trailing_slash && joined.back() != '/') joined += "/";
    return joined;
}

} // namespace

Iri resolve_id(const Iri& base, std::string_view fragment_id) {
    if (fragment_id.empty() || !ncname_start(fragment_id[0])) {
        throw MalformedIri(std::string(fragment_id), "rdf:ID is not a valid XML name");
    }
    for (char c : fragment_id.substr(1)) {
        if (!ncname_char(c)) {
            throw MalformedIri(std::string(fragment_id), "rdf:ID is not a valid XML name");
        }
    }
    return Iri(strip_fragment(base.value()) + "#" + std::string(fragment_id));
}

Iri resolve_reference(const Iri& base, std::string_view reference) {
    if (reference.empty()) return base;
    if (reference[0] == '#') {
        return Iri(strip_fragment(base.value()) + std::string(reference));
    }
    if (looks_absolute(reference)) return Iri(std::string(reference));

    // Relative path: merge with the base per the usual rules, minus the
    // query-component cases this toolkit never encounters.
    std::string head, base_path;
    split_after_authority(strip_fragment(base.value()), head, base_path);
    std::string ref(reference);
    std::string merged;
    if (!ref.empty() && ref[0] == '/') {
        merged = ref;
    } else {
        auto last_slash = base_path.rfind('/');
        merged = (last_slash == std::string::npos ? "/" : base_path.substr(0, last_slash + 1)) + ref;
    }
    std::string fragment;
    auto hash = merged.find('#');
    if (hash != std::string::npos) {
        fragment = merged.substr(hash);
        merged = merged.substr(0, hash);
    }
    return Iri(head + remove_dot_segments(merged) + fragment);
}

} // namespace pwo::rdf
