#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "grs/codes.hpp"
#include "grs/errors.hpp"
#include "grs/field.hpp"

namespace grs {

/// A GRS or EGRS descriptor loaded from (or destined for) the on-disk
/// document format:
///
///   {"alpha":[...],"field":{"m":..,"p":..(,"reduction":[...])},
///    "k":..,"kind":"grs"|"egrs","v":[...]}
///
/// Element values are packed integers in [0,q); "reduction" is the
/// little-endian reduction polynomial and is present exactly when m > 1.
/// Canonical emission (sorted keys, single line, trailing LF) re-loads to
/// the identical document byte for byte.
class CodeDocument {
public:
    explicit CodeDocument(GrsCode code) : code_(std::move(code)) {}
    explicit CodeDocument(EgrsCode code) : code_(std::move(code)) {}

    bool is_grs() const noexcept { return std::holds_alternative<GrsCode>(code_); }
    const char* kind() const noexcept { return is_grs() ? "grs" : "egrs"; }

    const GrsCode& grs() const { return std::get<GrsCode>(code_); }
    const EgrsCode& egrs() const { return std::get<EgrsCode>(code_); }

    const FieldPtr& field() const {
        return is_grs() ? std::get<GrsCode>(code_).field() : std::get<EgrsCode>(code_).field();
    }
    std::size_t dim() const { return is_grs() ? grs().dim() : egrs().dim(); }
    std::size_t n() const { return is_grs() ? grs().n() : egrs().n(); }
    std::size_t block_length() const { return is_grs() ? grs().block_length() : egrs().block_length(); }
    const std::vector<Fe>& alpha() const { return is_grs() ? grs().alpha() : egrs().alpha(); }
    const std::vector<Fe>& multipliers() const {
        return is_grs() ? grs().multipliers() : egrs().multipliers();
    }

private:
    std::variant<GrsCode, EgrsCode> code_;
};

namespace detail {

inline std::uint64_t get_uint(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key)) throw Error(Errc::BadDocument, "missing key \"" + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw Error(Errc::BadDocument, "key \"" + key + "\" must be a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

inline std::vector<std::uint64_t> get_uint_array(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key)) throw Error(Errc::BadDocument, "missing key \"" + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_array()) throw Error(Errc::BadDocument, "key \"" + key + "\" must be an array");
    std::vector<std::uint64_t> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number_integer() || e.get<std::int64_t>() < 0) {
            throw Error(Errc::BadDocument, "key \"" + key + "\" must hold nonnegative integers");
        }
        out.push_back(e.get<std::uint64_t>());
    }
    return out;
}

inline void reject_unknown_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                                const char* where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) {
            if (it.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw Error(Errc::BadDocument, "unknown key \"" + it.key() + "\" in " + where);
        }
    }
}

}  // namespace detail

inline CodeDocument parse_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::BadDocument, e.what());
    }
    if (!j.is_object()) throw Error(Errc::BadDocument, "document must be a JSON object");
    detail::reject_unknown_keys(j, {"field", "kind", "k", "alpha", "v"}, "document");

    if (!j.contains("field") || !j.at("field").is_object()) {
        throw Error(Errc::BadDocument, "missing \"field\" object");
    }
    const auto& jf = j.at("field");
    detail::reject_unknown_keys(jf, {"p", "m", "reduction"}, "field");
    const std::uint64_t p = detail::get_uint(jf, "p");
    const std::uint64_t m = detail::get_uint(jf, "m");
    if (m > Field::kMaxExtensionDegree) throw Error(Errc::DegreeMismatch, "m too large");
    std::optional<std::vector<std::uint32_t>> reduction;
    if (m > 1) {
        if (!jf.contains("reduction")) {
            throw Error(Errc::BadDocument, "\"reduction\" is mandatory when m > 1");
        }
        std::vector<std::uint32_t> red;
        for (std::uint64_t c : detail::get_uint_array(jf, "reduction")) {
            if (c >= p) throw Error(Errc::DegreeMismatch, "reduction coefficient out of range");
            red.push_back(static_cast<std::uint32_t>(c));
        }
        reduction = std::move(red);
    } else if (jf.contains("reduction")) {
        throw Error(Errc::BadDocument, "\"reduction\" is only allowed when m > 1");
    }
    FieldPtr field = Field::make(p, static_cast<std::uint32_t>(m), std::move(reduction));

    if (!j.contains("kind") || !j.at("kind").is_string()) {
        throw Error(Errc::BadDocument, "missing \"kind\"");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "grs" && kind != "egrs") {
        throw Error(Errc::BadDocument, "kind must be \"grs\" or \"egrs\"");
    }

    const std::uint64_t k = detail::get_uint(j, "k");
    std::vector<Fe> alpha, v;
    for (std::uint64_t x : detail::get_uint_array(j, "alpha")) alpha.push_back(field->element(x));
    for (std::uint64_t x : detail::get_uint_array(j, "v")) v.push_back(field->element(x));

    if (kind == "grs") {
        return CodeDocument(GrsCode(field, static_cast<std::size_t>(k), std::move(alpha), std::move(v)));
    }
    return CodeDocument(EgrsCode(field, static_cast<std::size_t>(k), std::move(alpha), std::move(v)));
}

/// Reads a document from a file path, or from standard input for "-".
inline CodeDocument load_document(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error(Errc::BadDocument, "cannot open " + path);
        buffer << in.rdbuf();
    }
    return parse_document(buffer.str());
}

/// Canonical serialization: sorted keys, no whitespace variance, one LF.
inline std::string canonical_json(const CodeDocument& doc) {
    nlohmann::json j;
    j["kind"] = doc.kind();
    j["k"] = doc.dim();
    const FieldPtr& field = doc.field();
    j["field"]["p"] = field->characteristic();
    j["field"]["m"] = field->degree();
    if (field->degree() > 1) j["field"]["reduction"] = field->reduction();
    std::vector<std::uint32_t> alpha, v;
    for (Fe a : doc.alpha()) alpha.push_back(a.v);
    for (Fe x : doc.multipliers()) v.push_back(x.v);
    j["alpha"] = alpha;
    j["v"] = v;
    return j.dump() + "\n";
}

inline void write_document(const CodeDocument& doc, const std::string& path) {
    const std::string text = canonical_json(doc);
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::BadDocument, "cannot write " + path);
    out << text;
}

}  // namespace grs
