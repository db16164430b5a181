// Command-line front end for the GRS/EGRS toolkit.
//
// Exit codes: 0 success (or EQUAL), 1 semantic negative (NOT-EQUAL,
// round-trip mismatch), 2 invalid input or unsupported size.
//
// Converted documents go to the -o target (stdout when -o is absent).
// Report lines (gamma=..., a=... lambda=...) go to stdout when -o is given,
// to stderr otherwise, so piped document output stays machine-readable.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grs/grs.hpp"

namespace {

std::vector<std::uint64_t> parse_int_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long long value = std::stoll(item, &used);
            if (used != item.size() || value < 0) throw std::invalid_argument(item);
            out.push_back(static_cast<std::uint64_t>(value));
        } catch (const std::exception&) {
            throw grs::Error(grs::Errc::BadDocument, "bad integer list entry \"" + item + "\"");
        }
    }
    return out;
}

std::string join(const std::vector<grs::Fe>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i].v);
    }
    return s;
}

// Report stream: stdout when the document goes to a file, stderr otherwise.
std::ostream& report_stream(const std::string& out_path) {
    return out_path.empty() ? std::cerr : std::cout;
}

const grs::GrsCode& expect_grs(const grs::CodeDocument& doc) {
    if (!doc.is_grs()) throw grs::Error(grs::Errc::BadDocument, "expected kind=grs");
    return doc.grs();
}

const grs::EgrsCode& expect_egrs(const grs::CodeDocument& doc) {
    if (doc.is_grs()) throw grs::Error(grs::Errc::BadDocument, "expected kind=egrs");
    return doc.egrs();
}

int cmd_field(std::uint64_t p, std::uint32_t m, const std::string& reduction_csv) {
    std::optional<std::vector<std::uint32_t>> reduction;
    if (!reduction_csv.empty()) {
        std::vector<std::uint32_t> red;
        for (std::uint64_t c : parse_int_list(reduction_csv)) {
            if (c >= p) throw grs::Error(grs::Errc::DegreeMismatch, "reduction coefficient out of range");
            red.push_back(static_cast<std::uint32_t>(c));
        }
        reduction = std::move(red);
    }
    grs::FieldPtr field = grs::Field::make(p, m, std::move(reduction));
    std::cout << "q=" << field->order() << " p=" << field->characteristic() << " m=" << field->degree()
              << "\n";
    if (field->degree() > 1) {
        std::cout << "reduction=";
        const auto& red = field->reduction();
        for (std::size_t i = 0; i < red.size(); ++i) std::cout << (i ? "," : "") << red[i];
        std::cout << "\n";
    }
    return 0;
}

int cmd_validate(const std::string& path) {
    grs::CodeDocument doc = grs::load_document(path);
    std::cout << "VALID kind=" << doc.kind() << " q=" << doc.field()->order() << " n=" << doc.n()
              << " k=" << doc.dim() << " N=" << doc.block_length() << "\n";
    return 0;
}

int cmd_encode(const std::string& path, const std::string& message_csv) {
    grs::CodeDocument doc = grs::load_document(path);
    std::vector<grs::Fe> msg;
    for (std::uint64_t x : parse_int_list(message_csv)) msg.push_back(doc.field()->element(x));
    grs::Codeword word = doc.is_grs() ? doc.grs().encode(msg) : doc.egrs().encode(msg);
    std::cout << join(word) << "\n";
    return 0;
}

int cmd_genmat(const std::string& path) {
    grs::CodeDocument doc = grs::load_document(path);
    grs::Matrix g = doc.is_grs() ? doc.grs().generator_matrix() : doc.egrs().generator_matrix();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) std::cout << (c ? "," : "") << g.at(r, c).v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_normalize(const std::string& path, const std::string& out_path) {
    grs::CodeDocument doc = grs::load_document(path);
    const grs::GrsCode& code = expect_grs(doc);
    const grs::Fe a = code.alpha().back();
    const grs::Fe lambda = code.field()->inv(code.multipliers().back());
    grs::GrsCode normalized = grs::normalize(code);
    report_stream(out_path) << "a=" << a.v << " lambda=" << lambda.v << "\n";
    grs::write_document(grs::CodeDocument(std::move(normalized)), out_path);
    return 0;
}

int cmd_to_egrs(const std::string& path, const std::string& out_path) {
    grs::CodeDocument doc = grs::load_document(path);
    const grs::GrsCode& code = expect_grs(doc);
    const grs::Fe a = code.alpha().back();
    const grs::Fe lambda = code.field()->inv(code.multipliers().back());
    grs::EgrsCode converted = grs::grs_to_egrs(code);
    report_stream(out_path) << "a=" << a.v << " lambda=" << lambda.v << "\n";
    grs::write_document(grs::CodeDocument(std::move(converted)), out_path);
    return 0;
}

int cmd_to_grs(const std::string& path, std::optional<std::uint64_t> gamma_value,
               const std::string& out_path) {
    grs::CodeDocument doc = grs::load_document(path);
    const grs::EgrsCode& code = expect_egrs(doc);
    grs::GammaChoice choice = gamma_value ? grs::choose_gamma(code, code.field()->element(*gamma_value))
                                          : grs::choose_gamma(code);
    grs::GrsCode converted = grs::egrs_to_grs(code, choice);
    report_stream(out_path) << "gamma=" << choice.gamma.v << "\n";
    grs::write_document(grs::CodeDocument(std::move(converted)), out_path);
    return 0;
}

int cmd_equal(const std::string& path_a, const std::string& path_b) {
    grs::CodeDocument a = grs::load_document(path_a);
    grs::CodeDocument b = grs::load_document(path_b);
    bool equal = false;
    if (a.is_grs() && b.is_grs()) equal = grs::codes_equal(a.grs(), b.grs());
    else if (a.is_grs()) equal = grs::codes_equal(a.grs(), b.egrs());
    else if (b.is_grs()) equal = grs::codes_equal(a.egrs(), b.grs());
    else equal = grs::codes_equal(a.egrs(), b.egrs());
    if (equal) {
        std::cout << "EQUAL dim=" << a.dim() << "\n";
        return 0;
    }
    std::cout << "NOT-EQUAL\n";
    return 1;
}

int cmd_mindist(const std::string& path, std::uint64_t limit) {
    grs::CodeDocument doc = grs::load_document(path);
    grs::DistanceReport report =
        doc.is_grs() ? grs::min_distance(doc.grs(), limit) : grs::min_distance(doc.egrs(), limit);
    std::cout << "d=" << report.d << " N=" << report.block_length << " k=" << report.dim
              << " mds=" << (report.is_mds ? "true" : "false") << " scanned=" << report.messages_scanned
              << "\n";
    return 0;
}

int cmd_roundtrip(const std::string& path) {
    grs::CodeDocument doc = grs::load_document(path);
    if (doc.is_grs()) {
        const grs::GrsCode& original = doc.grs();
        const grs::Fe a = original.alpha().back();
        const grs::Fe lambda = original.field()->inv(original.multipliers().back());
        grs::EgrsCode hop1 = grs::grs_to_egrs(original);
        std::cout << "hop1 to-egrs a=" << a.v << " lambda=" << lambda.v << "\n";
        std::cout << "hop1 " << grs::canonical_json(grs::CodeDocument(hop1));
        if (!grs::codes_equal(original, hop1)) {
            std::cout << "hop1 NOT-EQUAL\n";
            return 1;
        }
        std::cout << "hop1 EQUAL dim=" << hop1.dim() << "\n";
        grs::GammaChoice choice = grs::choose_gamma(hop1);
        grs::GrsCode hop2 = grs::egrs_to_grs(hop1, choice);
        std::cout << "hop2 to-grs gamma=" << choice.gamma.v << "\n";
        std::cout << "hop2 " << grs::canonical_json(grs::CodeDocument(hop2));
        if (!grs::codes_equal(hop1, hop2) || !grs::codes_equal(original, hop2)) {
            std::cout << "hop2 NOT-EQUAL\n";
            return 1;
        }
        std::cout << "hop2 EQUAL dim=" << hop2.dim() << "\n";
        return 0;
    }
    const grs::EgrsCode& original = doc.egrs();
    grs::GammaChoice choice = grs::choose_gamma(original);
    grs::GrsCode hop1 = grs::egrs_to_grs(original, choice);
    std::cout << "hop1 to-grs gamma=" << choice.gamma.v << "\n";
    std::cout << "hop1 " << grs::canonical_json(grs::CodeDocument(hop1));
    if (!grs::codes_equal(original, hop1)) {
        std::cout << "hop1 NOT-EQUAL\n";
        return 1;
    }
    std::cout << "hop1 EQUAL dim=" << hop1.dim() << "\n";
    const grs::Fe a = hop1.alpha().back();
    const grs::Fe lambda = hop1.field()->inv(hop1.multipliers().back());
    grs::EgrsCode hop2 = grs::grs_to_egrs(hop1);
    std::cout << "hop2 to-egrs a=" << a.v << " lambda=" << lambda.v << "\n";
    std::cout << "hop2 " << grs::canonical_json(grs::CodeDocument(hop2));
    if (!grs::codes_equal(hop1, hop2) || !grs::codes_equal(original, hop2)) {
        std::cout << "hop2 NOT-EQUAL\n";
        return 1;
    }
    std::cout << "hop2 EQUAL dim=" << hop2.dim() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GRS/EGRS code constructor, equivalence transforms, and exact verifiers"};
    app.require_subcommand(1);

    std::uint64_t p = 0;
    std::uint32_t m = 1;
    std::string reduction_csv;
    auto* field_cmd = app.add_subcommand("field", "print field order and reduction polynomial");
    field_cmd->add_option("p", p, "prime characteristic")->required();
    field_cmd->add_option("m", m, "extension degree")->required();
    field_cmd->add_option("--reduction", reduction_csv, "little-endian coefficients c0,c1,...,1");

    std::string in_path, in_path_b, out_path, message_csv;
    std::optional<std::uint64_t> gamma_value;
    std::uint64_t limit = grs::kDefaultEnumLimit;

    auto* validate_cmd = app.add_subcommand("validate", "check a code document");
    validate_cmd->add_option("file", in_path, "document path or -")->required();

    auto* encode_cmd = app.add_subcommand("encode", "encode a message");
    encode_cmd->add_option("file", in_path)->required();
    encode_cmd->add_option("--message", message_csv, "coefficients f_0,...,f_{k-1}")->required();

    auto* genmat_cmd = app.add_subcommand("genmat", "emit the generator matrix rows");
    genmat_cmd->add_option("file", in_path)->required();

    auto* normalize_cmd = app.add_subcommand("normalize", "move the last point to 0, last weight to 1");
    normalize_cmd->add_option("file", in_path)->required();
    normalize_cmd->add_option("-o", out_path, "output document path");

    auto* to_egrs_cmd = app.add_subcommand("to-egrs", "convert a GRS document to an equal EGRS code");
    to_egrs_cmd->add_option("file", in_path)->required();
    to_egrs_cmd->add_option("-o", out_path, "output document path");

    auto* to_grs_cmd = app.add_subcommand("to-grs", "convert an EGRS document to an equal GRS code");
    to_grs_cmd->add_option("file", in_path)->required();
    to_grs_cmd->add_option("--gamma", gamma_value, "evaluation point to use (default: smallest unused)");
    to_grs_cmd->add_option("-o", out_path, "output document path");

    auto* equal_cmd = app.add_subcommand("equal", "decide subspace equality of two documents");
    equal_cmd->add_option("fileA", in_path)->required();
    equal_cmd->add_option("fileB", in_path_b)->required();

    auto* mindist_cmd = app.add_subcommand("mindist", "exact minimum distance by enumeration");
    mindist_cmd->add_option("file", in_path)->required();
    mindist_cmd->add_option("--limit", limit, "max number of messages to enumerate");

    auto* roundtrip_cmd = app.add_subcommand("roundtrip", "convert to the other kind and back, checking equality");
    roundtrip_cmd->add_option("file", in_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(field_cmd)) return cmd_field(p, m, reduction_csv);
        if (app.got_subcommand(validate_cmd)) return cmd_validate(in_path);
        if (app.got_subcommand(encode_cmd)) return cmd_encode(in_path, message_csv);
        if (app.got_subcommand(genmat_cmd)) return cmd_genmat(in_path);
        if (app.got_subcommand(normalize_cmd)) return cmd_normalize(in_path, out_path);
        if (app.got_subcommand(to_egrs_cmd)) return cmd_to_egrs(in_path, out_path);
        if (app.got_subcommand(to_grs_cmd)) return cmd_to_grs(in_path, gamma_value, out_path);
        if (app.got_subcommand(equal_cmd)) return cmd_equal(in_path, in_path_b);
        if (app.got_subcommand(mindist_cmd)) return cmd_mindist(in_path, limit);
        if (app.got_subcommand(roundtrip_cmd)) return cmd_roundtrip(in_path);
    } catch (const grs::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable with require_subcommand(1)
}
