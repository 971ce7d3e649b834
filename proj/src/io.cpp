#include "sumfree/io.hpp"

#include <fstream>
#include <sstream>

namespace sumfree {

namespace {

std::runtime_error parse_error(const std::string& what) {
    return std::runtime_error("parse error: " + what);
}

// Splits "key=value" tokens of a header line into a map.
std::map<std::string, std::string> parse_header(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw parse_error("expected key=value, got '" + tok + "'");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

std::uint64_t parse_hex(const std::string& s) {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(s, &pos, 16);
    if (pos != s.size()) throw parse_error("bad hex value '" + s + "'");
    return v;
}

std::string next_content_line(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
        const auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) return line;
    }
    return {};
}

FunctionFile read_function_body(std::istream& is, const std::string& header) {
    const auto kv = parse_header(header);
    if (!kv.count("n") || !kv.count("m")) throw parse_error("function header needs n= and m=");
    const int n = std::stoi(kv.at("n"));
    const int m = std::stoi(kv.at("m"));
    std::optional<std::uint32_t> modulus;
    if (kv.count("modulus")) {
        std::string h = kv.at("modulus");
        if (h.rfind("0x", 0) == 0 || h.rfind("0X", 0) == 0) h = h.substr(2);
        modulus = static_cast<std::uint32_t>(parse_hex(h));
    }

    const std::string mode = next_content_line(is);
    std::istringstream mode_ss(mode);
    std::string mode_tok;
    mode_ss >> mode_tok;
    if (mode_tok == "poly:") {
        if (m != n) throw parse_error("poly form requires m == n");
        const FieldContext ctx(n, modulus ? *modulus : FieldContext::default_modulus(n));
        std::vector<std::pair<std::uint32_t, std::uint64_t>> terms;
        // terms may continue on the same line or on following lines
        auto consume = [&](std::istream& src) {
            std::string coeff_hex;
            std::uint64_t exponent;
            while (src >> coeff_hex >> exponent)
                terms.emplace_back(static_cast<std::uint32_t>(parse_hex(coeff_hex)), exponent);
        };
        consume(mode_ss);
        consume(is);
        return FunctionFile{VectorialFunction::from_univariate(ctx, terms), ctx.modulus()};
    }
    if (mode_tok == "tt:") {
        std::vector<std::uint32_t> table;
        table.reserve(std::size_t(1) << n);
        std::string hex;
        std::istream* srcs[2] = {&mode_ss, &is};
        for (auto* src : srcs) {
            while (table.size() < (std::size_t(1) << n) && (*src >> hex))
                table.push_back(static_cast<std::uint32_t>(parse_hex(hex)));
        }
        if (table.size() != (std::size_t(1) << n))
            throw parse_error("truth table needs exactly 2^n entries");
        return FunctionFile{VectorialFunction(n, m, std::move(table)), modulus};
    }
    throw parse_error("expected 'poly:' or 'tt:', got '" + mode_tok + "'");
}

} // namespace

FunctionFile read_function(std::istream& is) {
    const std::string header = next_content_line(is);
    if (header.empty()) throw parse_error("empty function file");
    return read_function_body(is, header);
}

FunctionFile read_function_file(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    return read_function(f);
}

void write_function(std::ostream& os, const VectorialFunction& fn,
                    std::optional<std::uint32_t> modulus) {
    os << "n=" << fn.input_dim() << " m=" << fn.output_dim();
    if (modulus) {
        std::ostringstream hex;
        hex << std::hex << *modulus;
        os << " modulus=0x" << hex.str();
    }
    os << "\ntt:\n";
    for (std::uint32_t v : fn.table()) {
        std::ostringstream hex;
        hex << std::hex << v;
        os << hex.str() << '\n';
    }
}

void write_function_file(const std::filesystem::path& path, const VectorialFunction& fn,
                         std::optional<std::uint32_t> modulus) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    write_function(f, fn, modulus);
}

BitMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    return read_matrix(f);
}

void write_matrix_file(const std::filesystem::path& path, const BitMatrix& m) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    write_matrix(f, m);
}

void write_certificate(std::ostream& os, const ColoringCertificate& cert) {
    os << "n=" << cert.params.n << " k=" << cert.params.k << " t=" << cert.params.t
       << " m=" << cert.m << '\n';
    for (const auto& [u, color] : cert.assignment) {
        for (std::size_t i = 0; i < u.rows.size(); ++i) {
            if (i) os << ',';
            std::ostringstream hex;
            hex << std::hex << u.rows[i];
            os << hex.str();
        }
        std::ostringstream hex;
        hex << std::hex << color;
        os << ' ' << hex.str() << '\n';
    }
}

ColoringCertificate read_certificate(std::istream& is) {
    const std::string header = next_content_line(is);
    if (header.empty()) throw parse_error("empty certificate file");
    const auto kv = parse_header(header);
    for (const char* key : {"n", "k", "t", "m"})
        if (!kv.count(key)) throw parse_error(std::string("certificate header needs ") + key);
    ColoringCertificate cert;
    cert.params = {std::stoi(kv.at("n")), std::stoi(kv.at("k")), std::stoi(kv.at("t"))};
    cert.m = std::stoi(kv.at("m"));
    cert.producer = ColoringProducer::external;
    std::string basis_csv, color_hex;
    while (is >> basis_csv >> color_hex) {
        std::vector<std::uint32_t> rows;
        std::istringstream ss(basis_csv);
        std::string part;
        while (std::getline(ss, part, ','))
            rows.push_back(static_cast<std::uint32_t>(parse_hex(part)));
        Subspace u = canonicalize(cert.params.n, rows);
        if (u.dim() != static_cast<int>(rows.size()))
            throw parse_error("certificate basis rows are dependent: " + basis_csv);
        cert.assignment.emplace_back(std::move(u),
                                     static_cast<std::uint32_t>(parse_hex(color_hex)));
    }
    return cert;
}

void write_certificate_file(const std::filesystem::path& path, const ColoringCertificate& cert) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    write_certificate(f, cert);
}

ColoringCertificate read_certificate_file(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    return read_certificate(f);
}

FunctionCatalog read_catalog(std::istream& is, std::string source) {
    FunctionCatalog catalog;
    catalog.source = std::move(source);
    std::string line;
    std::string pending_label;
    std::vector<std::string> block; // lines of the current entry
    auto flush = [&]() {
        if (pending_label.empty()) return;
        if (block.empty()) throw parse_error("entry '" + pending_label + "' has no body");
        std::vector<std::string> tags;
        std::string body;
        for (const auto& l : block) {
            std::istringstream probe(l);
            std::string tok;
            probe >> tok;
            if (tok == "tags:") {
                while (probe >> tok) tags.push_back(tok);
            } else {
                body += l;
                body += '\n';
            }
        }
        std::istringstream body_ss(body);
        FunctionFile ff = read_function(body_ss);
        for (const auto& e : catalog.entries)
            if (e.label == pending_label)
                throw parse_error("duplicate catalog label '" + pending_label + "'");
        catalog.entries.push_back({pending_label, std::move(ff.fn), std::move(tags)});
        block.clear();
    };
    while (std::getline(is, line)) {
        const auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream probe(line);
        std::string tok;
        if (!(probe >> tok)) continue;
        if (tok == "[entry") {
            flush();
            std::string label;
            probe >> label;
            if (label.empty() || label.back() != ']')
                throw parse_error("malformed [entry <label>] line");
            label.pop_back();
            pending_label = label;
        } else {
            if (pending_label.empty()) throw parse_error("content before first [entry] block");
            block.push_back(line);
        }
    }
    flush();
    if (catalog.entries.empty()) throw parse_error("catalog has no entries");
    return catalog;
}

FunctionCatalog read_catalog_file(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    return read_catalog(f, path.string());
}

} // namespace sumfree
