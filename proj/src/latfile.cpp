#include "ffgeom/latfile.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "ffgeom/errors.hpp"
#include "ffgeom/parse.hpp"

namespace ffgeom {

namespace {

// next meaningful line, comments stripped
std::optional<std::string> next_line(std::istream& in, std::size_t& lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) return line;
    }
    return std::nullopt;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
    throw ParseError(lineno, what + " (lattice file, line " + std::to_string(lineno) + ")");
}

}  // namespace

LatticeBasis read_lattice(std::istream& in) {
    std::size_t lineno = 0;

    auto expect_kv = [&](const char* key) -> std::string {
        auto line = next_line(in, lineno);
        if (!line) fail(lineno, std::string("'") + key + "' line");
        std::istringstream ss(*line);
        std::string k, v, extra;
        ss >> k >> v;
        if (k != key || v.empty() || (ss >> extra)) fail(lineno, std::string("'") + key + " <value>'");
        return v;
    };

    unsigned long p = 0, d = 0;
    try {
        p = std::stoul(expect_kv("q"));
        d = std::stoul(expect_kv("d"));
    } catch (const std::logic_error&) {
        fail(lineno, "integer value");
    }
    if (d < 2 || d > 8) fail(lineno, "dimension in [2, 8]");
    FieldSpec field(static_cast<std::uint32_t>(p));

    KMatrix g(field.p(), d, d);
    for (std::size_t i = 0; i < d; ++i) {
        auto line = next_line(in, lineno);
        if (!line) fail(lineno, "'row' line");
        std::istringstream ss(*line);
        std::string key;
        ss >> key;
        if (key != "row") fail(lineno, "'row'");
        for (std::size_t j = 0; j < d; ++j) {
            std::string tok;
            if (!(ss >> tok)) fail(lineno, "entry " + std::to_string(j + 1));
            g.at(i, j) = parse_ratfunc(field, tok);
        }
        std::string extra;
        if (ss >> extra) fail(lineno, "end of row");
    }
    return LatticeBasis(field, std::move(g));
}

LatticeBasis read_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open lattice file: " + path);
    return read_lattice(in);
}

void write_lattice(std::ostream& out, const LatticeBasis& L) {
    out << "q " << L.field().p() << "\n";
    out << "d " << L.dim() << "\n";
    for (int i = 0; i < L.dim(); ++i) {
        out << "row";
        for (int j = 0; j < L.dim(); ++j)
            out << ' '
                << format_ratfunc(L.basis().at(static_cast<std::size_t>(i),
                                               static_cast<std::size_t>(j)));
        out << "\n";
    }
}

void write_lattice_file(const std::string& path, const LatticeBasis& L) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open lattice file for writing: " + path);
    write_lattice(out, L);
}

}  // namespace ffgeom
