#include "bandix/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace bandix {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream ss(raw);
        Line line{number, {}};
        std::string tok;
        while (ss >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

Vector<Rational> values(const Line& line, std::size_t first, std::size_t expected,
                        const std::string& what) {
    const std::size_t got = line.tokens.size() - first;
    if (got != expected) {
        throw ParseError(line.number, what + ": expected " + std::to_string(expected) +
                                          " values, got " + std::to_string(got));
    }
    Vector<Rational> out;
    out.reserve(expected);
    for (std::size_t k = first; k < line.tokens.size(); ++k) {
        try {
            out.push_back(Rational::parse(line.tokens[k]));
        } catch (const InvalidInput& e) {
            throw ParseError(line.number, what + ": " + e.what());
        }
    }
    return out;
}

std::size_t parse_dimension(const Line& header) {
    if (header.tokens.size() != 2) {
        throw ParseError(header.number, "header must be `penta N` or `tri N`");
    }
    const std::string& s = header.tokens[1];
    std::size_t n = 0;
    std::size_t used = 0;
    try {
        n = std::stoul(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty() || s[0] == '-') {
        throw ParseError(header.number, "invalid dimension `" + s + "`");
    }
    return n;
}

void write_row(std::ostream& out, ConstView<Rational> v) {
    for (std::size_t k = 0; k < v.size(); ++k) {
        out << (k ? " " : "") << v[k].to_string();
    }
    out << '\n';
}

}  // namespace

std::size_t MatrixFile::n() const {
    return std::visit([](const auto& m) { return m.n(); }, matrix);
}

MatrixFile parse_matrix(std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.empty()) {
        throw ParseError(0, "empty matrix file");
    }
    const Line& header = lines[0];
    const std::string& kind = header.tokens[0];
    if (kind != "penta" && kind != "tri") {
        throw ParseError(header.number, "unknown matrix kind `" + kind + "`");
    }
    const bool penta = kind == "penta";
    const std::size_t n = parse_dimension(header);
    if (penta && n < 3) throw ParseError(header.number, "penta requires N >= 3");
    if (!penta && n < 2) throw ParseError(header.number, "tri requires N >= 2");

    const std::vector<std::pair<std::string, std::size_t>> layout =
        penta ? std::vector<std::pair<std::string, std::size_t>>{{"sub2", n - 2},
                                                                 {"sub1", n - 1},
                                                                 {"main", n},
                                                                 {"sup1", n - 1},
                                                                 {"sup2", n - 2}}
              : std::vector<std::pair<std::string, std::size_t>>{
                    {"sub1", n - 1}, {"main", n}, {"sup1", n - 1}};
    if (lines.size() < 1 + layout.size()) {
        const std::size_t last = lines.back().number;
        throw ParseError(last, "expected " + std::to_string(layout.size()) + " diagonal lines");
    }
    std::vector<Vector<Rational>> diags;
    for (std::size_t d = 0; d < layout.size(); ++d) {
        diags.push_back(values(lines[1 + d], 0, layout[d].second, layout[d].first));
    }

    MatrixFile file{penta ? decltype(MatrixFile::matrix){PentaMatrix<Rational>(
                                std::move(diags[0]), std::move(diags[1]), std::move(diags[2]),
                                std::move(diags[3]), std::move(diags[4]))}
                          : decltype(MatrixFile::matrix){TriMatrix<Rational>(
                                std::move(diags[0]), std::move(diags[1]), std::move(diags[2]))},
                    std::nullopt};

    std::size_t next = 1 + layout.size();
    if (next < lines.size()) {
        const Line& tag = lines[next];
        if (tag.tokens[0] != "rhs") {
            throw ParseError(tag.number, "unexpected content `" + tag.tokens[0] + "`");
        }
        if (tag.tokens.size() > 1) {
            file.rhs = values(tag, 1, n, "rhs");
            ++next;
        } else {
            if (next + 1 >= lines.size()) {
                throw ParseError(tag.number, "rhs: missing values");
            }
            file.rhs = values(lines[next + 1], 0, n, "rhs");
            next += 2;
        }
        if (next < lines.size()) {
            throw ParseError(lines[next].number, "trailing content after rhs");
        }
    }
    return file;
}

MatrixFile parse_matrix_string(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open matrix file `" + path + "`");
    }
    return parse_matrix(in);
}

void write_matrix(std::ostream& out, const PentaMatrix<Rational>& a, const Vector<Rational>* rhs) {
    out << "penta " << a.n() << '\n';
    write_row(out, a.sub2());
    write_row(out, a.sub1());
    write_row(out, a.main());
    write_row(out, a.sup1());
    write_row(out, a.sup2());
    if (rhs != nullptr) {
        out << "rhs\n";
        write_row(out, *rhs);
    }
}

void write_matrix(std::ostream& out, const TriMatrix<Rational>& t, const Vector<Rational>* rhs) {
    out << "tri " << t.n() << '\n';
    write_row(out, t.sub1());
    write_row(out, t.main());
    write_row(out, t.sup1());
    if (rhs != nullptr) {
        out << "rhs\n";
        write_row(out, *rhs);
    }
}

}  // namespace bandix
