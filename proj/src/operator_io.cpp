#include "rbjordan/operator_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace rbjordan {
namespace {

std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
        if (!line.empty() && line.front() != '#') lines.emplace_back(line);
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return lines;
}

std::vector<Scalar> parse_row(const Field& f, std::string_view text) {
    std::vector<Scalar> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view part =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        out.push_back(Scalar::parse(f, part));
        if (comma == std::string_view::npos) return out;
        start = comma + 1;
    }
}

} // namespace

LinOperator parse_operator(std::string_view text) {
    std::vector<std::string> lines = content_lines(text);
    if (lines.size() < 2 || lines[0].rfind("field ", 0) != 0 || lines[1].rfind("form ", 0) != 0) {
        throw ParseError("operator file must start with 'field <descriptor>' and 'form <d1,..,dn>'");
    }
    Field f = Field::parse(std::string_view(lines[0]).substr(6));
    BilinearForm form = BilinearForm::parse(f, std::string_view(lines[1]).substr(5));
    CliffordAlgebra algebra(f, form);

    std::size_t dim = algebra.dim();
    if (lines.size() != 2 + dim) {
        throw ParseError("expected " + std::to_string(dim) + " matrix rows, found " +
                         std::to_string(lines.size() - 2));
    }
    ScalarMatrix M(f, dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        std::vector<Scalar> row = parse_row(f, lines[2 + r]);
        if (row.size() != dim) {
            throw ParseError("row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(dim));
        }
        for (std::size_t c = 0; c < dim; ++c) M.at(r, c) = row[c];
    }
    return LinOperator(std::move(algebra), std::move(M));
}

LinOperator read_operator(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_operator(buffer.str());
}

std::string write_operator(const LinOperator& op) {
    std::ostringstream out;
    out << "field " << op.algebra.field().descriptor() << '\n';
    out << "form " << op.algebra.form().str() << '\n';
    for (std::size_t r = 0; r < op.algebra.dim(); ++r) {
        for (std::size_t c = 0; c < op.algebra.dim(); ++c) {
            if (c > 0) out << ',';
            out << op.M.at(r, c).str();
        }
        out << '\n';
    }
    return out.str();
}

} // namespace rbjordan
