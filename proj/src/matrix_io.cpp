#include "capax/matrix_io.hpp"

#include <sstream>

#include <json.hpp>

#include "capax/errors.hpp"

namespace capax {

namespace {

void write_row(std::ostream& os, const FpVector& row, char sep) {
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) os << sep;
        os << row[j];
    }
}

}  // namespace

std::string to_json(const FpMatrix& m) {
    std::ostringstream os;
    os << "{\"p\": " << m.modulus().value() << ", \"rows\": [";
    for (std::size_t i = 0; i < m.row_count(); ++i) {
        if (i) os << ',';
        os << '[';
        write_row(os, m.row(i), ',');
        os << ']';
    }
    os << "]}\n";
    return os.str();
}

FpMatrix matrix_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("matrix JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("p") || !doc.contains("rows"))
        throw DomainError("matrix JSON: expected an object with \"p\" and \"rows\"");
    const auto& jp = doc["p"];
    if (!jp.is_number_unsigned()) throw DomainError("matrix JSON: \"p\" must be a positive integer");
    const PrimeModulus modulus(jp.get<std::uint64_t>());
    const auto& jrows = doc["rows"];
    if (!jrows.is_array()) throw DomainError("matrix JSON: \"rows\" must be an array");
    std::vector<std::vector<Residue>> rows;
    for (const auto& jr : jrows) {
        if (!jr.is_array()) throw DomainError("matrix JSON: each row must be an array");
        std::vector<Residue> row;
        for (const auto& e : jr) {
            if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= modulus.value())
                throw DomainError("matrix JSON: entries must be canonical residues mod " +
                                  std::to_string(modulus.value()));
            row.push_back(e.get<Residue>());
        }
        rows.push_back(std::move(row));
    }
    return FpMatrix(modulus, rows);
}

std::string to_text(const FpMatrix& m) {
    std::ostringstream os;
    for (const FpVector& row : m.rows()) {
        write_row(os, row, ' ');
        os << '\n';
    }
    return os.str();
}

FpMatrix matrix_from_text(std::string_view text, PrimeModulus modulus) {
    std::vector<std::vector<Residue>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Residue> row;
        long long v;
        while (ls >> v) {
            if (v < 0 || v >= static_cast<long long>(modulus.value()))
                throw DomainError("matrix text: entry " + std::to_string(v) +
                                  " is not a canonical residue");
            row.push_back(static_cast<Residue>(v));
        }
        if (!ls.eof()) throw DomainError("matrix text: non-integer token in \"" + line + "\"");
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return FpMatrix(modulus, rows);
}

}  // namespace capax
