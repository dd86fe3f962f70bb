#include "psc/coeff_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace psc {

namespace {

std::string describe(const std::string& source, std::size_t token_index, const std::string& detail) {
    std::ostringstream os;
    os << source;
    if (token_index != std::string::npos) os << ": token " << token_index;
    os << ": " << detail;
    return os.str();
}

}  // namespace

ParseError::ParseError(std::string source, std::size_t token_index, const std::string& detail)
    : std::runtime_error(describe(source, token_index, detail)),
      source_(std::move(source)),
      token_index_(token_index) {}

UniPoly parse_coefficients(std::string_view text, const PrimeModulus& m, const std::string& source) {
    std::vector<FieldElem> coeffs;
    std::size_t pos = 0;
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (true) {
        while (pos < text.size() && is_space(text[pos])) ++pos;
        if (pos == text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !is_space(text[end])) ++end;
        const std::string_view token = text.substr(pos, end - pos);
        const std::size_t index = coeffs.size();

        u64 value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec == std::errc::result_out_of_range) {
            throw ParseError(source, index, "value '" + std::string(token) + "' out of range");
        }
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw ParseError(source, index, "'" + std::string(token) + "' is not a decimal integer");
        }
        if (value >= m.value()) {
            throw ParseError(source, index,
                             "residue " + std::string(token) + " is not below the modulus " +
                                 std::to_string(m.value()));
        }
        coeffs.push_back(FieldElem{value});
        pos = end;
    }
    return UniPoly(std::move(coeffs));
}

UniPoly read_coefficient_file(const std::filesystem::path& path, const PrimeModulus& m) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), std::string::npos, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_coefficients(buf.str(), m, path.string());
}

std::string format_coefficients(const UniPoly& f) {
    std::string out;
    for (std::size_t i = 0; i < f.len(); ++i) {
        if (i) out += ' ';
        out += std::to_string(f[i].value);
    }
    out += '\n';
    return out;
}

}  // namespace psc
