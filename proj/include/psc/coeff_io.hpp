#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "psc/unipoly.hpp"

namespace psc {

// Coefficient files: ASCII decimal residues in [0, p), lowest degree first,
// separated by any whitespace. An empty file is the zero polynomial.

class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, std::size_t token_index, const std::string& detail);

    const std::string& source() const noexcept { return source_; }
    /// 0-based index of the offending token; npos when the file is unreadable.
    std::size_t token_index() const noexcept { return token_index_; }

private:
    std::string source_;
    std::size_t token_index_;
};

UniPoly parse_coefficients(std::string_view text, const PrimeModulus& m,
                           const std::string& source = "<input>");
UniPoly read_coefficient_file(const std::filesystem::path& path, const PrimeModulus& m);

/// Space-separated residues followed by a newline.
std::string format_coefficients(const UniPoly& f);

}  // namespace psc
