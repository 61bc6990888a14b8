#pragma once

#include <string>
#include <string_view>

#include "capax/code_space.hpp"

namespace capax {

// {"p": 2, "rows": [[1,1,0],[0,1,1]]} followed by a newline.
std::string to_json(const FpMatrix& m);
// Accepts any whitespace layout of the JSON form; throws DomainError when the
// document is malformed, p is not prime or an entry is not a canonical residue.
FpMatrix matrix_from_json(std::string_view text);

// One row per line, entries separated by single spaces, trailing newline.
std::string to_text(const FpMatrix& m);
FpMatrix matrix_from_text(std::string_view text, PrimeModulus modulus);

}  // namespace capax
