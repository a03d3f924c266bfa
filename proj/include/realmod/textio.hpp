#ifndef REALMOD_TEXTIO_HPP
#define REALMOD_TEXTIO_HPP

// Plain-text matrix exchange format:
//   <rows> <cols>
//   <row 0 entries separated by spaces>
//   ...
// Entries are arbitrary-precision integers; formatting and parsing round-trip
// bit-exactly.

#include <iosfwd>
#include <string>

#include "realmod/matrix.hpp"

namespace realmod {

// Throws std::invalid_argument on malformed input (bad header, non-integer
// token, missing entries, trailing garbage).
ExactMatrix parse_matrix(const std::string& text);

std::string format_matrix(const ExactMatrix& m);

ExactMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const ExactMatrix& m);

// Reads a matrix from the named file, or from standard input when the name
// is "-".  Throws std::invalid_argument when the file cannot be opened.
ExactMatrix read_matrix_source(const std::string& path_or_dash);

}  // namespace realmod

#endif  // REALMOD_TEXTIO_HPP
