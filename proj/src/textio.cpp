#include "realmod/textio.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace realmod {

namespace {

Int parse_int(const std::string& tok) {
  // mpz_class's string constructor accepts some forms we do not want
  // (whitespace); validate the token shape first.
  if (tok.empty()) throw std::invalid_argument("empty integer token");
  std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (start == tok.size())
    throw std::invalid_argument("bad integer token: " + tok);
  for (std::size_t i = start; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9')
      throw std::invalid_argument("bad integer token: " + tok);
  return Int(tok);
}

long parse_dim(const std::string& tok) {
  Int v = parse_int(tok);
  if (v < 1 || v > 4096)
    throw std::invalid_argument("matrix dimension out of range: " + tok);
  return v.get_si();
}

}  // namespace

ExactMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  ExactMatrix m = read_matrix(in);
  std::string extra;
  if (in >> extra)
    throw std::invalid_argument("trailing text after matrix: " + extra);
  return m;
}

ExactMatrix read_matrix(std::istream& in) {
  std::string rtok, ctok;
  if (!(in >> rtok >> ctok))
    throw std::invalid_argument("missing matrix header line");
  const long rows = parse_dim(rtok);
  const long cols = parse_dim(ctok);
  ExactMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) {
      std::string tok;
      if (!(in >> tok))
        throw std::invalid_argument("matrix ends before all entries are read");
      m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
          parse_int(tok);
    }
  return m;
}

std::string format_matrix(const ExactMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

void write_matrix(std::ostream& out, const ExactMatrix& m) {
  out << m.rows() << " " << m.cols() << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << " ";
      out << m.at(r, c).get_str();
    }
    out << "\n";
  }
}

ExactMatrix read_matrix_source(const std::string& path_or_dash) {
  if (path_or_dash == "-") return read_matrix(std::cin);
  std::ifstream f(path_or_dash);
  if (!f) throw std::invalid_argument("cannot open file: " + path_or_dash);
  return read_matrix(f);
}

}  // namespace realmod
