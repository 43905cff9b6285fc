#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmc/poly_matrix.hpp"

namespace cmc {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_, column_;
};

/// Parses one polynomial expression (+ - * ^, parentheses, integer literals,
/// integer division of constants, declared variables).
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

/// A parsed input file. Statements, each terminated by ';':
///
///   ring F[0] vars x,y,z,w;          # or F[32003], F0, F32003
///   order lex;                       # optional: degrevlex (default) | lex
///   ideal I = z^2, z*x, z*y, x^3;    # name optional; first unnamed is I
///   matrix M[2,4] = z,0,0,-x^2, 0,z,x,y;
///   poly f = x^3 + y^3;
///   set deform = b12, c13;           # identifier list
///   truncate 3;                      # any other `key <int>;`
///
/// `#` and `//` start comments.
struct Document {
    RingPtr ring;
    std::map<std::string, std::vector<Polynomial>> ideals;
    std::map<std::string, PolyMatrix> matrices;
    std::map<std::string, Polynomial> polys;
    std::map<std::string, std::vector<std::string>> lists;
    std::map<std::string, long> ints;

    const std::vector<Polynomial>& ideal(const std::string& name = "I") const;
    const PolyMatrix& matrix(const std::string& name) const;
    std::optional<long> integer(const std::string& key) const;
};

/// `field_override` replaces the coefficient field declared in the file.
Document parse_document(const std::string& text, const std::optional<Field>& field_override = std::nullopt);
Document parse_file(const std::string& path, const std::optional<Field>& field_override = std::nullopt);

} // namespace cmc
