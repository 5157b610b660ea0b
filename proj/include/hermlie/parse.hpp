#pragma once

// Structure-equation ingestion. Two text forms are accepted:
//   * Salamon tuple:  (0,0,0,0,13+42,14+23)   with optional rational
//     multipliers, e.g. (0,0,0,0,3/2 12,34)
//   * equation list:  one "deK = <sum of coeff eIJ>" per line
// plus a JSON mirror {"de":[[[i,j,"p/q"],...],...]}. Reversed index pairs
// like "42" are normalized by sign to e^{24}.

#include <string>

#include "hermlie/lie_algebra.hpp"

namespace hermlie {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(std::string msg, int l, int c)
      : std::runtime_error(std::move(msg) + " (line " + std::to_string(l) +
                           ", column " + std::to_string(c) + ")"),
        line(l),
        column(c) {}
};

LieAlgebra<Rational> parse_structure_equations(const std::string& text);

/// Canonical equation-list form; parse(serialize(g)) == g.
std::string serialize_structure_equations(const LieAlgebra<Rational>& g);

LieAlgebra<Rational> lie_algebra_from_json(const std::string& json_text);
std::string lie_algebra_to_json(const LieAlgebra<Rational>& g);

}  // namespace hermlie
