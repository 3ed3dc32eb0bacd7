#pragma once

#include <string>
#include <string_view>

#include "conlab/laurent.hpp"
#include "conlab/magnus.hpp"
#include "conlab/weighted_graph.hpp"

namespace conlab {

// Sum of terms [+-][coeff][*][t[^exp]] with integer or p/q coefficients and
// integer exponents; the variable may be t or z but not both.  Repeated
// exponents are summed.  Whitespace may separate tokens but not split them.
LaurentPolynomial parse_poly(std::string_view text);

// graph <n>
// vertex <label>          (n times)
// edge <u> <v> <rational> (nonzero weight, each pair at most once)
// Blank lines and lines starting with '#' are ignored.
WeightedGraph parse_graph(std::string_view text);
std::string format_graph(const WeightedGraph& g);

// strands <m>
// longitude <j>: <signed letters>   (one line per strand j = 1..m)
StringLinkLongitudes parse_longitudes(std::string_view text);
std::string format_longitudes(const StringLinkLongitudes& link);

}  // namespace conlab
