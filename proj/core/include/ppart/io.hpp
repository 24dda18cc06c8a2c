#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "ppart/bipolynomial.hpp"
#include "ppart/chromatic.hpp"
#include "ppart/int_polynomial.hpp"
#include "ppart/multi_polynomial.hpp"
#include "ppart/poset.hpp"
#include "ppart/rational_polynomial.hpp"

namespace ppart {

/// {"p": 3, "covers": [[2,1],[2,3]], "labels": [...]}, 1-based; labels
/// default to natural. Throws FormatError.
LabeledPoset poset_from_json(std::string_view text);
std::string poset_to_json(const LabeledPoset& P);

/// {"n": 3, "edges": [[1,2],[2,3]]}, 1-based.
SimpleGraph graph_from_json(std::string_view text);
std::string graph_to_json(const SimpleGraph& G);

/// {"outer": [...], "inner": [...]}; inner defaults to zeros.
std::pair<Partition, Partition> shape_from_json(std::string_view text);
std::string shape_to_json(const Partition& outer, const Partition& inner);

std::string read_text_file(const std::string& path);

/// Keys "t^i q^j", values decimal strings.
using CoefficientMap = std::map<std::string, std::string>;

CoefficientMap to_coefficient_map(const BiPolynomial& f);
BiPolynomial bipolynomial_from_map(const CoefficientMap& m);
/// Exponents of a univariate polynomial go on `var` ('t' or 'q').
CoefficientMap to_coefficient_map(const IntPolynomial& f, char var);
IntPolynomial int_polynomial_from_map(const CoefficientMap& m, char var);
/// Keys "m^i", values exact rationals "a/b".
CoefficientMap to_coefficient_map(const RationalPolynomial& f, char var);
RationalPolynomial rational_polynomial_from_map(const CoefficientMap& m, char var);
/// Keys are comma-joined exponent vectors, e.g. "1,0,2".
CoefficientMap to_coefficient_map(const MultiPolynomial& f);
MultiPolynomial multi_polynomial_from_map(const CoefficientMap& m, int n_vars);

}  // namespace ppart
