#pragma once

// Text and JSON forms.
//
// Matrix JSON: {"n": n, "entries": [[[exp, num, den], ...], ...]} with one list
// of terms per entry, rows outermost, exponents ascending. Numerators and
// denominators that do not fit in 64 bits are written as decimal strings.
//
// Human grammar: an entry is a sum of terms "coef*t^exp" joined by + or -, with
// coef an integer or a/b. "t", "t^-2", "3" and "-1/2*t" are all terms. A matrix
// is one row per line with entries separated by ';'. Blank lines and lines
// starting with '#' are skipped.

#include <string>

#include "json.hpp"

#include "affcells/affine_permutation.hpp"
#include "affcells/laurent_matrix.hpp"
#include "affcells/tableau.hpp"

namespace affcells {

using Json = nlohmann::ordered_json;

Json laurent_matrix_to_json(const LaurentMatrix& m);
/// Throws ParseError on a malformed document.
LaurentMatrix laurent_matrix_from_json(const Json& doc);

std::string format_laurent(const Laurent& p);
/// Throws ParseError.
Laurent parse_laurent(const std::string& text);

std::string format_laurent_matrix(const LaurentMatrix& m);
/// Throws ParseError, including for ragged or non-square input.
LaurentMatrix parse_laurent_matrix_text(const std::string& text);

/// JSON when the first non-blank character is '{', the human grammar otherwise.
LaurentMatrix read_laurent_matrix(const std::string& text);

/// {"n", "sigma", "exps", "window", "matrix"}.
Json permutation_to_json(const AffinePermutation& w);
/// Reads {"n", "sigma", "exps"}; other fields are ignored. Throws ParseError.
AffinePermutation permutation_from_json(const Json& doc);

Json tableau_to_json(const ParabolicTableau& tab);

/// Comma separated integers, e.g. "1,5,9,11". Empty text gives an empty list.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace affcells
