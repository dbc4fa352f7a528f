#pragma once

// JSON and CSV encodings for every value the command-line tool reads or
// writes. Emission is canonical: terms in their container's iteration
// order, object keys in a fixed sequence, doubles rendered round-trip.
// Identical values therefore always serialize to identical bytes.
//
// Parsing validates structure and semantics and reports problems as
// ValidationError; JSON syntax errors surface as the parser's own
// exceptions and are mapped to the same exit code by the caller.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wd/bohr.hpp"
#include "wd/dirichlet.hpp"
#include "wd/hermite.hpp"
#include "wd/symbol.hpp"
#include "wd/torus.hpp"

namespace wd {

using Json = nlohmann::ordered_json;

// Shortest decimal form that parses back to the same double, 17 significant
// digits at most, '.' separator regardless of locale.
std::string format_sig17(double value);

// {"cutoff": N, "terms": [[n, re, im], ...]} with terms sorted by index.
Json to_json(const DirichletSeries& f);
DirichletSeries dirichlet_from_json(const Json& j);

// Bare array of {"alpha": [...], "re": , "im": }; alpha is the trimmed
// exponent tuple. The prime budget is recovered as the largest arity.
Json to_json(const PowerSeries& f);
PowerSeries power_series_from_json(const Json& j);

// {"c0": int, "coeffs": [[n, re, im], ...]}.
Json to_json(const CompositionSymbol& phi);
CompositionSymbol symbol_from_json(const Json& j);

// {"c0": int, "c1": [re, im], "r": int, "cr": x, "cr2": y}.
Json to_json(const QuadraticSymbol& sym);
QuadraticSymbol quadratic_from_json(const Json& j);

// Bare array of {"alpha": [...], "re": , "im": }; alpha carries the full
// arity of the polynomial. dim_hint = 0 infers the dimension from the
// first term (an empty array is then rejected).
Json to_json(const TorusPolynomial& f);
TorusPolynomial tpoly_from_json(const Json& j, std::size_t dim_hint = 0);

// {"matrix": [[...], ...], "signs": [[re, im], ...]}.
Json to_json(const MonomialSymbol& sym);
MonomialSymbol monomial_from_json(const Json& j);

// {"components": [polynomial terms, ...]}; all components share one
// dimension, inferred from any term present.
Json to_json(const GeneralSymbol& sym);
GeneralSymbol general_from_json(const Json& j);

// CSV bodies, header included, one row per line, LF separators.
std::string csv_series(const DirichletSeries& f);  // n,re,im
std::string csv_norm_rows(
    const std::vector<std::pair<std::uint64_t, double>>& rows,
    const std::string& value_column);  // n,<value_column>
// n,closed_form_norm,lower_bound; absent lower bounds leave the field empty.
struct QuadraticRow {
    std::uint64_t n;
    double closed_form;
    bool has_lower;
    double lower;
};
std::string csv_quadratic_rows(const std::vector<QuadraticRow>& rows);

}  // namespace wd
