#include "wd/serialize.hpp"

#include <charconv>
#include <limits>
#include <map>
#include <string>

#include "wd/errors.hpp"

namespace wd {

namespace {

const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object()) {
        throw ValidationError(std::string("expected an object with \"") + key +
                              "\"");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw ValidationError(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

double read_double(const Json& j, const std::string& what) {
    if (!j.is_number()) {
        throw ValidationError(what + ": expected a number");
    }
    return j.get<double>();
}

std::uint64_t read_u64(const Json& j, const std::string& what) {
    if (!j.is_number_unsigned()) {
        throw ValidationError(what + ": expected a non-negative integer");
    }
    return j.get<std::uint64_t>();
}

std::uint32_t read_u32(const Json& j, const std::string& what) {
    const std::uint64_t v = read_u64(j, what);
    if (v > std::numeric_limits<std::uint32_t>::max()) {
        throw ValidationError(what + ": value does not fit in 32 bits");
    }
    return static_cast<std::uint32_t>(v);
}

// [re, im] pair.
Complex read_complex(const Json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2) {
        throw ValidationError(what + ": expected [re, im]");
    }
    return {read_double(j[0], what + "[0]"), read_double(j[1], what + "[1]")};
}

// [n, re, im] triple used by Dirichlet-indexed coefficient lists.
std::pair<std::uint64_t, Complex> read_triple(const Json& j,
                                              const std::string& what) {
    if (!j.is_array() || j.size() != 3) {
        throw ValidationError(what + ": expected [n, re, im]");
    }
    const std::uint64_t n = read_u64(j[0], what + " index");
    return {n, Complex(read_double(j[1], what + " re"),
                       read_double(j[2], what + " im"))};
}

std::vector<std::uint32_t> read_alpha(const Json& j, const std::string& what) {
    if (!j.is_array()) {
        throw ValidationError(what + ": expected an exponent array");
    }
    std::vector<std::uint32_t> alpha;
    alpha.reserve(j.size());
    for (const auto& entry : j) {
        alpha.push_back(read_u32(entry, what + " entry"));
    }
    return alpha;
}

Json term_object(const std::vector<std::uint32_t>& alpha, Complex c) {
    Json t = Json::object();
    t["alpha"] = alpha;
    t["re"] = c.real();
    t["im"] = c.imag();
    return t;
}

}  // namespace

std::string format_sig17(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

Json to_json(const DirichletSeries& f) {
    Json terms = Json::array();
    for (const auto& [n, c] : f.terms()) {
        terms.push_back(Json::array({n, c.real(), c.imag()}));
    }
    Json out = Json::object();
    out["cutoff"] = f.cutoff();
    out["terms"] = std::move(terms);
    return out;
}

DirichletSeries dirichlet_from_json(const Json& j) {
    const std::uint64_t cutoff = read_u64(require_field(j, "cutoff"), "cutoff");
    const Json& terms = require_field(j, "terms");
    if (!terms.is_array()) {
        throw ValidationError("\"terms\": expected an array");
    }
    DirichletSeries f(cutoff);
    for (const auto& t : terms) {
        const auto [n, c] = read_triple(t, "series term");
        f.add_to(n, c);
    }
    return f;
}

Json to_json(const PowerSeries& f) {
    Json out = Json::array();
    for (const auto& [alpha, c] : f.terms()) {
        out.push_back(term_object(alpha.exps(), c));
    }
    return out;
}

PowerSeries power_series_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ValidationError("power series: expected an array of terms");
    }
    std::vector<std::pair<ExponentVector, Complex>> parsed;
    parsed.reserve(j.size());
    std::size_t budget = 0;
    for (const auto& t : j) {
        ExponentVector alpha(read_alpha(require_field(t, "alpha"), "alpha"));
        const Complex c(read_double(require_field(t, "re"), "re"),
                        read_double(require_field(t, "im"), "im"));
        budget = std::max(budget, alpha.positions());
        parsed.emplace_back(std::move(alpha), c);
    }
    PowerSeries f(budget);
    for (const auto& [alpha, c] : parsed) f.add_to(alpha, c);
    return f;
}

Json to_json(const CompositionSymbol& phi) {
    Json coeffs = Json::array();
    for (const auto& [n, c] : phi.coeffs()) {
        coeffs.push_back(Json::array({n, c.real(), c.imag()}));
    }
    Json out = Json::object();
    out["c0"] = phi.c0();
    out["coeffs"] = std::move(coeffs);
    return out;
}

CompositionSymbol symbol_from_json(const Json& j) {
    const std::uint32_t c0 = read_u32(require_field(j, "c0"), "c0");
    const Json& coeffs = require_field(j, "coeffs");
    if (!coeffs.is_array()) {
        throw ValidationError("\"coeffs\": expected an array");
    }
    std::map<std::uint64_t, Complex> parsed;
    for (const auto& t : coeffs) {
        const auto [n, c] = read_triple(t, "symbol coefficient");
        parsed[n] += c;
    }
    return CompositionSymbol(c0, std::move(parsed));
}

Json to_json(const QuadraticSymbol& sym) {
    Json out = Json::object();
    out["c0"] = sym.c0;
    out["c1"] = Json::array({sym.c1.real(), sym.c1.imag()});
    out["r"] = sym.r;
    out["cr"] = sym.cr;
    out["cr2"] = sym.cr2;
    return out;
}

QuadraticSymbol quadratic_from_json(const Json& j) {
    const std::uint32_t c0 = read_u32(require_field(j, "c0"), "c0");
    const Complex c1 = read_complex(require_field(j, "c1"), "c1");
    const std::uint64_t r = read_u64(require_field(j, "r"), "r");
    const double cr = read_double(require_field(j, "cr"), "cr");
    const double cr2 = read_double(require_field(j, "cr2"), "cr2");
    return QuadraticSymbol(c0, c1, r, cr, cr2);
}

Json to_json(const TorusPolynomial& f) {
    Json out = Json::array();
    for (const auto& [alpha, c] : f.terms()) {
        out.push_back(term_object(alpha, c));
    }
    return out;
}

TorusPolynomial tpoly_from_json(const Json& j, std::size_t dim_hint) {
    if (!j.is_array()) {
        throw ValidationError("polynomial: expected an array of terms");
    }
    std::size_t dim = dim_hint;
    if (dim == 0) {
        if (j.empty()) {
            throw ValidationError(
                "polynomial: cannot infer the dimension of an empty term list");
        }
        dim = require_field(j.front(), "alpha").size();
        if (dim == 0) {
            throw ValidationError("polynomial: empty exponent tuple");
        }
    }
    TorusPolynomial f(dim);
    for (const auto& t : j) {
        const MultiIndex alpha =
            read_alpha(require_field(t, "alpha"), "alpha");
        const Complex c(read_double(require_field(t, "re"), "re"),
                        read_double(require_field(t, "im"), "im"));
        f.add_to(alpha, c);
    }
    return f;
}

Json to_json(const MonomialSymbol& sym) {
    Json out = Json::object();
    out["matrix"] = sym.matrix;
    Json signs = Json::array();
    for (Complex s : sym.signs) {
        signs.push_back(Json::array({s.real(), s.imag()}));
    }
    out["signs"] = std::move(signs);
    return out;
}

MonomialSymbol monomial_from_json(const Json& j) {
    const Json& matrix = require_field(j, "matrix");
    if (!matrix.is_array() || matrix.empty()) {
        throw ValidationError("\"matrix\": expected a non-empty array of rows");
    }
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(matrix.size());
    for (const auto& row : matrix) {
        rows.push_back(read_alpha(row, "matrix row"));
    }
    const Json& signs = require_field(j, "signs");
    if (!signs.is_array()) {
        throw ValidationError("\"signs\": expected an array of [re, im] pairs");
    }
    std::vector<Complex> parsed_signs;
    parsed_signs.reserve(signs.size());
    for (const auto& s : signs) {
        parsed_signs.push_back(read_complex(s, "sign"));
    }
    return MonomialSymbol(std::move(rows), std::move(parsed_signs));
}

Json to_json(const GeneralSymbol& sym) {
    Json components = Json::array();
    for (const auto& c : sym.components()) components.push_back(to_json(c));
    Json out = Json::object();
    out["components"] = std::move(components);
    return out;
}

GeneralSymbol general_from_json(const Json& j) {
    const Json& components = require_field(j, "components");
    if (!components.is_array() || components.empty()) {
        throw ValidationError(
            "\"components\": expected a non-empty array of polynomials");
    }
    // One shared dimension, read off any term of any component.
    std::size_t dim = 0;
    for (const auto& c : components) {
        if (c.is_array() && !c.empty()) {
            dim = require_field(c.front(), "alpha").size();
            break;
        }
    }
    if (dim == 0) {
        throw ValidationError(
            "\"components\": no terms anywhere; dimension cannot be inferred");
    }
    std::vector<TorusPolynomial> parsed;
    parsed.reserve(components.size());
    for (const auto& c : components) {
        parsed.push_back(tpoly_from_json(c, dim));
    }
    return GeneralSymbol(std::move(parsed));
}

std::string csv_series(const DirichletSeries& f) {
    std::string out = "n,re,im\n";
    for (const auto& [n, c] : f.terms()) {
        out += std::to_string(n);
        out += ',';
        out += format_sig17(c.real());
        out += ',';
        out += format_sig17(c.imag());
        out += '\n';
    }
    return out;
}

std::string csv_norm_rows(
    const std::vector<std::pair<std::uint64_t, double>>& rows,
    const std::string& value_column) {
    std::string out = "n," + value_column + "\n";
    for (const auto& [n, value] : rows) {
        out += std::to_string(n);
        out += ',';
        out += format_sig17(value);
        out += '\n';
    }
    return out;
}

std::string csv_quadratic_rows(const std::vector<QuadraticRow>& rows) {
    std::string out = "n,closed_form_norm,lower_bound\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n);
        out += ',';
        out += format_sig17(row.closed_form);
        out += ',';
        if (row.has_lower) out += format_sig17(row.lower);
        out += '\n';
    }
    return out;
}

}  // namespace wd
