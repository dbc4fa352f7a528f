// wdop: one-shot analysis jobs for composition symbols.
//
// Reads a JSON specification file, dispatches to the matching analyzer and
// writes a deterministic JSON or CSV report: identical inputs and flags
// always produce byte-identical payloads. Run metadata (timing, thread
// count) goes to a separate <output>.meta.json sidecar so it never
// perturbs the report itself.
//
// Exit codes: 0 success, 2 validation failure (bad flags, malformed or
// semantically invalid input), 3 computation failure (overflow and
// friends). Errors are mirrored as a JSON object on stderr.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wd/bohr.hpp"
#include "wd/dirichlet.hpp"
#include "wd/errors.hpp"
#include "wd/hermite.hpp"
#include "wd/numeric.hpp"
#include "wd/serialize.hpp"
#include "wd/symbol.hpp"
#include "wd/torus.hpp"

namespace {

struct JobSpec {
    std::string command;
    std::string input_path;
    std::string output_path;
    std::uint64_t cutoff = 1ull << 20;
    std::uint64_t n_max = 64;
    std::uint64_t degree_bound = 6;
    std::string format = "json";
};

const wd::Json& field(const wd::Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw wd::ValidationError(std::string("missing field \"") + key +
                                  "\"");
    }
    return j.at(key);
}

void require_json_format(const JobSpec& spec) {
    if (spec.format != "json") {
        throw wd::ValidationError("command \"" + spec.command +
                                  "\" has no csv form; use --format json");
    }
}

wd::Json norm_pairs(
    const std::vector<std::pair<std::uint64_t, double>>& rows) {
    wd::Json out = wd::Json::array();
    for (const auto& [n, v] : rows) out.push_back(wd::Json::array({n, v}));
    return out;
}

wd::Json witness_json(
    const std::optional<std::pair<wd::MultiIndex, wd::MultiIndex>>& w) {
    if (!w) return nullptr;
    return wd::Json::array({w->first, w->second});
}

std::string run_analyze(const wd::Json& in, const JobSpec& spec) {
    const wd::CompositionSymbol phi = wd::symbol_from_json(in);
    const wd::OperatorDiagnosis diag = wd::sufficient_condition(phi);
    const bool isometry = wd::dirichlet_isometry_check(phi);
    const auto norms = wd::norm_sequence(phi, spec.n_max, spec.cutoff);
    if (spec.format == "csv") {
        return wd::csv_norm_rows(norms, "partial_norm");
    }
    wd::Json report = wd::Json::object();
    report["verdict"] = wd::verdict_name(diag.verdict);
    report["evidence"] = diag.evidence;
    report["isometry"] = isometry;
    report["norms"] = norm_pairs(norms);
    return report.dump(2) + "\n";
}

std::string run_quadratic(const wd::Json& in, const JobSpec& spec) {
    const wd::QuadraticSymbol sym = wd::quadratic_from_json(in);
    const wd::OperatorDiagnosis diag = wd::classify(sym);
    const bool has_lower = sym.cr <= 4.0 * sym.cr2;
    std::vector<wd::QuadraticRow> rows;
    rows.reserve(spec.n_max);
    for (std::uint64_t n = 1; n <= spec.n_max; ++n) {
        wd::QuadraticRow row;
        row.n = n;
        row.closed_form = wd::closed_form_norm_auto(sym, n, 1e-12).value;
        row.has_lower = has_lower;
        row.lower = has_lower ? wd::lower_bound(sym, n) : 0.0;
        rows.push_back(row);
    }
    if (spec.format == "csv") {
        return wd::csv_quadratic_rows(rows);
    }
    wd::Json table = wd::Json::array();
    for (const auto& row : rows) {
        wd::Json entry =
            wd::Json::array({row.n, row.closed_form});
        if (row.has_lower) {
            entry.push_back(row.lower);
        } else {
            entry.push_back(nullptr);
        }
        table.push_back(std::move(entry));
    }
    wd::Json report = wd::Json::object();
    report["verdict"] = wd::verdict_name(diag.verdict);
    report["evidence"] = diag.evidence;
    report["threshold"] = wd::growth_threshold(sym);
    report["norms"] = std::move(table);
    return report.dump(2) + "\n";
}

std::string run_lift(const wd::Json& in, const JobSpec& spec) {
    require_json_format(spec);
    const wd::DirichletSeries f = wd::dirichlet_from_json(in);
    return wd::to_json(wd::lift(f)).dump(2) + "\n";
}

std::string run_unlift(const wd::Json& in, const JobSpec& spec) {
    const wd::PowerSeries lifted = wd::power_series_from_json(in);
    const wd::DirichletSeries f = wd::inverse_lift(lifted);
    if (spec.format == "csv") return wd::csv_series(f);
    return wd::to_json(f).dump(2) + "\n";
}

std::string run_torus_isometry(const wd::Json& in, const JobSpec& spec) {
    require_json_format(spec);
    wd::Json report = wd::Json::object();
    if (in.is_object() && in.contains("matrix")) {
        const wd::MonomialSymbol sym = wd::monomial_from_json(in);
        const auto rep = wd::isometry_check_monomial(sym, spec.degree_bound);
        report["kind"] = "monomial";
        report["is_isometry"] = rep.is_isometry;
        report["determinant"] =
            rep.determinant ? wd::Json(rep.determinant->str()) : nullptr;
        report["witness"] = witness_json(rep.witness);
    } else if (in.is_object() && in.contains("components")) {
        const wd::GeneralSymbol sym = wd::general_from_json(in);
        const auto rep = wd::isometry_check_general(sym, spec.degree_bound);
        report["kind"] = "general";
        report["conditions_a"] = rep.conditions_a;
        report["conditions_b"] = rep.conditions_b;
        report["isometry"] = rep.conditions_a && rep.conditions_b;
        report["degree_bound"] = rep.degree_bound;
        report["witness"] = witness_json(rep.witness);
    } else {
        throw wd::ValidationError(
            "symbol file must contain \"matrix\" (monomial) or "
            "\"components\" (general)");
    }
    return report.dump(2) + "\n";
}

std::string run_torus_automorphism(const wd::Json& in, const JobSpec& spec) {
    require_json_format(spec);
    const wd::MonomialSymbol sym = wd::monomial_from_json(in);
    wd::Json report = wd::Json::object();
    report["automorphism"] = wd::automorphism_check(sym);
    return report.dump(2) + "\n";
}

std::string run_growth(const wd::Json& in, const JobSpec& spec) {
    const wd::Json& kind = field(in, "kind");
    if (!kind.is_string()) {
        throw wd::ValidationError("\"kind\": expected a string");
    }
    std::vector<std::pair<std::uint64_t, double>> norms;
    if (kind == "polynomial") {
        const wd::TorusPolynomial p = wd::tpoly_from_json(field(in, "terms"));
        norms = wd::newman_boundedness_probe(p, spec.n_max);
    } else if (kind == "blaschke") {
        const wd::Json& a_field = field(in, "a");
        if (!a_field.is_array() || a_field.size() != 2 ||
            !a_field[0].is_number() || !a_field[1].is_number()) {
            throw wd::ValidationError("\"a\": expected [re, im]");
        }
        const wd::Complex a(a_field[0].get<double>(),
                            a_field[1].get<double>());
        std::size_t taylor_len = 0;
        if (in.contains("taylor_len")) {
            if (!in.at("taylor_len").is_number_unsigned()) {
                throw wd::ValidationError(
                    "\"taylor_len\": expected a positive integer");
            }
            taylor_len = in.at("taylor_len").get<std::size_t>();
        } else {
            taylor_len = wd::blaschke_min_taylor_len(a, spec.n_max, 1e-6);
        }
        norms = wd::blaschke_power_norms(a, spec.n_max, taylor_len);
    } else {
        throw wd::ValidationError(
            "\"kind\": expected \"polynomial\" or \"blaschke\"");
    }
    if (spec.format == "csv") return wd::csv_norm_rows(norms, "norm");
    wd::Json report = wd::Json::object();
    report["norms"] = norm_pairs(norms);
    return report.dump(2) + "\n";
}

std::string run_kronecker(const wd::Json& in, const JobSpec& spec) {
    const wd::CompositionSymbol phi = wd::symbol_from_json(field(in, "symbol"));
    const wd::Json& sigma_field = field(in, "sigma");
    std::vector<double> sigmas;
    if (sigma_field.is_number()) {
        sigmas.push_back(sigma_field.get<double>());
    } else if (sigma_field.is_array()) {
        for (const auto& s : sigma_field) {
            if (!s.is_number()) {
                throw wd::ValidationError("\"sigma\": expected numbers");
            }
            sigmas.push_back(s.get<double>());
        }
    } else {
        throw wd::ValidationError(
            "\"sigma\": expected a number or an array of numbers");
    }
    if (sigmas.empty()) {
        throw wd::ValidationError("\"sigma\": expected at least one value");
    }
    std::vector<std::pair<double, double>> rows;
    rows.reserve(sigmas.size());
    for (double sigma : sigmas) {
        rows.emplace_back(sigma, wd::kronecker_inf(phi, sigma));
    }
    if (spec.format == "csv") {
        std::string out = "sigma,infimum\n";
        for (const auto& [sigma, value] : rows) {
            out += wd::format_sig17(sigma);
            out += ',';
            out += wd::format_sig17(value);
            out += '\n';
        }
        return out;
    }
    wd::Json table = wd::Json::array();
    for (const auto& [sigma, value] : rows) {
        table.push_back(wd::Json::array({sigma, value}));
    }
    wd::Json report = wd::Json::object();
    report["infima"] = std::move(table);
    return report.dump(2) + "\n";
}

std::string dispatch(const wd::Json& in, const JobSpec& spec) {
    if (spec.command == "analyze") return run_analyze(in, spec);
    if (spec.command == "quadratic") return run_quadratic(in, spec);
    if (spec.command == "lift") return run_lift(in, spec);
    if (spec.command == "unlift") return run_unlift(in, spec);
    if (spec.command == "torus-isometry") return run_torus_isometry(in, spec);
    if (spec.command == "torus-automorphism") {
        return run_torus_automorphism(in, spec);
    }
    if (spec.command == "growth") return run_growth(in, spec);
    if (spec.command == "kronecker") return run_kronecker(in, spec);
    throw wd::ValidationError("unknown command \"" + spec.command + "\"");
}

int run(const JobSpec& spec) {
    // Path validation happens before any computation.
    std::ifstream input(spec.input_path, std::ios::binary);
    if (!input) {
        throw wd::ValidationError("cannot open input file: " +
                                  spec.input_path);
    }
    const auto parent =
        std::filesystem::path(spec.output_path).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent)) {
        throw wd::ValidationError("output directory does not exist: " +
                                  parent.string());
    }

    const wd::Json in = wd::Json::parse(input);

    const auto start = std::chrono::steady_clock::now();
    const std::string payload = dispatch(in, spec);
    const auto elapsed = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();

    std::ofstream output(spec.output_path, std::ios::binary);
    if (!output) {
        throw wd::ValidationError("cannot open output file: " +
                                  spec.output_path);
    }
    output << payload;
    output.close();

    wd::Json meta = wd::Json::object();
    meta["command"] = spec.command;
    meta["elapsed_ms"] = elapsed;
    meta["threads"] = wd::thread_budget();
    std::ofstream sidecar(spec.output_path + ".meta.json", std::ios::binary);
    sidecar << meta.dump(2) << "\n";
    return 0;
}

void print_error(const char* type, const std::string& message) {
    wd::Json err = wd::Json::object();
    err["error"] = wd::Json::object();
    err["error"]["type"] = type;
    err["error"]["message"] = message;
    std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    JobSpec spec;
    CLI::App app{
        "wdop: composition operator analysis for Dirichlet series and "
        "torus polynomials"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"analyze", "classify C_phi for a Dirichlet symbol"},
        {"quadratic", "closed-form norms and verdict for c0 s + c1 + cr r^-s "
                      "+ cr2 r^-2s"},
        {"lift", "Bohr lift: Dirichlet series to power series"},
        {"unlift", "inverse Bohr lift: power series to Dirichlet series"},
        {"torus-isometry", "isometry test for a torus symbol"},
        {"torus-automorphism", "automorphism test for a monomial symbol"},
        {"growth", "power norm growth probe (polynomial or Blaschke)"},
        {"kronecker", "closed-form infimum of Re phi on vertical lines"},
    };
    for (const auto& [name, description] : commands) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("--input", spec.input_path, "input JSON file")
            ->required();
        sub->add_option("--output", spec.output_path, "output report file")
            ->required();
        sub->add_option("--cutoff", spec.cutoff,
                        "index cutoff for truncated series (default 2^20)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--n-max", spec.n_max,
                        "largest index in norm tables (default 64)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--degree-bound", spec.degree_bound,
                        "certification degree for torus checks (default 6)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", spec.format, "json or csv (default json)")
            ->check(CLI::IsMember({"json", "csv"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        print_error("validation", e.what());
        return 2;
    }
    spec.command = app.get_subcommands().front()->get_name();

    try {
        return run(spec);
    } catch (const wd::ValidationError& e) {
        print_error("validation", e.what());
        return 2;
    } catch (const wd::ComputationError& e) {
        print_error("computation", e.what());
        return 3;
    } catch (const nlohmann::json::exception& e) {
        print_error("validation", std::string("malformed JSON: ") + e.what());
        return 2;
    } catch (const std::exception& e) {
        print_error("computation", e.what());
        return 3;
    }
}
