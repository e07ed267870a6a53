#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "projnorm/projnorm.hpp"

namespace projnorm::cli {
namespace {

using nlohmann::json;

// Validation failure detected after parsing; maps to kUsageError.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// File could not be read or written; maps to kIoError.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open " + path + " for writing");
    }
    file << text;
    if (!file) {
        throw IoError("write to " + path + " failed");
    }
}

json read_json_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open " + path);
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    try {
        return json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw UsageError(path + " is not valid JSON: " + e.what());
    }
}

struct VerifyOptions {
    std::vector<std::size_t> dims{2, 4, 8, 16};
    std::size_t trials = 200;
    std::uint64_t seed = 0;
    double tol = verify::kDefaultTol;
    unsigned n_max = verify::kDefaultPowerMax;
    unsigned m_max = verify::kDefaultPowerMax;
    std::vector<std::string> checks = verify::default_checks();
    std::string format = "json";
    std::string out_path;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    if (!(o.tol > 0.0)) {
        throw UsageError("--tol must be positive");
    }
    verify::TrialConfig config;
    config.dims = o.dims;
    config.trials_per_dim = o.trials;
    config.base_seed = o.seed;
    config.tol = o.tol;
    config.n_max = o.n_max;
    config.m_max = o.m_max;
    config.checks = o.checks;
    try {
        config.threads = verify::threads_from_env().value_or(0);
        verify::validate(config);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const auto report = verify::run_trials(config);
    std::string text;
    if (o.format == "csv") {
        text = "check,trials,max_residual,failures,verdict\r\n";
        for (const auto& s : report.per_check) {
            text += s.name + "," + std::to_string(s.trials) + "," + fmt17(s.max_residual) + "," +
                    std::to_string(s.failures.size()) + "," + (s.failures.empty() ? "pass" : "fail") +
                    "\r\n";
        }
        text += "errors," + std::to_string(report.errors.size()) + ",,," +
                (report.errors.empty() ? "pass" : "fail") + "\r\n";
    } else {
        text = verify::to_json(report).dump(2) + "\n";
    }
    emit(text, o.out_path, out);
    return report.pass ? kPass : kChecksFailed;
}

int cmd_poly(const std::string& family, long n, std::ostream& out) {
    const bool big_family = family == "P" || family == "Q" || family == "F";
    const long lo = family == "F" ? 0 : 1;
    const long hi = big_family ? 200 : 100;
    if (n < lo || n > hi) {
        throw UsageError("--n for family " + family + " must lie in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    }
    const auto k = static_cast<unsigned>(n);
    poly::IntPolynomial recursive;
    poly::IntPolynomial closed;
    if (family == "P" || family == "Q") {
        const auto r = poly::poly_PQ_recursive(k);
        const auto c = poly::poly_PQ_closed(k);
        recursive = family == "P" ? r.P : r.Q;
        closed = family == "P" ? c.P : c.Q;
    } else if (family == "F") {
        recursive = poly::poly_F(k);
        closed = poly::poly_F_closed(k);
    } else {
        const auto s = poly::poly_AB_sums(k);
        const auto c = poly::poly_AB_closed(k);
        recursive = family == "A" ? s.A : s.B;
        closed = family == "A" ? c.A : c.B;
    }
    const bool agree = recursive == closed;
    const char var = (family == "A" || family == "B") ? 'a' : 'x';
    const json doc = {{"family", family},
                      {"n", n},
                      {"coefficients", recursive.to_decimal_strings()},
                      {"polynomial", recursive.to_string(var)},
                      {"closed_form_agrees", agree}};
    out << doc.dump() << "\n";
    return agree ? kPass : kChecksFailed;
}

int cmd_decompose(const std::string& input, double tol, const std::string& out_path,
                  std::ostream& out) {
    const json doc = read_json_file(input);
    std::optional<projections::ProjectionPair> pair;
    try {
        pair.emplace(projections::pair_from_json(doc, tol));
    } catch (const projections::PairFormatError& e) {
        throw UsageError(e.what());
    } catch (const projections::InvalidProjectionError& e) {
        throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const double relation_tol = 10.0 * tol;
    projections::HalmosBlocks blocks;
    try {
        blocks = projections::halmos_decompose(*pair, relation_tol);
    } catch (const projections::HalmosError& e) {
        json failure = {{"error", e.what()}, {"verdict", "fail"}};
        emit(failure.dump(2) + "\n", out_path, out);
        return kChecksFailed;
    }
    const json report = {
        {"dim", pair->dim()},
        {"rank_f", blocks.rank},
        {"D", projections::matrix_to_json(blocks.D)},
        {"Dprime", projections::matrix_to_json(blocks.Dprime)},
        {"V", projections::matrix_to_json(blocks.V)},
        {"residuals",
         {{"D_minus_D2_minus_VVstar", blocks.residual_D},
          {"DV_plus_VDprime_minus_V", blocks.residual_cross},
          {"Dprime_minus_Dprime2_minus_VstarV", blocks.residual_Dprime}}},
        {"norm_fg_squared", blocks.norm_fg_sq},
        {"norm_D", blocks.norm_D},
        {"norm_gap", std::abs(blocks.norm_fg_sq - blocks.norm_D)},
        {"tol", relation_tol},
        {"verdict", "pass"}};
    emit(report.dump(2) + "\n", out_path, out);
    return kPass;
}

int cmd_bounds(double a, unsigned max_n, const std::string& format, const std::string& out_path,
               std::ostream& out) {
    verify::BoundTable table;
    try {
        table = verify::bound_sequences(a, max_n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::string text;
    if (format == "csv") {
        text = "N,upper,lower,limit,upper_gap,lower_gap\r\n";
        for (const auto& r : table.rows) {
            text += std::to_string(r.N) + "," + fmt17(r.upper) + "," + fmt17(r.lower) + "," +
                    fmt17(table.limit) + "," + fmt17(r.upper - table.limit) + "," +
                    fmt17(table.limit - r.lower) + "\r\n";
        }
    } else {
        json rows = json::array();
        for (const auto& r : table.rows) {
            rows.push_back({{"N", r.N},
                            {"upper", r.upper},
                            {"lower", r.lower},
                            {"upper_gap", r.upper - table.limit},
                            {"lower_gap", table.limit - r.lower}});
        }
        const auto& last = table.rows.back();
        const json doc = {{"a", table.a},
                          {"limit", table.limit},
                          {"rows", rows},
                          {"final_upper_gap", last.upper - table.limit},
                          {"final_lower_gap", table.limit - last.lower}};
        text = doc.dump(2) + "\n";
    }
    emit(text, out_path, out);
    return kPass;
}

int cmd_counterexample(std::size_t dim, const std::string& mode, std::size_t budget,
                       std::uint64_t seed, const std::string& out_path, std::ostream& out) {
    if (dim < 4 || dim % 2 != 0) {
        throw UsageError("--dim must be even and at least 4; the identity holds for all 2x2 pairs");
    }
    if (mode == "random" && budget == 0) {
        throw UsageError("--budget must be positive");
    }
    const auto found = mode == "random" ? verify::find_commutator_identity_counterexample_random(dim, budget, seed)
                                        : verify::find_commutator_identity_counterexample(dim);
    const auto fg = linalg::mat_mul(found.pair.f(), found.pair.g());
    const auto gf = linalg::mat_mul(found.pair.g(), found.pair.f());
    json summary = {{"dim", dim},
                    {"mode", mode},
                    {"violation", found.violation},
                    {"norm_fg", linalg::spectral_norm(fg)},
                    {"norm_comm", linalg::spectral_norm(fg - gf)}};
    if (mode == "random") {
        summary["budget"] = budget;
        summary["seed"] = seed;
    }
    const json pair_doc = projections::pair_to_json(found.pair);
    if (out_path.empty()) {
        summary["pair"] = pair_doc;
    } else {
        emit(pair_doc.dump(2) + "\n", out_path, out);
        summary["pair_file"] = out_path;
    }
    out << summary.dump(2) << "\n";
    return found.violation > 0.0 ? kPass : kChecksFailed;
}

int cmd_universal(std::size_t grid, double tol, std::ostream& out) {
    if (grid < 2) {
        throw UsageError("--grid must be at least 2");
    }
    const auto approx = projections::universal_pair_approx(grid);
    const auto norms = approx.blockwise_norms();
    const double a = norms.norm_product;
    const double residual = std::abs(norms.norm_anticommutator - (a + a * a));
    const bool pass = residual <= tol;
    const json doc = {{"grid_size", grid},
                      {"cells", approx.angles.size()},
                      {"norm_pq", a},
                      {"norm_commutator", norms.norm_commutator},
                      {"norm_anticommutator", norms.norm_anticommutator},
                      {"theorem_residual", residual},
                      {"tol", tol},
                      {"verdict", pass ? "pass" : "fail"}};
    out << doc.dump(2) << "\n";
    return pass ? kPass : kChecksFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical verification of norm identities for pairs of projections", "projnorm"};
    app.require_subcommand(1);

    VerifyOptions vo;
    auto* verify_cmd = app.add_subcommand("verify", "Randomized campaign over all checks");
    verify_cmd->add_option("--dims", vo.dims, "Comma-separated dimensions")->delimiter(',');
    verify_cmd->add_option("--trials", vo.trials, "Trials per dimension");
    verify_cmd->add_option("--seed", vo.seed, "Base seed; trial i uses seed + i");
    verify_cmd->add_option("--tol", vo.tol, "Absolute tolerance");
    verify_cmd->add_option("--n-max", vo.n_max, "Largest anticommutator power");
    verify_cmd->add_option("--m-max", vo.m_max, "Largest product power");
    verify_cmd->add_option("--checks", vo.checks, "Comma-separated check names")->delimiter(',');
    verify_cmd->add_option("--format", vo.format)->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_option("--out", vo.out_path, "Report path (default stdout)");

    std::string family;
    long poly_n = 1;
    auto* poly_cmd = app.add_subcommand("poly", "Exact coefficients of P, Q, F, A or B");
    poly_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"P", "Q", "F", "A", "B"}));
    poly_cmd->add_option("--n", poly_n, "Index n (or N for A, B)")->required();

    std::string input;
    double decompose_tol = projections::kProjectionTol;
    std::string decompose_out;
    auto* decompose_cmd = app.add_subcommand("decompose", "Block form of g relative to range(f)");
    decompose_cmd->add_option("--input,input", input, "Pair JSON file")->required();
    decompose_cmd->add_option("--tol", decompose_tol, "Projection tolerance");
    decompose_cmd->add_option("--out", decompose_out);

    double a = 0.0;
    unsigned max_n = 10;
    std::string bounds_format = "json";
    std::string bounds_out;
    auto* bounds_cmd = app.add_subcommand("bounds", "Pre-limit upper and lower bound sequences");
    bounds_cmd->add_option("--a", a, "Value of the product norm, in [0, 1]")->required();
    bounds_cmd->add_option("--max-n", max_n, "Number of rows");
    bounds_cmd->add_option("--format", bounds_format)->check(CLI::IsMember({"json", "csv"}));
    bounds_cmd->add_option("--out", bounds_out);

    std::size_t ce_dim = 4;
    std::string ce_mode = "deterministic";
    std::size_t ce_budget = 1000;
    std::uint64_t ce_seed = 0;
    std::string ce_out;
    auto* ce_cmd = app.add_subcommand("counterexample", "Pairs where the 2x2 commutator identity fails");
    ce_cmd->add_option("--dim", ce_dim);
    ce_cmd->add_option("--mode", ce_mode)->check(CLI::IsMember({"deterministic", "random"}));
    ce_cmd->add_option("--budget", ce_budget, "Random-mode sample count");
    ce_cmd->add_option("--seed", ce_seed);
    ce_cmd->add_option("--out", ce_out, "Pair JSON path (default: embedded in stdout)");

    std::size_t grid = 999;
    double universal_tol = 1e-10;
    auto* universal_cmd = app.add_subcommand("universal", "Grid approximant of the universal pair");
    universal_cmd->add_option("--grid", grid, "Number of grid angles K");
    universal_cmd->add_option("--tol", universal_tol);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }

    try {
        if (verify_cmd->parsed()) return cmd_verify(vo, out);
        if (poly_cmd->parsed()) return cmd_poly(family, poly_n, out);
        if (decompose_cmd->parsed()) return cmd_decompose(input, decompose_tol, decompose_out, out);
        if (bounds_cmd->parsed()) {
            if (max_n == 0) {
                throw UsageError("--max-n must be at least 1");
            }
            return cmd_bounds(a, max_n, bounds_format, bounds_out, out);
        }
        if (ce_cmd->parsed()) {
            return cmd_counterexample(ce_dim, ce_mode, ce_budget, ce_seed, ce_out, out);
        }
        if (universal_cmd->parsed()) return cmd_universal(grid, universal_tol, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    }
    return kUsageError;
}

}  // namespace projnorm::cli
