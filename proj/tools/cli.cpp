// Copyright 2026 The cpopt Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cpopt/analysis.hpp"
#include "cpopt/channel.hpp"
#include "cpopt/error.hpp"
#include "cpopt/io.hpp"
#include "cpopt/linalg.hpp"
#include "cpopt/models.hpp"
#include "cpopt/solver.hpp"
#include "cpopt/target.hpp"

namespace cpopt::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class... Args>
std::string format(const char* f, Args... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

struct ModelFlags {
    std::string model;
    int copies = 1;
    double alpha = 0.0;
};

struct TargetFlags {
    std::string r_file;
    bool quadrature = false;
    int nodes_theta = 0;
    int nodes_phi = 0;
};

struct SolveFlags {
    double tol = 1e-12;
    double chi_tol = 1e-10;
    int max_iters = 10000;
    std::string init = "maxmix";
    bool strict = false;
};

void add_model_flags(CLI::App* sub, ModelFlags& m) {
    sub->add_option("--model", m.model, "unot | cloner | entangler-a | entangler-b | shifter | identity");
    sub->add_option("--copies", m.copies, "N for unot and cloner")->capture_default_str();
    sub->add_option("--alpha", m.alpha, "theta shift in radians")->capture_default_str();
}

void add_target_flags(CLI::App* sub, TargetFlags& t, bool with_file) {
    if (with_file) sub->add_option("--r", t.r_file, "target operator JSON instead of --model");
    sub->add_flag("--quadrature", t.quadrature, "integrate R numerically instead of the closed form");
    sub->add_option("--nodes-theta", t.nodes_theta, "Gauss-Legendre nodes in theta (implies --quadrature)");
    sub->add_option("--nodes-phi", t.nodes_phi, "trapezoid nodes in phi (implies --quadrature)");
}

void add_solve_flags(CLI::App* sub, SolveFlags& s) {
    sub->add_option("--tol", s.tol, "stop when the fidelity changes by less than this")->capture_default_str();
    sub->add_option("--chi-tol", s.chi_tol, "stop when chi moves by less than this (Frobenius)")->capture_default_str();
    sub->add_option("--max-iters", s.max_iters)->capture_default_str();
    sub->add_option("--init", s.init, "maxmix | random:SEED | Choi JSON path")->capture_default_str();
    sub->add_flag("--strict", s.strict, "exit 4 when the iteration does not converge");
}

ModelSpec model_spec(const ModelFlags& m) {
    if (m.model.empty()) throw UsageError("--model is required");
    ModelSpec spec = parse_model(m.model, m.copies, m.alpha);
    spec.validate();
    return spec;
}

struct Target {
    TargetOperator r;
    std::optional<QuadratureNodes> nodes;
};

Target load_target(const ModelFlags& m, const TargetFlags& t) {
    if (!t.r_file.empty()) {
        if (!m.model.empty()) throw UsageError("give either --model or --r, not both");
        return {io::target_from_json(io::read_json(t.r_file)), std::nullopt};
    }
    const ModelSpec spec = model_spec(m);
    if (t.quadrature || t.nodes_theta > 0 || t.nodes_phi > 0) {
        QuadratureNodes nodes = default_nodes(default_degree(spec));
        if (t.nodes_theta > 0) nodes.theta = t.nodes_theta;
        if (t.nodes_phi > 0) nodes.phi = t.nodes_phi;
        return {build_r_quadrature(model_family(spec), nodes), nodes};
    }
    return {analytic_r(spec), std::nullopt};
}

ChoiOperator load_choi(const std::string& path) {
    io::json j = io::read_json(path);
    // Solver output files carry the channel under "chi".
    if (j.is_object() && j.contains("chi") && j["chi"].is_object()) j = j["chi"];
    return io::choi_from_json(j);
}

SolverInit parse_init(const std::string& s) {
    if (s == "maxmix") return SolverInit::max_mixed();
    if (s.rfind("random:", 0) == 0) {
        const std::string digits = s.substr(7);
        std::uint64_t seed = 0;
        const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
        if (digits.empty() || ec != std::errc() || p != digits.data() + digits.size()) {
            throw UsageError("bad seed in --init " + s);
        }
        return SolverInit::random(seed);
    }
    return SolverInit::from(load_choi(s));
}

SolverOptions solver_options(const SolveFlags& s) {
    SolverOptions o;
    o.fid_tol = s.tol;
    o.chi_tol = s.chi_tol;
    o.max_iters = s.max_iters;
    o.init = parse_init(s.init);
    return o;
}

std::pair<double, double> parse_state(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("--state expects THETA,PHI");
    auto number = [&](std::string_view t) {
        double v = 0.0;
        const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc() || p != t.data() + t.size()) throw UsageError("bad number in --state " + s);
        return v;
    };
    const std::string_view sv(s);
    return {number(sv.substr(0, comma)), number(sv.substr(comma + 1))};
}

void emit_json(const std::string& path, const io::json& j, std::ostream& out) {
    if (path.empty()) out << j.dump(2) << "\n";
    else io::write_json(path, j);
}

void print_matrix(std::ostream& out, const ComplexMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const cplx z = m(r, c);
            out << format("  %+.10f%+.10fi", z.real() == 0.0 ? 0.0 : z.real(),
                          z.imag() == 0.0 ? 0.0 : z.imag());
        }
        out << "\n";
    }
}

int cmd_solve(const ModelFlags& m, const TargetFlags& t, const SolveFlags& s, const std::string& out_path,
              std::ostream& out) {
    const Target target = load_target(m, t);
    const SolverResult res = solve(target.r, solver_options(s));
    out << format("F = %.10f  bound = %.10f  iters = %d  converged = %s\n", res.fidelity, res.bound, res.iterations,
                  res.converged ? "true" : "false");
    out << "R: " << target.r.provenance() << "\n";
    out << "stop: " << res.stop_reason << "\n";
    if (!out_path.empty()) io::write_json(out_path, io::to_json(res));
    return (s.strict && !res.converged) ? kNotConverged : kOk;
}

int cmd_bound(const ModelFlags& m, const TargetFlags& t, std::ostream& out) {
    const Target target = load_target(m, t);
    out << format("bound = %.10g\n", fidelity_bound(target.r));
    return kOk;
}

int cmd_rmatrix(const ModelFlags& m, const TargetFlags& t, const std::string& out_path, std::ostream& out) {
    const Target target = load_target(m, t);
    if (!out_path.empty()) {
        out << "R: " << target.r.provenance() << format("  dim_in = %zu  dim_out = %zu", target.r.dim_in(),
                                                       target.r.dim_out());
        if (target.nodes) out << format("  nodes_theta = %d  nodes_phi = %d", target.nodes->theta, target.nodes->phi);
        out << format("  lambda_max = %.12g\n", target.r.lambda_max());
    }
    emit_json(out_path, io::to_json(target.r), out);
    return kOk;
}

int cmd_kraus(const std::string& chi_path, double cutoff, const std::string& out_path, std::ostream& out) {
    const ChoiOperator chi = load_choi(chi_path);
    require_valid_choi(chi);
    const KrausSet k = kraus_from_choi(chi, cutoff);
    if (!out_path.empty()) {
        out << "operators = " << k.count() << "\n";
        for (double w : k.weights) out << format("  weight %.12g\n", w);
    }
    emit_json(out_path, io::to_json(k), out);
    return kOk;
}

int cmd_dilate(const std::string& chi_path, const std::string& out_path, std::ostream& out) {
    const ChoiOperator chi = load_choi(chi_path);
    require_valid_choi(chi);
    const ComplexMatrix v = dilation(kraus_from_choi(chi));
    if (!out_path.empty()) {
        const double dev = max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(v.cols()));
        out << format("isometry %zu x %zu  max |V^dagger V - 1| = %.3e\n", v.rows(), v.cols(), dev);
    }
    emit_json(out_path, io::to_json(v), out);
    return kOk;
}

int cmd_apply(const std::string& chi_path, const std::string& state, const std::string& rho_path,
              const std::string& out_path, std::ostream& out) {
    if (state.empty() == rho_path.empty()) throw UsageError("give exactly one of --state and --rho");
    const ChoiOperator chi = load_choi(chi_path);
    require_valid_choi(chi);
    DensityMatrix rho{ComplexMatrix(1, 1)};
    if (!state.empty()) {
        const auto [theta, phi] = parse_state(state);
        // Qubit inputs take the Bloch state; larger inputs its symmetric N-copy power.
        const std::size_t d = chi.dim_in();
        rho = DensityMatrix::pure(d == 2 ? bloch_state(theta, phi)
                                         : symmetric_state(static_cast<int>(d) - 1, theta, phi));
    } else {
        rho = DensityMatrix{io::matrix_from_json(io::read_json(rho_path))};
    }
    const DensityMatrix result = apply(chi, rho);
    if (!out_path.empty()) {
        out << format("output state %zu x %zu  trace = %.12g\n", result.dim(), result.dim(),
                      result.matrix.trace().real());
        print_matrix(out, result.matrix);
    }
    emit_json(out_path, io::to_json(result.matrix), out);
    return kOk;
}

int cmd_scan(const ModelFlags& m, const SolveFlags& s, double from, double to, std::size_t steps, unsigned jobs,
             const std::string& csv, std::ostream& out) {
    const ModelSpec spec = model_spec(m);
    if (spec.kind != ModelKind::Shifter) throw UsageError("scan supports --model shifter only");
    if (steps < 1) throw UsageError("--steps must be positive");
    const std::vector<double> grid = uniform_grid(from, to, steps);
    const std::vector<ScanRow> rows = alpha_scan(grid, solver_options(s), jobs);
    std::ostringstream text;
    write_scan_csv(text, rows);
    io::write_text(csv, text.str());

    double worst_closed = 0.0;
    double worst_bound = -1.0;
    bool all_converged = true;
    bool all_ok = true;
    for (const ScanRow& r : rows) {
        if (!r.ok) {
            all_ok = false;
            out << format("alpha = %.10g: ", r.alpha) << r.note << "\n";
            continue;
        }
        worst_closed = std::max(worst_closed, std::abs(r.F_solver - r.F_closed));
        worst_bound = std::max(worst_bound, r.F_solver - r.F_bound);
        all_converged = all_converged && r.converged;
    }
    out << format("rows = %zu  max |F_solver - F_closed| = %.3e  max (F_solver - F_bound) = %.3e  converged = %s\n",
                  rows.size(), worst_closed, worst_bound, all_converged ? "true" : "false");
    if (!all_ok) return kNumerical;
    return (s.strict && !all_converged) ? kNotConverged : kOk;
}

int cmd_curve(const ModelFlags& m, const std::string& chi_path, std::size_t steps, const std::string& csv,
              std::ostream& out) {
    const ModelSpec spec = model_spec(m);
    const ChoiOperator chi = load_choi(chi_path);
    const std::vector<CurvePoint> pts = state_fidelity_curve(chi, model_family(spec), steps);
    std::ostringstream text;
    write_curve_csv(text, pts);
    io::write_text(csv, text.str());
    const auto lo = std::min_element(pts.begin(), pts.end(),
                                     [](const CurvePoint& a, const CurvePoint& b) { return a.fidelity < b.fidelity; });
    out << format("points = %zu  min F = %.10f at theta = %.10f\n", pts.size(), lo->fidelity, lo->theta);
    return kOk;
}

int cmd_validate(const ModelFlags& m, const std::string& chi_path, std::size_t samples, std::uint64_t seed,
                 std::ostream& out) {
    const ModelSpec spec = model_spec(m);
    const ChoiOperator chi = load_choi(chi_path);
    const ChoiReport rep = validate_choi(chi);
    out << format("choi: valid = %s  min_eig = %.3e  tp_dev = %.3e  herm_dev = %.3e\n", rep.valid ? "true" : "false",
                  rep.min_eigenvalue, rep.trace_preservation_deviation, rep.hermiticity_deviation);
    if (!rep.valid) throw Error(ErrorKind::InvalidChoi, "channel fails the Choi checks");
    const double f = fidelity(chi, analytic_r(spec));
    const McFidelity mc = mc_fidelity(chi, model_family(spec), samples, seed);
    const bool agree = std::abs(mc.mean - f) <= 5.0 * mc.std_error + 1e-12;
    out << format("F = %.10f  F_mc = %.10f +- %.2e  samples = %zu  agree = %s\n", f, mc.mean, mc.std_error,
                  mc.samples, agree ? "true" : "false");
    return agree ? kOk : kNumerical;
}

int cmd_verify(std::ostream& out) {
    const std::vector<ReferenceRow> rows = reference_table();
    write_reference_table(out, rows);
    const bool pass = std::all_of(rows.begin(), rows.end(), [](const ReferenceRow& r) { return r.pass; });
    return pass ? kOk : kNumerical;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidSpec:
        case ErrorKind::InvalidArgument:
        case ErrorKind::OutOfRange:
        case ErrorKind::Parse:
        case ErrorKind::DimensionMismatch: return kUsage;
        default: return kNumerical;
    }
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optimal trace-preserving channels for pure-state transformations", "cpopt"};
    app.require_subcommand(1);

    ModelFlags model;
    TargetFlags target;
    SolveFlags solve_flags;
    std::string out_path, chi_path, state, rho_path, csv;
    double cutoff = kKrausCutoff;
    double from = 0.0, to = 0.0;
    std::size_t steps = 0, samples = 10000;
    std::uint64_t seed = 1;
    unsigned jobs = 0;

    auto* solve_cmd = app.add_subcommand("solve", "run the fixed-point iteration");
    add_model_flags(solve_cmd, model);
    add_target_flags(solve_cmd, target, true);
    add_solve_flags(solve_cmd, solve_flags);
    solve_cmd->add_option("--out", out_path, "write the result JSON here");

    auto* bound_cmd = app.add_subcommand("bound", "print dim_in * lambda_max(R)");
    add_model_flags(bound_cmd, model);
    add_target_flags(bound_cmd, target, true);

    auto* rmatrix_cmd = app.add_subcommand("rmatrix", "build the target operator R");
    add_model_flags(rmatrix_cmd, model);
    add_target_flags(rmatrix_cmd, target, false);
    rmatrix_cmd->add_option("--out", out_path);

    auto* kraus_cmd = app.add_subcommand("kraus", "Kraus decomposition of a channel");
    kraus_cmd->add_option("--chi", chi_path)->required();
    kraus_cmd->add_option("--cutoff", cutoff)->capture_default_str();
    kraus_cmd->add_option("--out", out_path);

    auto* dilate_cmd = app.add_subcommand("dilate", "Stinespring isometry of a channel");
    dilate_cmd->add_option("--chi", chi_path)->required();
    dilate_cmd->add_option("--out", out_path);

    auto* apply_cmd = app.add_subcommand("apply", "apply a channel to a state");
    apply_cmd->add_option("--chi", chi_path)->required();
    apply_cmd->add_option("--state", state, "THETA,PHI in radians");
    apply_cmd->add_option("--rho", rho_path, "input density matrix JSON");
    apply_cmd->add_option("--out", out_path);

    auto* scan_cmd = app.add_subcommand("scan", "solve the theta-shifter over a grid of alpha");
    add_model_flags(scan_cmd, model);
    add_solve_flags(scan_cmd, solve_flags);
    scan_cmd->add_option("--from", from)->required();
    scan_cmd->add_option("--to", to)->required();
    scan_cmd->add_option("--steps", steps)->required();
    scan_cmd->add_option("--jobs", jobs, "worker threads, 0 = all processors")->capture_default_str();
    scan_cmd->add_option("--csv", csv)->required();

    auto* curve_cmd = app.add_subcommand("curve", "phi-averaged fidelity against theta");
    add_model_flags(curve_cmd, model);
    curve_cmd->add_option("--chi", chi_path)->required();
    curve_cmd->add_option("--steps", steps)->required();
    curve_cmd->add_option("--csv", csv)->required();

    auto* validate_cmd = app.add_subcommand("validate", "check a channel and its Monte Carlo fidelity");
    add_model_flags(validate_cmd, model);
    validate_cmd->add_option("--chi", chi_path)->required();
    validate_cmd->add_option("--samples", samples)->capture_default_str();
    validate_cmd->add_option("--seed", seed)->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "reproduce the reference-value table");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return kUsage;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(model, target, solve_flags, out_path, out);
        if (bound_cmd->parsed()) return cmd_bound(model, target, out);
        if (rmatrix_cmd->parsed()) return cmd_rmatrix(model, target, out_path, out);
        if (kraus_cmd->parsed()) return cmd_kraus(chi_path, cutoff, out_path, out);
        if (dilate_cmd->parsed()) return cmd_dilate(chi_path, out_path, out);
        if (apply_cmd->parsed()) return cmd_apply(chi_path, state, rho_path, out_path, out);
        if (scan_cmd->parsed()) return cmd_scan(model, solve_flags, from, to, steps, jobs, csv, out);
        if (curve_cmd->parsed()) return cmd_curve(model, chi_path, steps, csv, out);
        if (validate_cmd->parsed()) return cmd_validate(model, chi_path, samples, seed, out);
        if (verify_cmd->parsed()) return cmd_verify(out);
    } catch (const UsageError& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return kNumerical;
    }
    err << "error: no subcommand\n";
    return kUsage;
}

}  // namespace cpopt::cli
