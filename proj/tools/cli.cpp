#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "szego/discrete_norms.hpp"
#include "szego/errors.hpp"
#include "szego/frame_analysis.hpp"
#include "szego/grid.hpp"
#include "szego/io.hpp"
#include "szego/parallel.hpp"
#include "szego/random.hpp"
#include "szego/synthesis.hpp"

#ifndef SZEGO_TOOL_VERSION
#define SZEGO_TOOL_VERSION "dev"
#endif

namespace szego::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json manifest(const std::string& command, json parameters, std::optional<std::uint64_t> seed) {
    json m;
    m["command"] = command;
    m["parameters"] = std::move(parameters);
    m["seed"] = seed ? json(*seed) : json(nullptr);
    m["tool_version"] = SZEGO_TOOL_VERSION;
    m["timestamp"] = utc_timestamp();
    return m;
}

std::string read_input(const std::string& path, Streams& io) {
    if (path == "-") {
        std::stringstream ss;
        ss << io.in.rdbuf();
        return ss.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot read input file: " + path);
    std::stringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& payload, Streams& io) {
    if (path == "-") {
        io.out << payload;
        io.out.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write output file: " + path);
    file << payload;
}

/// CSV goes to `path`; the manifest goes beside it (or to stderr for stdout).
void emit_csv(const std::string& path, const std::string& csv, const json& meta, Streams& io) {
    write_output(path, csv, io);
    if (path == "-") {
        io.err << "manifest: " << meta.dump() << "\n";
    } else {
        write_output(path + ".manifest.json", meta.dump(2) + "\n", io);
    }
}

void emit_json(const std::string& path, json doc, const json& meta, Streams& io) {
    doc["manifest"] = meta;
    write_output(path, doc.dump(2) + "\n", io);
}

// ---------------------------------------------------------------- grid

struct GridArgs {
    std::size_t rings = 0;
    std::string out = "-";
};

int run_grid(const GridArgs& a, Streams& io) {
    const Grid grid = build_grid(a.rings);
    std::string csv = "k,j,re,im,weight\n";
    for (const auto& nd : grid.nodes()) {
        csv += fmt::format("{},{},{},{},{}\n", nd.index.k, nd.index.j, num(nd.point.value().real()),
                           num(nd.point.value().imag()), num(nd.weight));
    }
    emit_csv(a.out, csv, manifest("grid", {{"rings", a.rings}}, std::nullopt), io);
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string which;
    std::size_t degree = 0;
    std::size_t rings = 0;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::string out = "-";
};

struct VerifyRow {
    std::size_t trial;
    DiscreteNormReport report;
};

int run_verify(const VerifyArgs& a, Streams& io) {
    if (a.which == "lemma3" && a.degree >= a.rings) {
        throw UsageError("lemma3 needs --degree < --rings (the identity only holds for degree < k)");
    }
    if (a.which == "eq5" && a.rings <= a.degree) {
        throw UsageError("eq5 needs --rings > --degree; raise --rings");
    }

    // Inputs are drawn sequentially so the suite depends only on the seed.
    struct Trial {
        HardyFunction f;
        std::size_t k = 0;
        double r = 1.0;
    };
    TestRandom rng(a.seed);
    std::vector<Trial> trials(a.trials);
    for (auto& t : trials) {
        t.f = rng.polynomial(a.degree);
        if (a.which == "lemma4") {
            t.k = 1 + rng.index(a.rings);
            t.r = rng.open_unit();
        } else {
            t.k = a.rings;
        }
    }

    std::vector<std::vector<DiscreteNormReport>> results(a.trials);
    parallel_for(a.trials, [&](std::size_t i) {
        const Trial& t = trials[i];
        if (a.which == "lemma3") {
            results[i] = {verify_lemma3(t.f, t.k)};
        } else if (a.which == "lemma4") {
            results[i] = {verify_lemma4(t.f, t.k, t.r)};
        } else {
            const SupBracket b = verify_eq5(t.f, t.k);
            results[i] = {b.upper, b.lower};
        }
    });

    std::string csv = "trial,k,r,value,bound,margin\n";
    double worst_slack = std::numeric_limits<double>::infinity();
    std::optional<VerifyRow> worst;
    std::size_t violations = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        for (const auto& rep : results[i]) {
            csv += fmt::format("{},{},{},{},{},{}\n", i, rep.k, num(rep.r), num(rep.value), num(rep.bound),
                               num(rep.margin));
            // lemma3 margins already include the tolerance
            const double slack = a.which == "lemma3" ? rep.margin
                                                     : rep.margin + kTolerance * (1.0 + std::abs(rep.bound));
            if (slack < 0.0) ++violations;
            if (slack < worst_slack) {
                worst_slack = slack;
                worst = VerifyRow{i, rep};
            }
        }
    }
    json params = {{"which", a.which}, {"degree", a.degree}, {"rings", a.rings}, {"trials", a.trials}};
    emit_csv(a.out, csv, manifest("verify " + a.which, params, a.seed), io);
    if (violations > 0 && worst) {
        io.err << fmt::format("verify {}: {} violation(s); worst trial {} k={} r={} value={} bound={} margin={}\n",
                              a.which, violations, worst->trial, worst->report.k, num(worst->report.r),
                              num(worst->report.value), num(worst->report.bound), num(worst->report.margin));
        return kExitViolation;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- frame-bounds

struct FrameArgs {
    std::size_t rings = 0;
    std::size_t trials = 100;
    std::size_t degree = 0;
    std::uint64_t seed = 1;
    std::string out = "-";
};

int run_frame_bounds(const FrameArgs& a, Streams& io) {
    if (a.rings <= a.degree) throw UsageError("frame-bounds needs --rings > --degree");
    if (a.trials == 0) throw UsageError("frame-bounds needs --trials >= 1");
    TestRandom rng(a.seed);
    std::vector<HardyFunction> samples;
    samples.reserve(a.trials);
    for (std::size_t i = 0; i < a.trials; ++i) samples.push_back(rng.polynomial_up_to(a.degree));

    const Grid grid = build_grid(a.rings);
    const FrameBoundEstimate est = frame_bounds_empirical(samples, grid);
    const auto& ratios = est.ratios;

    std::string csv = "trial,degree,h2_norm,analysis_norm,ratio\n";
    std::size_t max_degree = 0;
    for (std::size_t i = 0; i < a.trials; ++i) {
        const double norm = h2_norm(samples[i]);
        max_degree = std::max(max_degree, samples[i].degree());
        csv += fmt::format("{},{},{},{},{}\n", i, samples[i].degree(), num(norm), num(ratios[i] * norm),
                           num(ratios[i]));
    }
    const double lower_bound = std::pow(ring_radius(a.rings), static_cast<double>(max_degree)) - 1e-9;
    const double upper_bound = kAnalysisUpper + 1e-9;

    json meta = manifest("frame-bounds",
                         {{"rings", a.rings}, {"trials", a.trials}, {"degree", a.degree}}, a.seed);
    meta["summary"] = {{"A_emp", est.lower},        {"B_emp", est.upper},
                       {"sample_count", est.sample_count}, {"rings", est.rings},
                       {"A_certified", lower_bound}, {"B_certified", upper_bound}};
    emit_csv(a.out, csv, meta, io);
    io.err << fmt::format("frame-bounds: A_emp={} B_emp={} (certified bracket [{}, {}])\n", num(est.lower),
                          num(est.upper), num(lower_bound), num(upper_bound));
    if (est.lower < lower_bound || est.upper > upper_bound) {
        io.err << "frame-bounds: empirical ratio outside the certified bracket\n";
        return kExitViolation;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- ds-divergence

struct DsArgs {
    std::size_t rings = 0;
    std::string function;
    std::string out = "-";
};

int run_ds(const DsArgs& a, Streams& io) {
    const HardyFunction f = hardy_from_json_text(read_input(a.function, io));
    if (f.is_zero()) throw UsageError("ds-divergence needs a nonzero function");
    const auto sums = ds_frame_divergence(f, a.rings);
    std::string csv = "K,partial_sum,increment\n";
    for (std::size_t i = 0; i < sums.size(); ++i) {
        const double inc = i == 0 ? sums[0] : sums[i] - sums[i - 1];
        csv += fmt::format("{},{},{}\n", i + 1, num(sums[i]), num(inc));
    }
    emit_csv(a.out, csv, manifest("ds-divergence", {{"rings", a.rings}, {"function", a.function}}, std::nullopt),
             io);
    return kExitOk;
}

// ---------------------------------------------------------------- decompose / reconstruct

struct DecomposeArgs {
    std::string function;
    std::size_t rings = 0;
    std::optional<std::size_t> truncation;
    double tol = 1e-3;
    std::size_t mu_stages = 8;
    std::size_t max_iter = SolverConfig{}.max_iter;
    std::string out = "-";
};

int run_decompose(const DecomposeArgs& a, Streams& io) {
    const HardyFunction f = hardy_from_json_text(read_input(a.function, io));
    const SynthesisProblem problem(f, a.rings, a.truncation);
    SolverConfig cfg;
    cfg.tol = a.tol;
    cfg.continuation_steps = a.mu_stages;
    cfg.max_iter = a.max_iter;
    const Decomposition d = solve(problem, cfg);
    const DecompositionReport rep = verify_decomposition(d, problem);

    json doc;
    doc["x"] = json::parse(to_json_text(d.x));
    doc["residual_rel"] = d.residual_rel;
    doc["mixed_norm"] = d.mixed_norm;
    doc["iterations"] = d.iterations;
    doc["prefix_residuals"] = d.prefix_residuals;
    doc["partial_sum_sup"] = d.partial_sum_sup;
    doc["status"] = to_string(d.status);
    doc["rings"] = problem.rings();
    doc["truncation"] = problem.truncation();
    doc["active_rings"] = d.active_rings;
    doc["synthesis_bound"] = rep.synthesis_bound;
    doc["truncation_tail"] = rep.truncation_tail;

    json params = {{"function", a.function}, {"rings", a.rings}, {"truncation", problem.truncation()},
                   {"tol", a.tol},           {"mu_stages", a.mu_stages}, {"max_iter", a.max_iter}};
    emit_json(a.out, std::move(doc), manifest("decompose", params, std::nullopt), io);

    if (d.status == SolveStatus::NonConvergence) {
        io.err << fmt::format("decompose: residual {} exceeds tol {} after {} iterations\n", num(d.residual_rel),
                              num(a.tol), d.iterations);
        return kExitViolation;
    }
    if (!rep.bound_holds) {
        io.err << fmt::format("decompose: synthesis norm {} exceeds bound {}\n", num(rep.synthesis_norm),
                              num(rep.synthesis_bound));
        return kExitViolation;
    }
    return kExitOk;
}

struct ReconstructArgs {
    std::string decomp;
    std::string out = "-";
};

int run_reconstruct(const ReconstructArgs& a, Streams& io) {
    const std::string text = read_input(a.decomp, io);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("decomposition JSON: ") + e.what());
    }
    if (!doc.contains("x") || !doc.contains("truncation") || !doc["truncation"].is_number_unsigned()) {
        throw FormatError("decomposition JSON needs \"x\" and \"truncation\"");
    }
    const MixedCoefficients x = mixed_from_json_text(doc["x"].dump());
    const auto truncation = doc["truncation"].get<std::size_t>();
    const HardyFunction fhat = synthesis_partial_sum(x, build_grid(x.rings()), truncation);
    emit_json(a.out, json::parse(to_json_text(fhat)),
              manifest("reconstruct", {{"decomp", a.decomp}}, std::nullopt), io);
    return kExitOk;
}

// ---------------------------------------------------------------- report

struct ReportArgs {
    std::vector<std::string> inputs;
    std::string out = "-";
};

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
}

int run_report(const ReportArgs& a, Streams& io) {
    json files = json::array();
    std::size_t total_violations = 0;
    for (const auto& path : a.inputs) {
        std::stringstream text(read_input(path, io));
        std::string line;
        if (!std::getline(text, line)) throw FormatError("empty CSV: " + path);
        const auto header = split_csv_line(line);
        std::vector<double> lo(header.size(), std::numeric_limits<double>::infinity());
        std::vector<double> hi(header.size(), -std::numeric_limits<double>::infinity());
        const auto margin_col = std::find(header.begin(), header.end(), "margin") - header.begin();
        const auto bound_col = std::find(header.begin(), header.end(), "bound") - header.begin();
        const bool has_margin = static_cast<std::size_t>(margin_col) < header.size();
        std::size_t rows = 0;
        std::size_t violations = 0;
        json worst;
        double worst_margin = std::numeric_limits<double>::infinity();
        while (std::getline(text, line)) {
            if (line.empty()) continue;
            const auto cells = split_csv_line(line);
            if (cells.size() != header.size()) {
                throw FormatError(fmt::format("{}: row {} has {} cells, header has {}", path, rows + 1,
                                              cells.size(), header.size()));
            }
            std::vector<double> values(cells.size());
            for (std::size_t c = 0; c < cells.size(); ++c) {
                try {
                    values[c] = std::stod(cells[c]);
                } catch (const std::exception&) {
                    throw FormatError(fmt::format("{}: non-numeric cell '{}'", path, cells[c]));
                }
                lo[c] = std::min(lo[c], values[c]);
                hi[c] = std::max(hi[c], values[c]);
            }
            if (has_margin) {
                const double m = values[static_cast<std::size_t>(margin_col)];
                const double b = static_cast<std::size_t>(bound_col) < header.size()
                                     ? std::abs(values[static_cast<std::size_t>(bound_col)])
                                     : 0.0;
                if (m + kTolerance * (1.0 + b) < 0.0) ++violations;
                if (m < worst_margin) {
                    worst_margin = m;
                    worst = json::object();
                    for (std::size_t c = 0; c < header.size(); ++c) worst[header[c]] = values[c];
                }
            }
            ++rows;
        }
        json entry = {{"path", path}, {"rows", rows}};
        json columns = json::object();
        for (std::size_t c = 0; c < header.size(); ++c) {
            columns[header[c]] = rows > 0 ? json{{"min", lo[c]}, {"max", hi[c]}} : json(nullptr);
        }
        entry["columns"] = columns;
        if (has_margin) {
            entry["min_margin"] = rows > 0 ? json(worst_margin) : json(nullptr);
            entry["worst_row"] = worst;
            entry["violations"] = violations;
        }
        total_violations += violations;
        files.push_back(std::move(entry));
    }
    json doc = {{"files", files}, {"total_violations", total_violations}};
    emit_json(a.out, std::move(doc), manifest("report", {{"inputs", a.inputs}}, std::nullopt), io);
    if (total_violations > 0) {
        io.err << fmt::format("report: {} violated row(s) across inputs\n", total_violations);
        return kExitViolation;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, Streams io) {
    CLI::App app{"Szego-kernel representing system on the ring grid: verification and decomposition"};
    app.name("szego-frames");
    app.require_subcommand(1);

    GridArgs grid_args;
    auto* grid = app.add_subcommand("grid", "Emit the ring grid nodes as CSV");
    grid->add_option("--rings", grid_args.rings, "Ring count K")->required()->check(CLI::PositiveNumber);
    grid->add_option("--out", grid_args.out, "Output path or - for stdout");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Randomized checks of the discrete-norm inequalities");
    verify->add_option("which", verify_args.which, "lemma3 | lemma4 | eq5")
        ->required()
        ->check(CLI::IsMember({"lemma3", "lemma4", "eq5"}));
    verify->add_option("--degree", verify_args.degree, "Polynomial degree N")->required();
    verify->add_option("--rings", verify_args.rings, "k for lemma3, max k for lemma4, K for eq5")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--trials", verify_args.trials, "Number of random trials");
    verify->add_option("--seed", verify_args.seed, "Generator seed");
    verify->add_option("--out", verify_args.out, "Output path or - for stdout");

    FrameArgs frame_args;
    auto* frame = app.add_subcommand("frame-bounds", "Empirical mixed-norm frame bounds");
    frame->add_option("--rings", frame_args.rings, "Ring count K")->required()->check(CLI::PositiveNumber);
    frame->add_option("--trials", frame_args.trials, "Number of random polynomials");
    frame->add_option("--degree", frame_args.degree, "Maximum degree N")->required();
    frame->add_option("--seed", frame_args.seed, "Generator seed");
    frame->add_option("--out", frame_args.out, "Output path or - for stdout");

    DsArgs ds_args;
    auto* ds = app.add_subcommand("ds-divergence", "Partial sums of squared kernel pairings");
    ds->add_option("--rings", ds_args.rings, "Ring count K")->required()->check(CLI::PositiveNumber);
    ds->add_option("--function", ds_args.function, "HardyFunction JSON path or -")->required();
    ds->add_option("--out", ds_args.out, "Output path or - for stdout");

    DecomposeArgs dec_args;
    auto* dec = app.add_subcommand("decompose", "Compute l1(l2) coefficients of a target function");
    dec->add_option("--function", dec_args.function, "HardyFunction JSON path or -")->required();
    dec->add_option("--rings", dec_args.rings, "Ring count K")->required()->check(CLI::PositiveNumber);
    dec->add_option("--truncation", dec_args.truncation, "Taylor rows M (default max(2N, 32))");
    dec->add_option("--tol", dec_args.tol, "Relative residual target")->check(CLI::PositiveNumber);
    dec->add_option("--mu-stages", dec_args.mu_stages, "Continuation stages")->check(CLI::PositiveNumber);
    dec->add_option("--max-iter", dec_args.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
    dec->add_option("--out", dec_args.out, "Output path or - for stdout");

    ReconstructArgs rec_args;
    auto* rec = app.add_subcommand("reconstruct", "Synthesize a function from a decomposition");
    rec->add_option("--decomp", rec_args.decomp, "Decomposition JSON path or -")->required();
    rec->add_option("--out", rec_args.out, "Output path or - for stdout");

    ReportArgs rep_args;
    auto* rep = app.add_subcommand("report", "Summarize CSV outputs into one JSON");
    rep->add_option("--inputs", rep_args.inputs, "CSV files")->required();
    rep->add_option("--out", rep_args.out, "Output path or - for stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        io.out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        io.err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*grid) return run_grid(grid_args, io);
        if (*verify) return run_verify(verify_args, io);
        if (*frame) return run_frame_bounds(frame_args, io);
        if (*ds) return run_ds(ds_args, io);
        if (*dec) return run_decompose(dec_args, io);
        if (*rec) return run_reconstruct(rec_args, io);
        if (*rep) return run_report(rep_args, io);
    } catch (const UsageError& e) {
        io.err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FormatError& e) {
        io.err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        io.err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IllConditionedError& e) {
        io.err << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}

}  // namespace szego::cli
