// Command-line front door: theorem/corollary verification, intermediate
// ledgers, grid sweeps, and the self-test table, with JSON or CSV reports.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "zrec/zrec.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid_input = 2;
constexpr int exit_tolerance = 3;
constexpr int exit_io = 4;

constexpr const char* tool_version = "1.0.0";

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

void add_plan_options(CLI::App* cmd, zrec::QuadraturePlan& plan) {
    cmd->add_option("--lhs-cutoff-factor", plan.lhs_cutoff_factor);
    cmd->add_option("--dual-cutoff", plan.dual_cutoff);
    cmd->add_option("--panel-width", plan.panel_width);
    cmd->add_option("--nodes-per-panel", plan.nodes_per_panel);
    cmd->add_option("--em-start", plan.em_start);
    cmd->add_option("--em-bernoulli-terms", plan.em_bernoulli_terms);
    cmd->add_option("--sum-cutoff-multiplier", plan.sum_cutoff_multiplier);
    cmd->add_option("--y-max", plan.y_max);
    cmd->add_option("--target-abs-tol", plan.target_abs_tol);
}

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out.out_path,
                    "Output file; relative paths resolve under ZREC_OUTPUT_DIR when set");
}

std::filesystem::path resolve_output_path(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("ZREC_OUTPUT_DIR")) p = std::filesystem::path(dir) / p;
    }
    return p;
}

// Writes the report to --out or stdout; returns an exit code.
int emit(const std::string& text, const OutputOptions& out) {
    if (out.out_path.empty()) {
        std::cout << text << '\n';
        return exit_ok;
    }
    const std::filesystem::path path = resolve_output_path(out.out_path);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << path.string() << " for writing\n";
        return exit_io;
    }
    file << text << '\n';
    if (!file.good()) {
        std::cerr << "error: write failed for " << path.string() << "\n";
        return exit_io;
    }
    return exit_ok;
}

zrec::json metadata_json() {
    zrec::json m;
    m["tool"] = "zrec";
    m["version"] = tool_version;
    m["generated_at_unix"] = std::to_string(std::time(nullptr));
    return m;
}

zrec::json invariant_json(const std::string& name, double value, double threshold, bool pass) {
    zrec::json j;
    j["name"] = name;
    j["value"] = zrec::num_str(value);
    j["threshold"] = zrec::num_str(threshold);
    j["pass"] = pass;
    return j;
}

std::vector<long> parse_longs(const std::vector<std::string>& raw) {
    std::vector<long> values;
    for (const std::string& chunk : raw) {
        std::size_t start = 0;
        while (start <= chunk.size()) {
            const std::size_t comma = chunk.find(',', start);
            const std::string item = chunk.substr(start, comma - start);
            if (!item.empty()) values.push_back(std::stol(item));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return values;
}

std::vector<double> parse_doubles(const std::vector<std::string>& raw) {
    std::vector<double> values;
    for (const std::string& chunk : raw) {
        std::size_t start = 0;
        while (start <= chunk.size()) {
            const std::size_t comma = chunk.find(',', start);
            const std::string item = chunk.substr(start, comma - start);
            if (!item.empty()) values.push_back(std::stod(item));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return values;
}

struct TheoremInvariants {
    std::vector<zrec::json> rows;
    bool all_pass = true;

    void check(const std::string& name, double value, double threshold) {
        const bool pass = value <= threshold;
        rows.push_back(invariant_json(name, value, threshold, pass));
        all_pass = all_pass && pass;
    }
};

int run_verify_theorem(long p, long q, double T, const zrec::QuadraturePlan& plan,
                       const OutputOptions& out, const zrec::json& config) {
    const zrec::ReciprocityInstance inst(p, q, T);
    const zrec::MomentReport rep = zrec::verify_theorem(inst, plan);

    TheoremInvariants inv;
    inv.check("normalized_residual_within_calibration", std::abs(rep.normalized_residual),
              1.5 * zrec::calibration::theorem_normalized_residual);
    inv.check("dual_imag_residual", rep.dual_imag_residual, 1e-9);
    inv.check("quadrature_error_estimate", rep.quadrature_error_estimate, 1e-6);

    std::string text;
    if (out.format == "csv") {
        text = std::string(zrec::moment_csv_header()) + "\n" + zrec::moment_report_to_csv_row(rep);
    } else {
        zrec::json j;
        j["config"] = config;
        j["plan"] = zrec::plan_to_json(plan);
        j["results"] = zrec::json::array({zrec::moment_report_to_json(rep)});
        j["invariants"] = inv.rows;
        j["metadata"] = metadata_json();
        text = j.dump(2);
    }
    const int io = emit(text, out);
    if (io != exit_ok) return io;
    std::cerr << (inv.all_pass ? "PASS" : "FAIL") << " verify-theorem p=" << p << " q=" << q
              << " T=" << T << " residual=" << rep.residual << "\n";
    return inv.all_pass ? exit_ok : exit_tolerance;
}

int run_verify_corollary(long p, long q, double T, const zrec::QuadraturePlan& plan,
                         const OutputOptions& out, const zrec::json& config) {
    const zrec::CorollaryReport rep = zrec::verify_corollary(p, q, T, plan);

    TheoremInvariants inv;
    inv.check("normalized_difference_within_calibration", std::abs(rep.normalized_difference),
              1.5 * zrec::calibration::corollary_normalized_difference);
    inv.check("imag_residual", rep.imag_residual, 1e-9);

    std::string text;
    if (out.format == "csv") {
        text = "p,q,T,forward,reverse,difference,bound_scale,normalized_difference,"
               "imag_residual,quadrature_error_estimate\n";
        text += zrec::num_str(rep.p) + ',' + zrec::num_str(rep.q) + ',' + zrec::num_str(rep.T) +
                ',' + zrec::num_str(rep.forward) + ',' + zrec::num_str(rep.reverse) + ',' +
                zrec::num_str(rep.difference) + ',' + zrec::num_str(rep.bound_scale) + ',' +
                zrec::num_str(rep.normalized_difference) + ',' + zrec::num_str(rep.imag_residual) +
                ',' + zrec::num_str(rep.quadrature_error_estimate);
    } else {
        zrec::json j;
        j["config"] = config;
        j["plan"] = zrec::plan_to_json(plan);
        j["results"] = zrec::json::array({zrec::corollary_report_to_json(rep)});
        j["invariants"] = inv.rows;
        j["metadata"] = metadata_json();
        text = j.dump(2);
    }
    const int io = emit(text, out);
    if (io != exit_ok) return io;
    std::cerr << (inv.all_pass ? "PASS" : "FAIL") << " verify-corollary p=" << p << " q=" << q
              << " T=" << T << " difference=" << rep.difference << "\n";
    return inv.all_pass ? exit_ok : exit_tolerance;
}

int run_intermediates(long p, long q, double T, const zrec::QuadraturePlan& plan,
                      const OutputOptions& out, const zrec::json& config) {
    const zrec::ReciprocityInstance inst(p, q, T);
    const zrec::IntermediateLedger led = zrec::decomposition_check(inst, plan);
    const zrec::ResidueCheck res = zrec::residue_main_term_check(inst, plan);
    const zrec::SplitCheck split = zrec::character_split_check(inst, 2000);
    const zrec::MellinPairCheck mellin = zrec::mellin_pair_check(plan);

    TheoremInvariants inv;
    inv.check("decomposition_residual", led.decomposition_residual, 1e-6);
    inv.check("approx_gap_within_calibration", led.approx_gap,
              1.5 * zrec::calibration::taylor_approx_gap *
                  std::sqrt(double(p) / double(q)));
    inv.check("residue_main_term_diff", res.diff, 1e-8);
    inv.check("character_split_difference", split.difference, 1e-10);
    inv.check("mellin_pair_max_residual", mellin.max_residual, 1e-8);

    std::string text;
    if (out.format == "csv") {
        text = "p,q,T,f0_re,f0_im,pole_re,pole_im,f1_0,f2_0_exact,f2_0_cos_sum,f3_0,"
               "decomposition_residual,approx_gap,residue_diff,split_difference,mellin_residual\n";
        text += zrec::num_str(p) + ',' + zrec::num_str(q) + ',' + zrec::num_str(T) + ',' +
                zrec::num_str(led.f0_direct.real()) + ',' + zrec::num_str(led.f0_direct.imag()) +
                ',' + zrec::num_str(led.pole_correction.real()) + ',' +
                zrec::num_str(led.pole_correction.imag()) + ',' + zrec::num_str(led.f1_0) + ',' +
                zrec::num_str(led.f2_0_exact) + ',' + zrec::num_str(led.f2_0_cos_sum) + ',' +
                zrec::num_str(led.f3_0) + ',' + zrec::num_str(led.decomposition_residual) + ',' +
                zrec::num_str(led.approx_gap) + ',' + zrec::num_str(res.diff) + ',' +
                zrec::num_str(split.difference) + ',' + zrec::num_str(mellin.max_residual);
    } else {
        zrec::json j;
        j["config"] = config;
        j["plan"] = zrec::plan_to_json(plan);
        zrec::json ledger = zrec::ledger_to_json(led);
        ledger["residue_main_term"] = {{"contour", zrec::num_str(res.contour)},
                                       {"closed_form", zrec::num_str(res.closed_form)},
                                       {"diff", zrec::num_str(res.diff)}};
        ledger["character_split_difference"] = zrec::num_str(split.difference);
        ledger["mellin_pair_max_residual"] = zrec::num_str(mellin.max_residual);
        j["results"] = zrec::json::array({ledger});
        j["invariants"] = inv.rows;
        j["metadata"] = metadata_json();
        text = j.dump(2);
    }
    const int io = emit(text, out);
    if (io != exit_ok) return io;
    std::cerr << (inv.all_pass ? "PASS" : "FAIL") << " intermediates p=" << p << " q=" << q
              << " T=" << T << " decomposition_residual=" << led.decomposition_residual << "\n";
    return inv.all_pass ? exit_ok : exit_tolerance;
}

int run_sweep(const std::vector<long>& ps, const std::vector<long>& qs,
              const std::vector<double>& Ts, const zrec::QuadraturePlan& plan,
              const OutputOptions& out, const zrec::json& config) {
    std::vector<std::tuple<long, long, double>> grid;
    for (long p : ps)
        for (long q : qs)
            for (double T : Ts)
                if (p != q) grid.emplace_back(p, q, T);
    std::sort(grid.begin(), grid.end());
    if (grid.empty()) {
        std::cerr << "error: sweep grid is empty (all p = q?)\n";
        return exit_invalid_input;
    }

    // worker pool over instances; each instance is internally deterministic,
    // so the assembled report is identical for any worker count
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), grid.size());
    std::vector<zrec::MomentReport> reports(grid.size());
    std::vector<std::future<void>> tasks;
    for (std::size_t w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < grid.size(); i += workers) {
                auto [p, q, T] = grid[i];
                reports[i] = zrec::verify_theorem({p, q, T}, plan);
            }
        }));
    }
    for (auto& t : tasks) t.get();

    TheoremInvariants inv;
    for (const zrec::MomentReport& rep : reports) {
        const std::string tag = "p=" + std::to_string(rep.p) + ",q=" + std::to_string(rep.q) +
                                ",T=" + zrec::num_str(rep.T);
        inv.check("normalized_residual(" + tag + ")", std::abs(rep.normalized_residual),
                  1.5 * zrec::calibration::theorem_normalized_residual);
        inv.check("dual_imag_residual(" + tag + ")", rep.dual_imag_residual, 1e-9);
        std::cerr << "  swept " << tag << " residual=" << rep.residual << "\n";
    }

    std::string text;
    if (out.format == "csv") {
        text = std::string(zrec::moment_csv_header());
        for (const auto& rep : reports) {
            text += '\n';
            text += zrec::moment_report_to_csv_row(rep);
        }
    } else {
        zrec::json j;
        j["config"] = config;
        j["plan"] = zrec::plan_to_json(plan);
        zrec::json rows = zrec::json::array();
        for (const auto& rep : reports) rows.push_back(zrec::moment_report_to_json(rep));
        j["results"] = rows;
        j["invariants"] = inv.rows;
        j["metadata"] = metadata_json();
        text = j.dump(2);
    }
    const int io = emit(text, out);
    if (io != exit_ok) return io;
    std::cerr << (inv.all_pass ? "PASS" : "FAIL") << " sweep over " << grid.size()
              << " instances\n";
    return inv.all_pass ? exit_ok : exit_tolerance;
}

int run_selftest_command(const std::string& fault_name, const OutputOptions& out,
                         const zrec::json& config) {
    zrec::FaultInjection fault = zrec::FaultInjection::none;
    if (fault_name == "gauss-sum-sign") fault = zrec::FaultInjection::gauss_sum_sign;
    else if (!fault_name.empty()) {
        std::cerr << "error: unknown fault '" << fault_name << "'\n";
        return exit_invalid_input;
    }

    const std::vector<zrec::CheckResult> checks = zrec::run_selftest(fault);
    bool all_pass = true;
    std::printf("%-45s %12s %12s %s\n", "check", "observed", "threshold", "result");
    for (const auto& c : checks) {
        std::printf("%-45s %12.3e %12.3e %s\n", c.name.c_str(), c.observed, c.threshold,
                    c.pass ? "pass" : "FAIL");
        all_pass = all_pass && c.pass;
    }
    std::printf("selftest: %s\n", all_pass ? "all checks passed" : "FAILURES present");

    if (!out.out_path.empty() || out.format == "json") {
        zrec::json j;
        j["config"] = config;
        zrec::json rows = zrec::json::array();
        for (const auto& c : checks)
            rows.push_back(invariant_json(c.name, c.observed, c.threshold, c.pass));
        j["invariants"] = rows;
        j["metadata"] = metadata_json();
        if (!out.out_path.empty()) {
            const int io = emit(j.dump(2), out);
            if (io != exit_ok) return io;
        }
    }
    return all_pass ? exit_ok : exit_tolerance;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of a reciprocity relation for the twisted second "
                 "moment of the Riemann zeta function"};
    app.require_subcommand(1);

    zrec::QuadraturePlan plan;
    OutputOptions out;
    long p = 0, q = 0;
    double T = 0.0;
    std::vector<std::string> p_list, q_list, T_list;
    std::string fault_name;

    CLI::App* theorem = app.add_subcommand("verify-theorem", "Verify one theorem instance");
    theorem->add_option("--p", p, "odd prime")->required();
    theorem->add_option("--q", q, "odd prime distinct from p")->required();
    theorem->add_option("--T", T, "weight scale, > 1")->required();
    add_plan_options(theorem, plan);
    add_output_options(theorem, out);

    CLI::App* corollary = app.add_subcommand("verify-corollary", "Verify one corollary instance");
    corollary->add_option("--p", p)->required();
    corollary->add_option("--q", q)->required();
    corollary->add_option("--T", T)->required();
    add_plan_options(corollary, plan);
    add_output_options(corollary, out);

    CLI::App* inter = app.add_subcommand("intermediates", "Proof-chain intermediate ledger");
    inter->add_option("--p", p)->required();
    inter->add_option("--q", q)->required();
    inter->add_option("--T", T)->required();
    add_plan_options(inter, plan);
    add_output_options(inter, out);

    CLI::App* sweep = app.add_subcommand("sweep", "Verify a grid of instances");
    sweep->add_option("--p", p_list, "comma-separated odd primes")->required();
    sweep->add_option("--q", q_list, "comma-separated odd primes")->required();
    sweep->add_option("--T", T_list, "comma-separated weight scales")->required();
    add_plan_options(sweep, plan);
    add_output_options(sweep, out);

    CLI::App* selftest = app.add_subcommand("selftest", "Run the invariant suite");
    selftest->add_option("--inject-fault", fault_name,
                         "testing hook: gauss-sum-sign flips the Gauss-sum sign");
    add_output_options(selftest, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid_input;
    }

    zrec::json config;
    try {
        plan.validate();
        if (theorem->parsed()) {
            config = {{"command", "verify-theorem"}, {"p", p}, {"q", q}, {"T", zrec::num_str(T)},
                      {"format", out.format}};
            return run_verify_theorem(p, q, T, plan, out, config);
        }
        if (corollary->parsed()) {
            config = {{"command", "verify-corollary"}, {"p", p}, {"q", q}, {"T", zrec::num_str(T)},
                      {"format", out.format}};
            return run_verify_corollary(p, q, T, plan, out, config);
        }
        if (inter->parsed()) {
            config = {{"command", "intermediates"}, {"p", p}, {"q", q}, {"T", zrec::num_str(T)},
                      {"format", out.format}};
            return run_intermediates(p, q, T, plan, out, config);
        }
        if (sweep->parsed()) {
            const std::vector<long> ps = parse_longs(p_list);
            const std::vector<long> qs = parse_longs(q_list);
            const std::vector<double> Ts = parse_doubles(T_list);
            if (ps.empty() || qs.empty() || Ts.empty()) {
                std::cerr << "error: sweep lists must be nonempty\n";
                return exit_invalid_input;
            }
            for (long v : ps)
                if (!zrec::is_odd_prime(v)) throw std::invalid_argument("p list: not an odd prime");
            for (long v : qs)
                if (!zrec::is_odd_prime(v)) throw std::invalid_argument("q list: not an odd prime");
            for (double v : Ts)
                if (!(v > 1.0)) throw std::invalid_argument("T list: values must exceed 1");
            zrec::json cfg_p = zrec::json::array();
            for (long v : ps) cfg_p.push_back(v);
            zrec::json cfg_q = zrec::json::array();
            for (long v : qs) cfg_q.push_back(v);
            zrec::json cfg_t = zrec::json::array();
            for (double v : Ts) cfg_t.push_back(zrec::num_str(v));
            config = {{"command", "sweep"}, {"p", cfg_p}, {"q", cfg_q}, {"T", cfg_t},
                      {"format", out.format}};
            return run_sweep(ps, qs, Ts, plan, out, config);
        }
        if (selftest->parsed()) {
            config = {{"command", "selftest"}, {"format", out.format}};
            if (!fault_name.empty()) config["inject_fault"] = fault_name;
            return run_selftest_command(fault_name, out, config);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid_input;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_tolerance;
    }
    return exit_invalid_input;
}
