#pragma once

#include <charconv>
#include <string>
#include <vector>

#include <json.hpp>

#include "zrec/moments.hpp"
#include "zrec/plan.hpp"
#include "zrec/proof_oracles.hpp"

namespace zrec {

/// Shortest decimal string that round-trips to the same double.  Used for
/// every number in JSON and CSV output so the two encodings carry identical
/// values and reports are byte-reproducible.
inline std::string num_str(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, end);
}

inline std::string num_str(long x) { return std::to_string(x); }

using json = nlohmann::ordered_json;

inline json plan_to_json(const QuadraturePlan& plan) {
    json j;
    j["lhs_cutoff_factor"] = num_str(plan.lhs_cutoff_factor);
    j["dual_cutoff"] = num_str(plan.dual_cutoff);
    j["panel_width"] = num_str(plan.panel_width);
    j["nodes_per_panel"] = plan.nodes_per_panel;
    j["em_start"] = plan.em_start;
    j["em_bernoulli_terms"] = plan.em_bernoulli_terms;
    j["sum_cutoff_multiplier"] = num_str(plan.sum_cutoff_multiplier);
    j["y_max"] = num_str(plan.y_max);
    j["target_abs_tol"] = num_str(plan.target_abs_tol);
    return j;
}

inline json moment_report_to_json(const MomentReport& r) {
    json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["T"] = num_str(r.T);
    j["lhs"] = num_str(r.lhs);
    j["main"] = num_str(r.main);
    j["dual"] = num_str(r.dual);
    j["dual_imag_residual"] = num_str(r.dual_imag_residual);
    j["residual"] = num_str(r.residual);
    j["bound_scale"] = num_str(r.bound_scale);
    j["normalized_residual"] = num_str(r.normalized_residual);
    j["quadrature_error_estimate"] = num_str(r.quadrature_error_estimate);
    return j;
}

inline const char* moment_csv_header() {
    return "p,q,T,lhs,main,dual,dual_imag_residual,residual,bound_scale,"
           "normalized_residual,quadrature_error_estimate";
}

inline std::string moment_report_to_csv_row(const MomentReport& r) {
    std::string row;
    row += num_str(r.p);
    row += ',';
    row += num_str(r.q);
    row += ',';
    row += num_str(r.T);
    row += ',';
    row += num_str(r.lhs);
    row += ',';
    row += num_str(r.main);
    row += ',';
    row += num_str(r.dual);
    row += ',';
    row += num_str(r.dual_imag_residual);
    row += ',';
    row += num_str(r.residual);
    row += ',';
    row += num_str(r.bound_scale);
    row += ',';
    row += num_str(r.normalized_residual);
    row += ',';
    row += num_str(r.quadrature_error_estimate);
    return row;
}

inline json corollary_report_to_json(const CorollaryReport& r) {
    json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["T"] = num_str(r.T);
    j["forward"] = num_str(r.forward);
    j["reverse"] = num_str(r.reverse);
    j["difference"] = num_str(r.difference);
    j["bound_scale"] = num_str(r.bound_scale);
    j["normalized_difference"] = num_str(r.normalized_difference);
    j["imag_residual"] = num_str(r.imag_residual);
    j["quadrature_error_estimate"] = num_str(r.quadrature_error_estimate);
    return j;
}

inline json ledger_to_json(const IntermediateLedger& led) {
    json j;
    j["f0_direct"] = {{"re", num_str(led.f0_direct.real())}, {"im", num_str(led.f0_direct.imag())}};
    j["f0_error"] = num_str(led.f0_error);
    j["pole_correction"] = {{"re", num_str(led.pole_correction.real())},
                            {"im", num_str(led.pole_correction.imag())}};
    j["pole_error"] = num_str(led.pole_error);
    j["f1_0"] = num_str(led.f1_0);
    j["f1_error"] = num_str(led.f1_error);
    j["f2_0_exact"] = num_str(led.f2_0_exact);
    j["f2_error"] = num_str(led.f2_error);
    j["f2_0_cos_sum"] = num_str(led.f2_0_cos_sum);
    j["f2_cos_error"] = num_str(led.f2_cos_error);
    j["f3_0"] = num_str(led.f3_0);
    j["f3_error"] = num_str(led.f3_error);
    j["decomposition_residual"] = num_str(led.decomposition_residual);
    j["approx_gap"] = num_str(led.approx_gap);
    j["combined_error_budget"] = num_str(led.combined_error_budget);
    j["within_budget"] = led.within_budget;
    return j;
}

} // namespace zrec
