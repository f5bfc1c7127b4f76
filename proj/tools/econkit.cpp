// econkit command-line tool.
//
//   econkit summary|adf|regress|report --data <csv> [options]
//
// stdout carries the rendered report, stderr carries diagnostics.
// Exit codes: 0 success, 1 usage error, 2 data error, 3 model error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "econkit/econkit.hpp"

namespace {

struct Options {
    std::string data;
    std::string config_path;
    bool no_diff = false;
    int hac_lag = 4;
    std::string hac_scaling = "standard";
    bool hac_small_sample = false;
    std::string adf_variant = "none";
    std::string adf_lags = "0";
    std::string format = "text";
};

void add_common_options(CLI::App* sub, Options& opt) {
    sub->add_option("--data", opt.data, "Input CSV (header: period,REER,USLR,M2,CPI,WIR)")
        ->envname("ECONKIT_DATA");
    sub->add_option("--config", opt.config_path, "key=value config file (flags take precedence)");
    sub->add_flag("--no-diff", opt.no_diff, "Regress on levels instead of first differences");
    sub->add_option("--hac-lag", opt.hac_lag, "Newey-West lag truncation L")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--hac-scaling", opt.hac_scaling, "Covariance scaling: standard|paper")
        ->check(CLI::IsMember({"standard", "paper"}));
    sub->add_flag("--hac-small-sample", opt.hac_small_sample,
                  "Multiply the HAC covariance by T/(T-k)");
    sub->add_option("--adf-variant", opt.adf_variant, "ADF deterministic terms: none|constant|trend")
        ->check(CLI::IsMember({"none", "constant", "trend"}));
    sub->add_option("--adf-lags", opt.adf_lags, "ADF lag order: N or aic:N");
    sub->add_option("--format", opt.format, "Output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

/// Plain key=value file ('#' comments, blank lines ignored). Command-line
/// flags win; config wins over built-in defaults.
std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw econkit::DataError("cannot read config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto trimmed = econkit::detail::trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw econkit::DataError("config line " + std::to_string(line_no) +
                                     ": expected key=value");
        kv[econkit::detail::trim(trimmed.substr(0, eq))] =
            econkit::detail::trim(trimmed.substr(eq + 1));
    }
    return kv;
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw econkit::DataError("config: expected boolean, got \"" + v + "\"");
}

void apply_config(const CLI::App* sub, Options& opt) {
    if (opt.config_path.empty()) return;
    const auto kv = read_config(opt.config_path);
    auto given = [&](const std::string& flag) { return sub->count(flag) > 0; };
    for (const auto& [key, value] : kv) {
        if (key == "data") {
            if (!given("--data")) opt.data = value;
        } else if (key == "no-diff") {
            if (!given("--no-diff")) opt.no_diff = parse_bool(value);
        } else if (key == "hac-lag") {
            if (!given("--hac-lag")) opt.hac_lag = std::stoi(value);
        } else if (key == "hac-scaling") {
            if (!given("--hac-scaling")) opt.hac_scaling = value;
        } else if (key == "hac-small-sample") {
            if (!given("--hac-small-sample")) opt.hac_small_sample = parse_bool(value);
        } else if (key == "adf-variant") {
            if (!given("--adf-variant")) opt.adf_variant = value;
        } else if (key == "adf-lags") {
            if (!given("--adf-lags")) opt.adf_lags = value;
        } else if (key == "format") {
            if (!given("--format")) opt.format = value;
        } else {
            throw econkit::DataError("config: unknown key \"" + key + "\"");
        }
    }
}

econkit::LagSelection parse_adf_lags(const std::string& text) {
    try {
        if (text.rfind("aic:", 0) == 0)
            return econkit::LagSelection::aic(std::stoi(text.substr(4)));
        return econkit::LagSelection::fixed(std::stoi(text));
    } catch (const std::invalid_argument&) {
        throw econkit::DataError("bad --adf-lags value \"" + text + "\" (want N or aic:N)");
    }
}

econkit::ReportConfig to_report_config(const Options& opt) {
    econkit::ReportConfig cfg;
    cfg.data_path = opt.data;
    cfg.difference = !opt.no_diff;
    cfg.hac.lag_truncation = opt.hac_lag;
    cfg.hac.scaling = opt.hac_scaling == "paper" ? econkit::HacScaling::paper_formula
                                                 : econkit::HacScaling::standard_sandwich;
    cfg.hac.small_sample_adjust = opt.hac_small_sample;
    if (opt.adf_variant == "constant") cfg.adf_variant = econkit::AdfVariant::constant;
    if (opt.adf_variant == "trend") cfg.adf_variant = econkit::AdfVariant::constant_trend;
    cfg.adf_lags = parse_adf_lags(opt.adf_lags);
    if (opt.format == "json") cfg.output_format = econkit::OutputFormat::json;
    if (opt.format == "csv") cfg.output_format = econkit::OutputFormat::csv;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quarterly time-series econometrics toolkit"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* sub_summary = app.add_subcommand("summary", "Descriptive statistics per variable");
    CLI::App* sub_adf = app.add_subcommand("adf", "Unit-root tests on levels and differences");
    CLI::App* sub_regress = app.add_subcommand("regress", "OLS with Newey-West standard errors");
    CLI::App* sub_report = app.add_subcommand("report", "Full report: summary, ADF, regression,"
                                                        " residual diagnostics");
    for (CLI::App* sub : {sub_summary, sub_adf, sub_regress, sub_report})
        add_common_options(sub, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? econkit::exit_ok : econkit::exit_usage;
    }

    try {
        const CLI::App* sub = app.get_subcommands().front();
        apply_config(sub, opt);
        const econkit::ReportConfig cfg = to_report_config(opt);

        econkit::ValidationReport findings;
        std::string out;
        if (sub == sub_summary)
            out = econkit::cmd_summary(cfg, &findings);
        else if (sub == sub_adf)
            out = econkit::cmd_adf(cfg, &findings);
        else if (sub == sub_regress)
            out = econkit::cmd_regress(cfg, &findings);
        else
            out = econkit::cmd_report(cfg, &findings);

        for (const auto& f : findings.findings) std::cerr << "warning: " << f.message << '\n';
        std::fputs(out.c_str(), stdout);
        return econkit::exit_ok;
    } catch (const econkit::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return econkit::exit_data_error;
    } catch (const econkit::ModelError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return econkit::exit_model_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return econkit::exit_model_error;
    }
}
